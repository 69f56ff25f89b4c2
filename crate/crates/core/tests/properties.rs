mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use silting_core::derived::{DerivedCategory, Stalk};
use silting_core::orbit::{Ambient, OrbitCategory};
use silting_core::quiver_rep::{euler_form, Rep};
use silting_core::root_data::{fuss_catalan, make_root_datum, DynkinType, Family, Variant};
use silting_core::Rationals;

fn d4() -> &'static DerivedCategory<Rationals> {
    static CELL: OnceLock<DerivedCategory<Rationals>> = OnceLock::new();
    CELL.get_or_init(|| common::derived("D4"))
}

fn a4() -> &'static DerivedCategory<Rationals> {
    static CELL: OnceLock<DerivedCategory<Rationals>> = OnceLock::new();
    CELL.get_or_init(|| common::derived("A4"))
}

fn signed_dims(der: &DerivedCategory<Rationals>, id: usize) -> Vec<i64> {
    der.catalog().dim_vector(id).iter().map(|&v| v as i64).collect()
}

proptest! {
    #[test]
    fn euler_form_matches_hom_minus_ext(a in 0usize..12, b in 0usize..12) {
        let der = d4();
        let cat = der.catalog();
        let chi = euler_form(der.quiver(), &signed_dims(der, a), &signed_dims(der, b)).unwrap();
        prop_assert_eq!(cat.hom(a, b) as i64 - cat.ext(a, b) as i64, chi);
    }

    #[test]
    fn decompose_recovers_direct_sums(mults in proptest::collection::vec(0usize..3, 10)) {
        let der = a4();
        let cat = der.catalog();
        let parts: Vec<&Rep<Rationals>> = mults
            .iter()
            .enumerate()
            .flat_map(|(id, &m)| std::iter::repeat_n(cat.rep(id), m))
            .collect();
        let sum = Rep::direct_sum_all(&Rationals, der.quiver(), parts);
        let got = cat.decompose(&sum).unwrap();
        let want: Vec<(usize, usize)> = mults
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(id, &m)| (id, m))
            .collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn nakayama_is_invertible(ind in 0usize..12, shift in -4i32..5) {
        let der = d4();
        let s = Stalk::new(ind, shift);
        prop_assert_eq!(der.nu_inverse_stalk(der.nu_stalk(s)), s);
        prop_assert_eq!(der.nu_stalk(der.nu_inverse_stalk(s)), s);
    }

    #[test]
    fn serre_duality_on_shifted_stalks(a in 0usize..12, b in 0usize..12, s in -2i32..3, t in -2i32..3, l in -3i32..4) {
        let der = d4();
        let (x, y) = (Stalk::new(a, s), Stalk::new(b, t));
        prop_assert_eq!(der.stalk_hom(x, y, l), der.stalk_hom(y, der.nu_stalk(x), -l));
    }

    #[test]
    fn projection_is_invariant_under_the_generator(ind in 0usize..12, shift in -6i32..7, d in 1u32..4, minus in any::<bool>()) {
        let der = d4();
        let ambient = if minus { Ambient::minus(d) } else { Ambient::plus(d) };
        let orbit = OrbitCategory::new(der, ambient).unwrap();
        let s = Stalk::new(ind, shift);
        let p = orbit.project_stalk(s);
        prop_assert!(orbit.index_of(p).is_some());
        prop_assert_eq!(orbit.project_stalk(orbit.generator(s)), p);
        prop_assert_eq!(orbit.project_stalk(p), p);
    }

    #[test]
    fn orbit_homs_are_calabi_yau(a in 0usize..20, b in 0usize..20, l in -4i32..5, d in 1u32..4) {
        let der = a4();
        let orbit = OrbitCategory::new(der, Ambient::minus(d)).unwrap();
        let len = orbit.domain().len();
        let (x, y) = (orbit.domain()[a % len], orbit.domain()[b % len]);
        // the Serre functor of C_{-d} is [-d]
        prop_assert_eq!(orbit.hom_stalks(x, y, l), orbit.hom_stalks(y, x, -(d as i32) - l));
    }
}

#[test]
fn tau_is_a_bijection_between_nonprojectives_and_noninjectives() {
    for label in ["A4", "D4", "E6"] {
        let der = common::derived(label);
        let cat = der.catalog();
        for id in 0..cat.len() {
            match cat.tau(id) {
                Some(t) => {
                    assert!(!cat.is_injective(t), "{label}: τ lands on an injective");
                    assert_eq!(cat.tau_inverse(t), Some(id));
                }
                None => assert!(cat.is_projective(id)),
            }
        }
    }
}

#[test]
fn prime_field_agrees_with_rationals() {
    for label in ["D4", "E6"] {
        let q = common::derived(label);
        let p = common::derived_mod_p(label, 101);
        let (cq, cp) = (q.catalog(), p.catalog());
        assert_eq!(cq.len(), cp.len());
        assert_eq!(cq.hom_matrix(), cp.hom_matrix());
        assert_eq!(cq.ext_matrix(), cp.ext_matrix());
        for id in 0..cq.len() {
            assert_eq!(cq.nu(id), cp.nu(id));
        }
    }
}

#[test]
fn sms_counts_increase_with_d() {
    let datum = make_root_datum(DynkinType::new(Family::A, 3).unwrap()).unwrap();
    let counts: Vec<_> = (1..=12)
        .map(|d| fuss_catalan(&datum, d, Variant::Positive).unwrap())
        .collect();
    assert!(counts.windows(2).all(|w| w[0] < w[1]));
}
