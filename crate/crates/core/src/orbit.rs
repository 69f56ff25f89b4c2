//! The orbit categories `C_{-d}(H) = D^b(H)/ν[d]` and
//! `C_{d+1}(H) = D^b(H)/ν⁻¹[d+1]`, modelled on their fundamental domains.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::derived::{DObject, DerivedCategory, Stalk, WindowKind, WindowSpec};
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrbitKind {
    /// `C_{-d}`, generated by `ν[d]`; Serre functor `[-d]`.
    Minus,
    /// `C_{d+1}`, generated by `ν⁻¹[d+1]`; Serre functor `[d+1]`.
    Plus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ambient {
    pub kind: OrbitKind,
    pub d: u32,
}

impl Ambient {
    pub fn minus(d: u32) -> Self {
        Ambient {
            kind: OrbitKind::Minus,
            d,
        }
    }

    pub fn plus(d: u32) -> Self {
        Ambient {
            kind: OrbitKind::Plus,
            d,
        }
    }

    /// The window of `D^b` that is a fundamental domain.
    pub fn window(&self) -> WindowSpec {
        let d = self.d as i32;
        match self.kind {
            OrbitKind::Minus => WindowSpec {
                kind: WindowKind::Minus,
                m: -d,
                n: 0,
            },
            OrbitKind::Plus => WindowSpec {
                kind: WindowKind::Plus,
                m: 1 - d,
                n: 0,
            },
        }
    }
}

/// An object of an orbit category, stored as its representative in the
/// fundamental domain.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitObject {
    pub ambient: Ambient,
    pub rep: DObject,
}

/// Orbit Hom values for `l` in this range are tabulated at construction.
const TABLE_MARGIN: i32 = 1;

pub struct OrbitCategory<'a, F: Field> {
    derived: &'a DerivedCategory<F>,
    ambient: Ambient,
    domain: Vec<Stalk>,
    index: BTreeMap<Stalk, usize>,
    lmin: i32,
    lmax: i32,
    table: Vec<usize>,
}

impl<F: Field> core::fmt::Debug for OrbitCategory<'_, F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("OrbitCategory")
            .field("ambient", &self.ambient)
            .field("domain", &self.domain.len())
            .finish()
    }
}

impl<'a, F: Field> OrbitCategory<'a, F> {
    /// Builds the fundamental domain and the Hom table, then checks the
    /// Calabi–Yau property that pins down the generator convention.
    pub fn new(derived: &'a DerivedCategory<F>, ambient: Ambient) -> Result<Self> {
        if ambient.d == 0 {
            return Err(Error::InvalidArgument("d must be at least 1".to_string()));
        }
        let domain = derived.window_indecomposables(&ambient.window());
        let index = domain.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let d = ambient.d as i32;
        let mut cat = OrbitCategory {
            derived,
            ambient,
            domain,
            index,
            lmin: -d - TABLE_MARGIN,
            lmax: d + 1 + TABLE_MARGIN,
            table: Vec::new(),
        };
        let len = cat.domain.len();
        let width = (cat.lmax - cat.lmin + 1) as usize;
        let mut table = alloc::vec![0; len * len * width];
        for a in 0..len {
            for b in 0..len {
                for l in cat.lmin..=cat.lmax {
                    table[(a * len + b) * width + (l - cat.lmin) as usize] =
                        cat.orbit_sum(cat.domain[a], cat.domain[b], l);
                }
            }
        }
        cat.table = table;
        cat.check_calabi_yau()?;
        Ok(cat)
    }

    fn check_calabi_yau(&self) -> Result<()> {
        let d = self.ambient.d as i32;
        let cy = match self.ambient.kind {
            OrbitKind::Minus => -d,
            OrbitKind::Plus => d + 1,
        };
        let len = self.domain.len();
        for a in 0..len {
            for b in 0..len {
                if self.hom_idx(a, b, cy) != self.hom_idx(b, a, 0) {
                    return Err(Error::TheoremViolation(alloc::format!(
                        "orbit category is not {cy}-Calabi-Yau at {:?}, {:?}",
                        self.domain[a],
                        self.domain[b]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn derived(&self) -> &'a DerivedCategory<F> {
        self.derived
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn domain(&self) -> &[Stalk] {
        &self.domain
    }

    pub fn index_of(&self, s: Stalk) -> Option<usize> {
        self.index.get(&s).copied()
    }

    pub fn fundamental_domain(&self) -> Vec<OrbitObject> {
        self.domain
            .iter()
            .map(|&s| OrbitObject {
                ambient: self.ambient,
                rep: DObject::stalk(s),
            })
            .collect()
    }

    pub fn generator(&self, s: Stalk) -> Stalk {
        let d = self.ambient.d as i32;
        match self.ambient.kind {
            OrbitKind::Minus => self.derived.nu_stalk(s).shifted(d),
            OrbitKind::Plus => self.derived.nu_inverse_stalk(s).shifted(d + 1),
        }
    }

    pub fn generator_inverse(&self, s: Stalk) -> Stalk {
        let d = self.ambient.d as i32;
        match self.ambient.kind {
            OrbitKind::Minus => self.derived.nu_inverse_stalk(s.shifted(-d)),
            OrbitKind::Plus => self.derived.nu_stalk(s.shifted(-d - 1)),
        }
    }

    /// The domain representative of the orbit of `s`. Shifts along an
    /// orbit increase strictly with the generator power, so a stalk left
    /// of the domain moves right and vice versa.
    pub fn project_stalk(&self, s: Stalk) -> Stalk {
        let mut cur = s;
        loop {
            if self.index.contains_key(&cur) {
                return cur;
            }
            cur = if cur.shift < 0 {
                self.generator(cur)
            } else {
                self.generator_inverse(cur)
            };
        }
    }

    pub fn project(&self, x: &DObject) -> OrbitObject {
        OrbitObject {
            ambient: self.ambient,
            rep: DObject::new(x.summands().iter().map(|&(s, m)| (self.project_stalk(s), m))),
        }
    }

    pub fn lift(&self, x: &OrbitObject) -> DObject {
        x.rep.clone()
    }

    /// `Σ_n dim Hom_D(a, G^n b [l])`, summed until the shifts of `G^n b`
    /// have moved past the two degrees where Hom can be nonzero and three
    /// consecutive terms vanished.
    pub fn orbit_sum(&self, a: Stalk, b: Stalk, l: i32) -> usize {
        let der = self.derived;
        let mut total = der.stalk_hom(a, b, l);
        for up in [true, false] {
            let mut cur = b;
            let mut zeros = 0;
            loop {
                cur = if up {
                    self.generator(cur)
                } else {
                    self.generator_inverse(cur)
                };
                let h = der.stalk_hom(a, cur, l);
                total += h;
                zeros = if h == 0 { zeros + 1 } else { 0 };
                let e = cur.shift + l - a.shift;
                let past = if up { e > 1 } else { e < 0 };
                if past && zeros >= 3 {
                    break;
                }
            }
        }
        total
    }

    /// Orbit Hom between domain entries, by index.
    pub fn hom_idx(&self, a: usize, b: usize, l: i32) -> usize {
        if (self.lmin..=self.lmax).contains(&l) {
            let len = self.domain.len();
            let width = (self.lmax - self.lmin + 1) as usize;
            self.table[(a * len + b) * width + (l - self.lmin) as usize]
        } else {
            self.orbit_sum(self.domain[a], self.domain[b], l)
        }
    }

    /// `dim Hom_C(a, b[l])` for indecomposables given by any lift.
    pub fn hom_stalks(&self, a: Stalk, b: Stalk, l: i32) -> usize {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.hom_idx(i, j, l),
            _ => self.orbit_sum(self.project_stalk(a), self.project_stalk(b), l),
        }
    }

    /// `dim Hom_C(X, Y[l])`.
    pub fn orbit_hom(&self, x: &OrbitObject, y: &OrbitObject, l: i32) -> Result<usize> {
        if x.ambient != self.ambient || y.ambient != self.ambient {
            return Err(Error::AmbientMismatch);
        }
        let mut total = 0;
        for &(a, ma) in x.rep.summands() {
            for &(b, mb) in y.rep.summands() {
                let h = match (self.index_of(a), self.index_of(b)) {
                    (Some(i), Some(j)) => self.hom_idx(i, j, l),
                    _ => self.orbit_sum(self.project_stalk(a), self.project_stalk(b), l),
                };
                total += ma * mb * h;
            }
        }
        Ok(total)
    }

    /// Arrows of the AR quiver on the fundamental domain: `X -> Y` when some
    /// lift `G^n Y` receives an irreducible map from `X` in `D^b`.
    pub fn ar_arrows(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &x) in self.domain.iter().enumerate() {
            for (j, &y) in self.domain.iter().enumerate() {
                if self.has_irreducible_lift(x, y) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn has_irreducible_lift(&self, x: Stalk, y: Stalk) -> bool {
        let der = self.derived;
        if der.is_irreducible(x, y) {
            return true;
        }
        for up in [true, false] {
            let mut cur = y;
            loop {
                cur = if up {
                    self.generator(cur)
                } else {
                    self.generator_inverse(cur)
                };
                let e = cur.shift - x.shift;
                if (up && e > 1) || (!up && e < 0) {
                    break;
                }
                if der.is_irreducible(x, cur) {
                    return true;
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::quiver_rep::Quiver;

    fn derived(label: &str) -> DerivedCategory<Rationals> {
        let q = Quiver::dynkin(label.parse().unwrap()).unwrap();
        DerivedCategory::new(&q, &Rationals).unwrap()
    }

    #[test]
    fn domain_sizes() {
        let a2 = derived("A2");
        assert_eq!(OrbitCategory::new(&a2, Ambient::minus(2)).unwrap().domain().len(), 7);
        assert_eq!(OrbitCategory::new(&a2, Ambient::plus(1)).unwrap().domain().len(), 5);
        let a1 = derived("A1");
        let c = OrbitCategory::new(&a1, Ambient::minus(3)).unwrap();
        let shifts: Vec<i32> = c.domain().iter().map(|s| s.shift).collect();
        assert_eq!(shifts, [0, 1, 2]);
        assert!(OrbitCategory::new(&a1, Ambient::minus(0)).is_err());
    }

    #[test]
    fn a1_projection_and_homs() {
        let a1 = derived("A1");
        let c = OrbitCategory::new(&a1, Ambient::minus(2)).unwrap();
        assert_eq!(c.project_stalk(Stalk::new(0, 5)), Stalk::new(0, 1));
        assert_eq!(c.project_stalk(Stalk::new(0, -3)), Stalk::new(0, 1));
        for d in 1..4u32 {
            let c = OrbitCategory::new(&a1, Ambient::minus(d)).unwrap();
            let s = DObject::stalk(Stalk::new(0, 0));
            let x = c.project(&s);
            for j in 0..2 * d as i32 {
                let y = c.project(&s.shifted(-j));
                let expect = usize::from(j % d as i32 == 0);
                assert_eq!(c.orbit_hom(&x, &y, 0).unwrap(), expect, "d={d} j={j}");
            }
        }
    }

    #[test]
    fn a2_simples_in_cluster_minus_one() {
        let a2 = derived("A2");
        let cat = a2.catalog();
        let c = OrbitCategory::new(&a2, Ambient::minus(1)).unwrap();
        let s1 = c.project(&DObject::stalk(Stalk::new(cat.simple_id(0), 0)));
        let s2 = c.project(&DObject::stalk(Stalk::new(cat.simple_id(1), 0)));
        assert_eq!(c.orbit_hom(&s1, &s2, 0).unwrap(), 0);
        assert_eq!(c.orbit_hom(&s1, &s2, 1).unwrap(), 1);
        let other = OrbitCategory::new(&a2, Ambient::minus(2)).unwrap();
        let t = other.project(&DObject::stalk(Stalk::new(cat.simple_id(0), 0)));
        assert_eq!(c.orbit_hom(&s1, &t, 0), Err(Error::AmbientMismatch));
    }
}
