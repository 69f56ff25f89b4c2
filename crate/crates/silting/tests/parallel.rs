use silting::RayonRunner;
use silting_core::classify::{verify_bijections, Budget, Classifier, Sequential, SetKind};
use silting_core::derived::DerivedCategory;
use silting_core::quiver_rep::Quiver;
use silting_core::Rationals;

fn derived(label: &str) -> DerivedCategory<Rationals> {
    DerivedCategory::new(&Quiver::dynkin(label.parse().unwrap()).unwrap(), &Rationals).unwrap()
}

#[test]
fn parallel_enumeration_matches_sequential() {
    let pool = RayonRunner::new(Some(4)).unwrap();
    for (label, d) in [("A4", 2), ("D4", 2)] {
        let der = derived(label);
        let cl = Classifier::new(&der, d).unwrap();
        for kind in SetKind::ALL {
            let seq = cl.enumerate(kind, &Sequential, &Budget::unlimited()).unwrap();
            let par = cl.enumerate(kind, &pool, &Budget::unlimited()).unwrap();
            assert_eq!(seq, par, "{label} d={d} {kind}");
        }
    }
}

#[test]
fn parallel_verify_a4_d3() {
    let pool = RayonRunner::new(None).unwrap();
    let der = derived("A4");
    let r = verify_bijections(&der, 3, &pool, &Budget::unlimited()).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.counts.sms, 612);
}
