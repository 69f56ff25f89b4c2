mod common;

use silting_core::classify::{
    k_theory_spans, order_leq, Budget, Classifier, ObjectSet, Sequential, SetKind,
};
use silting_core::derived::{DerivedCategory, Stalk};
use silting_core::quiver_rep::Quiver;
use silting_core::{Error, Rationals};

fn subsets(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            go(i + 1, len, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, len, k, &mut Vec::new(), &mut out);
    out
}

/// Every `n`-subset of the pool accepted by the predicate, canonically sorted.
fn brute_force(cl: &Classifier<'_, Rationals>, kind: SetKind) -> Vec<Vec<Stalk>> {
    let pool = cl.pool(kind);
    let n = cl.derived().rank();
    let mut out: Vec<Vec<Stalk>> = subsets(pool.len(), n)
        .into_iter()
        .map(|idx| {
            let mut s: Vec<Stalk> = idx.into_iter().map(|i| pool[i]).collect();
            s.sort();
            s
        })
        .filter(|s| cl.check(kind, s).is_ok())
        .collect();
    out.sort();
    out
}

fn enumerated(cl: &Classifier<'_, Rationals>, kind: SetKind) -> Vec<Vec<Stalk>> {
    cl.enumerate(kind, &Sequential, &Budget::unlimited())
        .unwrap()
        .into_iter()
        .map(|s| s.elements)
        .collect()
}

#[test]
fn clique_search_matches_subset_scan() {
    for (label, d) in [("A2", 1), ("A2", 2), ("A3", 1), ("A3", 2)] {
        let der = common::derived(label);
        let cl = Classifier::new(&der, d).unwrap();
        for kind in SetKind::ALL {
            assert_eq!(
                enumerated(&cl, kind),
                brute_force(&cl, kind),
                "{label} d={d} {kind}"
            );
        }
    }
}

#[test]
fn tilting_modules_of_a2() {
    let der = common::derived("A2");
    let cl = Classifier::new(&der, 1).unwrap();
    let c = der.catalog();
    let p1 = Stalk::new(c.projective_id(0), 0);
    let p2 = Stalk::new(c.projective_id(1), 0);
    let s1 = Stalk::new(c.simple_id(0), 0);
    let mut want = vec![vec![p1, p2], vec![p1, s1]];
    for w in &mut want {
        w.sort();
    }
    want.sort();
    assert_eq!(enumerated(&cl, SetKind::Silting), want);
}

fn counts(der: &DerivedCategory<Rationals>, d: u32) -> Vec<usize> {
    let cl = Classifier::new(der, d).unwrap();
    SetKind::ALL
        .iter()
        .map(|&k| cl.enumerate(k, &Sequential, &Budget::unlimited()).unwrap().len())
        .collect()
}

#[test]
fn counts_do_not_depend_on_orientation() {
    let cases = [
        ("A3", vec![(0, 1), (2, 1)]),
        ("A4", vec![(1, 0), (1, 2), (3, 2)]),
        ("D4", vec![(1, 0), (2, 1), (3, 1)]),
    ];
    for (label, arrows) in cases {
        let ty = label.parse().unwrap();
        let other = DerivedCategory::new(&Quiver::dynkin_oriented(ty, arrows).unwrap(), &Rationals).unwrap();
        let default = common::derived(label);
        for d in 1..=2 {
            assert_eq!(counts(&default, d), counts(&other, d), "{label} d={d}");
        }
    }
}

#[test]
fn k_theory_only_gives_false_positives() {
    for (label, d) in [("A3", 1), ("A3", 2), ("D4", 1), ("A4", 2)] {
        let der = common::derived(label);
        let cl = Classifier::new(&der, d).unwrap();
        let candidates = cl
            .candidates(SetKind::Silting, &Sequential, &Budget::unlimited())
            .unwrap();
        for set in candidates {
            if cl.check(SetKind::Silting, &set).is_ok() {
                assert!(k_theory_spans(&der, &set), "{label} d={d}: {set:?}");
            }
        }
    }
}

#[test]
fn orders_are_antisymmetric() {
    let der = common::derived("A3");
    let cl = Classifier::new(&der, 1).unwrap();
    for kind in [SetKind::Silting, SetKind::SmcMinus, SetKind::SmcPlain] {
        let sets = cl.enumerate(kind, &Sequential, &Budget::unlimited()).unwrap();
        for a in &sets {
            assert!(order_leq(&der, a, a).unwrap());
            for b in &sets {
                if a != b {
                    assert!(!(order_leq(&der, a, b).unwrap() && order_leq(&der, b, a).unwrap()));
                }
            }
        }
    }
}

#[test]
fn order_rejects_mixed_kinds() {
    let der = common::derived("A2");
    let a = ObjectSet::new(SetKind::Silting, 1, vec![]);
    let b = ObjectSet::new(SetKind::SmcMinus, 1, vec![]);
    assert_eq!(order_leq(&der, &a, &b), Err(Error::KindMismatch));
    let s = ObjectSet::new(SetKind::Sms, 1, vec![]);
    assert_eq!(order_leq(&der, &s, &s), Err(Error::KindMismatch));
}

#[test]
fn small_budget_is_reported() {
    let der = common::derived("A4");
    let cl = Classifier::new(&der, 2).unwrap();
    let r = cl.enumerate(SetKind::Sms, &Sequential, &Budget::new(Some(5)));
    assert_eq!(r, Err(Error::BudgetExceeded(5)));
}

#[test]
fn valued_types_are_not_enumerated() {
    let err = Quiver::dynkin("B3".parse().unwrap()).unwrap_err();
    assert!(matches!(err, Error::Unsupported(_)));
    assert!(err.to_string().contains("use `count`"));
}

#[test]
fn a1_with_large_d() {
    let der = common::derived("A1");
    let cl = Classifier::new(&der, 5).unwrap();
    assert_eq!(enumerated(&cl, SetKind::Sms).len(), 5);
    assert_eq!(enumerated(&cl, SetKind::ClusterTilting).len(), 6);
}
