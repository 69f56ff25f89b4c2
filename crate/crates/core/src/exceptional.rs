//! Exceptional sequences in `D^b(H)` and their left and right mutations.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::derived::{Component, DMap, DObject, DerivedCategory, Stalk};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::witness::{Verdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MutationDirection {
    /// `(X, Y) ↦ (Y', X)` with `Y'` the cone of the evaluation map.
    Left,
    /// `(X, Y) ↦ (Y, X')` with `X'[1]` the cone of the coevaluation map.
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Checks exceptionality of each entry and `Hom(X_i, X_j[l]) = 0` for all
/// `j < i`. A sequence of full length must also generate.
pub fn is_exceptional_sequence<F: Field>(der: &DerivedCategory<F>, seq: &[Stalk]) -> Verdict {
    for &x in seq {
        let end = der.stalk_hom(x, x, 0);
        if end != 1 {
            return Err(Witness::Endomorphisms { x, dim: end });
        }
        if der.stalk_hom(x, x, 1) != 0 {
            return Err(Witness::Hom { x, y: x, l: 1, dim: der.stalk_hom(x, x, 1) });
        }
    }
    for i in 0..seq.len() {
        for j in 0..i {
            let (x, y) = (seq[i], seq[j]);
            let e = y.shift - x.shift;
            for l in [-e, 1 - e] {
                let dim = der.stalk_hom(x, y, l);
                if dim != 0 {
                    return Err(Witness::Hom { x, y, l, dim });
                }
            }
        }
    }
    if seq.len() == der.rank() {
        if let Some(m) = der.left_perp_module(seq) {
            return Err(Witness::Perp(Stalk::new(m, 0)));
        }
    }
    Ok(())
}

fn single_stalk(obj: DObject) -> Result<Stalk> {
    obj.as_stalk().ok_or_else(|| {
        Error::TheoremViolation(alloc::format!("mutation produced the non-exceptional {obj:?}"))
    })
}

fn unit<F: Field>(field: &F, n: usize, k: usize) -> Vec<F::Elem> {
    (0..n)
        .map(|i| if i == k { field.one() } else { field.zero() })
        .collect()
}

/// `Y'` in the triangle `⊕ Hom(X[i], Y) ⊗ X[i] -> Y -> Y'`.
pub fn left_mutation_object<F: Field>(der: &DerivedCategory<F>, x: Stalk, y: Stalk) -> Result<Stalk> {
    let cat = der.catalog();
    let field = der.field();
    let mut source = Vec::new();
    let mut components = Vec::new();
    for h in cat.hom_basis(x.ind, y.ind) {
        components.push((source.len(), 0, Component::Hom(h.clone())));
        source.push(Stalk::new(x.ind, y.shift));
    }
    let e = cat.ext(x.ind, y.ind);
    for k in 0..e {
        components.push((source.len(), 0, Component::Ext(unit(field, e, k))));
        source.push(Stalk::new(x.ind, y.shift - 1));
    }
    let map = DMap {
        source,
        target: alloc::vec![y],
        components,
    };
    single_stalk(der.cone(&map)?)
}

/// `X'` in the triangle `X' -> X -> ⊕ D Hom(X, Y[j]) ⊗ Y[j]`.
pub fn right_mutation_object<F: Field>(der: &DerivedCategory<F>, x: Stalk, y: Stalk) -> Result<Stalk> {
    let cat = der.catalog();
    let field = der.field();
    let mut target = Vec::new();
    let mut components = Vec::new();
    for h in cat.hom_basis(x.ind, y.ind) {
        components.push((0, target.len(), Component::Hom(h.clone())));
        target.push(Stalk::new(y.ind, x.shift));
    }
    let e = cat.ext(x.ind, y.ind);
    for k in 0..e {
        components.push((0, target.len(), Component::Ext(unit(field, e, k))));
        target.push(Stalk::new(y.ind, x.shift + 1));
    }
    let map = DMap {
        source: alloc::vec![x],
        target,
        components,
    };
    Ok(single_stalk(der.cone(&map)?)?.shifted(-1))
}

/// Mutates the pair at positions `i, i + 1` (0-based).
pub fn mutate<F: Field>(
    der: &DerivedCategory<F>,
    seq: &[Stalk],
    i: usize,
    direction: MutationDirection,
) -> Result<Vec<Stalk>> {
    if i + 1 >= seq.len() {
        return Err(Error::InvalidArgument(alloc::format!(
            "position {} out of range for a sequence of length {}",
            i + 1,
            seq.len()
        )));
    }
    let (x, y) = (seq[i], seq[i + 1]);
    let mut out = seq.to_vec();
    match direction {
        MutationDirection::Left => {
            out[i] = left_mutation_object(der, x, y)?;
            out[i + 1] = x;
        }
        MutationDirection::Right => {
            out[i] = y;
            out[i + 1] = right_mutation_object(der, x, y)?;
        }
    }
    if let Err(w) = is_exceptional_sequence(der, &out) {
        return Err(Error::TheoremViolation(alloc::format!(
            "mutation broke exceptionality: {w}"
        )));
    }
    Ok(out)
}

/// `μ_rev = μ_1 (μ_2 μ_1) ⋯ (μ_{n-1} ⋯ μ_1)`, rightmost factor first.
pub fn mu_rev<F: Field>(der: &DerivedCategory<F>, seq: &[Stalk], sign: Sign) -> Result<Vec<Stalk>> {
    let dir = match sign {
        Sign::Plus => MutationDirection::Left,
        Sign::Minus => MutationDirection::Right,
    };
    let n = seq.len();
    let mut cur = seq.to_vec();
    for block in 1..n {
        for pos in 0..n - block {
            cur = mutate(der, &cur, pos, dir)?;
        }
    }
    Ok(cur)
}

/// Every intermediate sequence of `μ_rev`, starting with the input.
pub fn mu_rev_trace<F: Field>(
    der: &DerivedCategory<F>,
    seq: &[Stalk],
    sign: Sign,
) -> Result<Vec<Vec<Stalk>>> {
    let dir = match sign {
        Sign::Plus => MutationDirection::Left,
        Sign::Minus => MutationDirection::Right,
    };
    let n = seq.len();
    let mut trace = alloc::vec![seq.to_vec()];
    for block in 1..n {
        for pos in 0..n - block {
            let next = mutate(der, trace.last().expect("nonempty"), pos, dir)?;
            trace.push(next);
        }
    }
    Ok(trace)
}

/// Topological order of the digraph with an edge `X -> Y` whenever some
/// `Hom(X, Y[l])` is nonzero; the smallest available stalk goes first.
pub fn order_into_exceptional<F: Field>(der: &DerivedCategory<F>, set: &[Stalk]) -> Result<Vec<Stalk>> {
    let n = set.len();
    let edge = |a: usize, b: usize| a != b && der.total_hom(set[a], set[b]) != 0;
    let mut indeg: Vec<usize> = (0..n).map(|b| (0..n).filter(|&a| edge(a, b)).count()).collect();
    let mut ready: BTreeSet<(Stalk, usize)> =
        (0..n).filter(|&b| indeg[b] == 0).map(|b| (set[b], b)).collect();
    let mut out = Vec::with_capacity(n);
    while let Some((s, a)) = ready.pop_first() {
        out.push(s);
        for b in 0..n {
            if edge(a, b) {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    ready.insert((set[b], b));
                }
            }
        }
    }
    if out.len() != n {
        return Err(Error::TheoremViolation(
            "Hom digraph of the set has a cycle".into(),
        ));
    }
    if let Err(w) = is_exceptional_sequence(der, &out) {
        return Err(Error::TheoremViolation(alloc::format!(
            "ordered set is not exceptional: {w}"
        )));
    }
    Ok(out)
}

/// Silting set to SMC: order into an exceptional sequence, apply `μ⁺_rev`,
/// forget the order.
pub fn silting_to_smc<F: Field>(der: &DerivedCategory<F>, set: &[Stalk]) -> Result<Vec<Stalk>> {
    let seq = order_into_exceptional(der, set)?;
    let mut out = mu_rev(der, &seq, Sign::Plus)?;
    out.sort();
    Ok(out)
}

/// SMC to silting set, the inverse of [`silting_to_smc`].
pub fn smc_to_silting<F: Field>(der: &DerivedCategory<F>, set: &[Stalk]) -> Result<Vec<Stalk>> {
    let seq = order_into_exceptional(der, set)?;
    let mut out = mu_rev(der, &seq, Sign::Minus)?;
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::quiver_rep::Quiver;

    struct A2 {
        der: DerivedCategory<Rationals>,
        p1: Stalk,
        p2: Stalk,
        s1: Stalk,
        s2: Stalk,
    }

    fn a2() -> A2 {
        let q = Quiver::dynkin("A2".parse().unwrap()).unwrap();
        let der = DerivedCategory::new(&q, &Rationals).unwrap();
        let c = der.catalog();
        let (p1, p2) = (Stalk::new(c.projective_id(0), 0), Stalk::new(c.projective_id(1), 0));
        let (s1, s2) = (Stalk::new(c.simple_id(0), 0), Stalk::new(c.simple_id(1), 0));
        A2 { der, p1, p2, s1, s2 }
    }

    #[test]
    fn exceptional_examples() {
        let t = a2();
        assert!(is_exceptional_sequence(&t.der, &[t.p2, t.p1]).is_ok());
        assert!(is_exceptional_sequence(&t.der, &[t.p1, t.p2]).is_err());
        assert!(is_exceptional_sequence(&t.der, &[t.s1]).is_ok());
    }

    #[test]
    fn mutation_examples() {
        let t = a2();
        let m = mutate(&t.der, &[t.p1, t.s1], 0, MutationDirection::Left).unwrap();
        assert_eq!(m, [t.s2.shifted(1), t.p1]);
        let m = mutate(&t.der, &[t.p2, t.p1], 0, MutationDirection::Left).unwrap();
        assert_eq!(m, [t.s1, t.p2]);
        let back = mutate(&t.der, &m, 0, MutationDirection::Right).unwrap();
        assert_eq!(back, [t.p2, t.p1]);
        assert!(mutate(&t.der, &[t.p1], 0, MutationDirection::Left).is_err());
    }

    #[test]
    fn reversal_examples() {
        let t = a2();
        assert_eq!(mu_rev(&t.der, &[t.p2, t.p1], Sign::Plus).unwrap(), [t.s1, t.s2]);
        assert_eq!(
            mu_rev(&t.der, &[t.p1, t.s1], Sign::Plus).unwrap(),
            [t.s2.shifted(1), t.p1]
        );
    }

    #[test]
    fn ordering_and_bridge() {
        let t = a2();
        assert_eq!(order_into_exceptional(&t.der, &[t.p1, t.p2]).unwrap(), [t.p2, t.p1]);
        assert_eq!(order_into_exceptional(&t.der, &[t.s2, t.s1]).unwrap(), [t.s1, t.s2]);
        assert_eq!(order_into_exceptional(&t.der, &[t.s2]).unwrap(), [t.s2]);
        let mut simples = alloc::vec![t.s1, t.s2];
        simples.sort();
        assert_eq!(silting_to_smc(&t.der, &[t.p1, t.p2]).unwrap(), simples);
        let mut expect = alloc::vec![t.p1, t.s2.shifted(1)];
        expect.sort();
        assert_eq!(silting_to_smc(&t.der, &[t.p1, t.s1]).unwrap(), expect);
        let mut tilting = alloc::vec![t.p1, t.s1];
        tilting.sort();
        assert_eq!(smc_to_silting(&t.der, &expect).unwrap(), tilting);
    }
}
