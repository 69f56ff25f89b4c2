use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix};
use crate::root_data::make_root_datum;

use super::quiver::Quiver;
use super::rep::{hom_basis, Rep, RepMorphism};
use super::resolution::{nakayama_inverse_homology, presentation, tau, tau_inverse, Presentation};

/// Reflection functor `S⁻_k` at a source `k` of `q`: the new space at `k`
/// is the cokernel of `M_k -> ⊕_{a: k -> t} M_t`. The result lives on
/// `q.reflect(k)`.
fn reflect_at_source<F: Field>(field: &F, q: &Quiver, k: usize, m: &Rep<F>) -> Rep<F> {
    let outgoing: Vec<usize> = q.arrows_out(k).collect();
    let mut stacked = Matrix::zeros(field, 0, m.dims()[k]);
    for &a in &outgoing {
        stacked = stacked.vstack(&m.maps()[a]);
    }
    let proj = linalg::left_kernel(field, &stacked);
    let mut dims = m.dims().to_vec();
    dims[k] = proj.rows();
    let mut maps: Vec<Matrix<F>> = m.maps().to_vec();
    let mut off = 0;
    for &a in &outgoing {
        let t = q.arrows()[a].1;
        maps[a] = proj.columns(off, m.dims()[t]);
        off += m.dims()[t];
    }
    Rep::from_parts(dims, maps)
}

/// Every indecomposable, as `S⁻_{k_1} ⋯ S⁻_{k_{t-1}} (S_{k_t})` along the
/// periodic admissible sink sequence.
fn bgp_indecomposables<F: Field>(field: &F, q: &Quiver, target: usize) -> Result<Vec<Rep<F>>> {
    let n = q.vertex_count();
    let mut sinks = q.topological_order().expect("acyclic");
    sinks.reverse();
    // orient[j] is the quiver after reflecting at k_1..k_j; it has period n.
    let mut orient = alloc::vec![q.clone()];
    for j in 0..n {
        let next = orient[j].reflect(sinks[j]);
        orient.push(next);
    }
    if orient[n].arrows() != q.arrows() {
        return Err(Error::Construction("sink sequence is not admissible".to_string()));
    }
    let mut found: BTreeMap<Vec<usize>, Rep<F>> = BTreeMap::new();
    let max_t = n * (target + 2);
    for t in 1..=max_t {
        let kt = sinks[(t - 1) % n];
        let mut m = Rep::simple(field, &orient[(t - 1) % n], kt);
        for j in (1..t).rev() {
            let kj = sinks[(j - 1) % n];
            m = reflect_at_source(field, &orient[j % n], kj, &m);
            if m.is_zero() {
                break;
            }
        }
        if !m.is_zero() {
            found.entry(m.dims().to_vec()).or_insert(m);
        }
        if found.len() == target {
            return Ok(found.into_values().collect());
        }
    }
    Err(Error::Construction(alloc::format!(
        "reflection functors produced {} of {target} indecomposables",
        found.len()
    )))
}

/// The indecomposable modules of a Dynkin quiver, one per positive root,
/// with their homological data.
///
/// Ids follow the lexicographic order of dimension vectors. A separate
/// topological order (a linear extension of `Hom ≠ 0`) is kept for
/// decomposition.
pub struct IndCatalog<F: Field> {
    field: F,
    quiver: Quiver,
    reps: Vec<Rep<F>>,
    index: BTreeMap<Vec<usize>, usize>,
    presentations: Vec<Presentation<F>>,
    hom: Vec<Vec<usize>>,
    ext: Vec<Vec<usize>>,
    projective_of: Vec<usize>,
    injective_of: Vec<usize>,
    simple_of: Vec<usize>,
    projective: Vec<Option<usize>>,
    injective: Vec<Option<usize>>,
    topo: Vec<usize>,
    topo_pos: Vec<usize>,
    tau: Vec<Option<usize>>,
    tau_inv: Vec<Option<usize>>,
    nu: Vec<(i32, usize)>,
    nu_inv: Vec<(i32, usize)>,
    hom_cache: Vec<OnceBox<Vec<RepMorphism<F>>>>,
    ext_cache: Vec<OnceBox<Matrix<F>>>,
}

impl<F: Field> core::fmt::Debug for IndCatalog<F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("IndCatalog")
            .field("quiver", &self.quiver)
            .field("size", &self.reps.len())
            .finish()
    }
}

pub fn build_catalog<F: Field>(quiver: &Quiver, field: &F) -> Result<IndCatalog<F>> {
    let ty = quiver
        .dynkin_type()
        .ok_or_else(|| Error::InvalidQuiver("catalog needs a Dynkin quiver".to_string()))?;
    if !ty.is_simply_laced() {
        return Err(Error::Unsupported(ty.to_string()));
    }
    let datum = make_root_datum(ty)?;
    let q = quiver.clone();
    let reps = bgp_indecomposables(field, &q, datum.positive_root_count())?;
    let roots: BTreeSet<Vec<usize>> = datum
        .positive_roots
        .iter()
        .map(|r| r.iter().map(|&c| c as usize).collect())
        .collect();
    let index: BTreeMap<Vec<usize>, usize> = reps
        .iter()
        .enumerate()
        .map(|(i, r)| (r.dims().to_vec(), i))
        .collect();
    if index.keys().cloned().collect::<BTreeSet<_>>() != roots {
        return Err(Error::Construction(
            "dimension vectors differ from the positive roots".to_string(),
        ));
    }
    let size = reps.len();
    let presentations: Vec<Presentation<F>> =
        reps.iter().map(|m| presentation(field, &q, m)).collect();
    let mut hom = alloc::vec![alloc::vec![0; size]; size];
    let mut ext = alloc::vec![alloc::vec![0; size]; size];
    for a in 0..size {
        for b in 0..size {
            hom[a][b] = presentations[a].hom_dim(field, &q, &reps[b]);
            ext[a][b] = presentations[a].ext_dim(field, &q, &reps[b]);
        }
        if hom[a][a] != 1 || ext[a][a] != 0 {
            return Err(Error::Construction(alloc::format!(
                "{:?} is not exceptional",
                reps[a].dims()
            )));
        }
    }
    let nv = q.vertex_count();
    let lookup = |dims: &[usize]| -> Result<usize> {
        index
            .get(dims)
            .copied()
            .ok_or_else(|| Error::Construction(alloc::format!("no indecomposable with {dims:?}")))
    };
    let mut projective_of = Vec::with_capacity(nv);
    let mut injective_of = Vec::with_capacity(nv);
    let mut simple_of = Vec::with_capacity(nv);
    for v in 0..nv {
        projective_of.push(lookup(Rep::<F>::projective(field, &q, v).dims())?);
        injective_of.push(lookup(Rep::<F>::injective(field, &q, v).dims())?);
        simple_of.push(lookup(Rep::<F>::simple(field, &q, v).dims())?);
    }
    let mut projective = alloc::vec![None; size];
    let mut injective = alloc::vec![None; size];
    for v in 0..nv {
        projective[projective_of[v]] = Some(v);
        injective[injective_of[v]] = Some(v);
    }
    let topo = topological_order(&hom);
    let mut topo_pos = alloc::vec![0; size];
    for (p, &i) in topo.iter().enumerate() {
        topo_pos[i] = p;
    }
    let mut cat = IndCatalog {
        field: field.clone(),
        quiver: q,
        reps,
        index,
        presentations,
        hom,
        ext,
        projective_of,
        injective_of,
        simple_of,
        projective,
        injective,
        topo,
        topo_pos,
        tau: Vec::new(),
        tau_inv: Vec::new(),
        nu: Vec::new(),
        nu_inv: Vec::new(),
        hom_cache: (0..size * size).map(|_| OnceBox::new()).collect(),
        ext_cache: (0..size * size).map(|_| OnceBox::new()).collect(),
    };
    cat.fill_translates()?;
    Ok(cat)
}

/// Linear extension of the `Hom ≠ 0` digraph by repeated sink removal; the
/// largest remaining id is removed first among ties.
fn topological_order(hom: &[Vec<usize>]) -> Vec<usize> {
    let size = hom.len();
    let mut alive: BTreeSet<usize> = (0..size).collect();
    let mut rev = Vec::with_capacity(size);
    while !alive.is_empty() {
        let sink = alive
            .iter()
            .rev()
            .copied()
            .find(|&x| alive.iter().all(|&y| y == x || hom[x][y] == 0))
            .expect("Hom digraph of a Dynkin quiver is acyclic");
        alive.remove(&sink);
        rev.push(sink);
    }
    rev.reverse();
    rev
}

impl<F: Field> IndCatalog<F> {
    fn single_summand(&self, m: &Rep<F>) -> Result<Option<usize>> {
        let parts = self.decompose(m)?;
        match parts.as_slice() {
            [] => Ok(None),
            [(id, 1)] => Ok(Some(*id)),
            _ => Err(Error::Construction(alloc::format!(
                "translate of an indecomposable split as {parts:?}"
            ))),
        }
    }

    fn fill_translates(&mut self) -> Result<()> {
        let size = self.reps.len();
        let (f, q) = (&self.field, &self.quiver);
        let mut taus = Vec::with_capacity(size);
        let mut tau_invs = Vec::with_capacity(size);
        let mut nus = Vec::with_capacity(size);
        let mut nu_invs = Vec::with_capacity(size);
        for id in 0..size {
            let m = &self.reps[id];
            taus.push(self.single_summand(&tau(f, q, m))?);
            tau_invs.push(self.single_summand(&tau_inverse(f, q, m))?);
            let (k, c) = self.presentations[id].nakayama_homology(f, q);
            nus.push(self.stalk_of_pair(&k, 1, &c, 0)?);
            let (c, k) = nakayama_inverse_homology(f, q, m);
            nu_invs.push(self.stalk_of_pair(&c, 0, &k, -1)?);
        }
        self.tau = taus;
        self.tau_inv = tau_invs;
        self.nu = nus;
        self.nu_inv = nu_invs;
        Ok(())
    }

    /// Exactly one of the two homology modules must be a single
    /// indecomposable and the other zero.
    fn stalk_of_pair(&self, a: &Rep<F>, sa: i32, b: &Rep<F>, sb: i32) -> Result<(i32, usize)> {
        match (self.single_summand(a)?, self.single_summand(b)?) {
            (Some(x), None) => Ok((sa, x)),
            (None, Some(y)) => Ok((sb, y)),
            _ => Err(Error::Construction(
                "Nakayama image of an indecomposable is not indecomposable".to_string(),
            )),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn rep(&self, id: usize) -> &Rep<F> {
        &self.reps[id]
    }

    pub fn dim_vector(&self, id: usize) -> &[usize] {
        self.reps[id].dims()
    }

    pub fn id_of(&self, dims: &[usize]) -> Option<usize> {
        self.index.get(dims).copied()
    }

    pub fn presentation(&self, id: usize) -> &Presentation<F> {
        &self.presentations[id]
    }

    /// `dim Hom(M_a, M_b)`.
    pub fn hom(&self, a: usize, b: usize) -> usize {
        self.hom[a][b]
    }

    /// `dim Ext^1(M_a, M_b)`.
    pub fn ext(&self, a: usize, b: usize) -> usize {
        self.ext[a][b]
    }

    pub fn hom_matrix(&self) -> &[Vec<usize>] {
        &self.hom
    }

    pub fn ext_matrix(&self) -> &[Vec<usize>] {
        &self.ext
    }

    /// Vertex `v` with `M_id ≅ P(v)`.
    pub fn projective_vertex(&self, id: usize) -> Option<usize> {
        self.projective[id]
    }

    pub fn injective_vertex(&self, id: usize) -> Option<usize> {
        self.injective[id]
    }

    pub fn is_projective(&self, id: usize) -> bool {
        self.projective[id].is_some()
    }

    pub fn is_injective(&self, id: usize) -> bool {
        self.injective[id].is_some()
    }

    pub fn projective_id(&self, v: usize) -> usize {
        self.projective_of[v]
    }

    pub fn injective_id(&self, v: usize) -> usize {
        self.injective_of[v]
    }

    pub fn simple_id(&self, v: usize) -> usize {
        self.simple_of[v]
    }

    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    pub fn tau(&self, id: usize) -> Option<usize> {
        self.tau[id]
    }

    pub fn tau_inverse(&self, id: usize) -> Option<usize> {
        self.tau_inv[id]
    }

    /// `ν M_id = M_j[s]`, returned as `(s, j)`.
    pub fn nu(&self, id: usize) -> (i32, usize) {
        self.nu[id]
    }

    pub fn nu_inverse(&self, id: usize) -> (i32, usize) {
        self.nu_inv[id]
    }

    /// Intertwiner basis of `Hom(M_a, M_b)`, computed on first use.
    pub fn hom_basis(&self, a: usize, b: usize) -> &[RepMorphism<F>] {
        self.hom_cache[a * self.len() + b].get_or_init(|| {
            Box::new(hom_basis(&self.field, &self.quiver, &self.reps[a], &self.reps[b]))
        })
    }

    /// Basis of `Ext^1(M_a, M_b)` as columns in `⊕_k (M_b)_{j_k}` for the
    /// syzygy tops `j_k` of `M_a`, computed on first use.
    pub fn ext_basis(&self, a: usize, b: usize) -> &Matrix<F> {
        self.ext_cache[a * self.len() + b].get_or_init(|| {
            Box::new(self.presentations[a].ext_basis(&self.field, &self.quiver, &self.reps[b]))
        })
    }

    /// Krull–Schmidt multiplicities of `m`, sorted by id, by back
    /// substitution in the topological order.
    pub fn decompose(&self, m: &Rep<F>) -> Result<Vec<(usize, usize)>> {
        if m.dims().len() != self.quiver.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: self.quiver.vertex_count(),
                found: m.dims().len(),
            });
        }
        let size = self.len();
        let mut mult = alloc::vec![0i64; size];
        for &j in self.topo.iter().rev() {
            let h = self.presentations[j].hom_dim(&self.field, &self.quiver, m) as i64;
            let later: i64 = self.topo[self.topo_pos[j] + 1..]
                .iter()
                .map(|&i| mult[i] * self.hom[j][i] as i64)
                .sum();
            mult[j] = h - later;
            if mult[j] < 0 {
                return Err(Error::Arithmetic(alloc::format!(
                    "negative multiplicity for {:?}",
                    self.reps[j].dims()
                )));
            }
        }
        let mut total = alloc::vec![0usize; self.quiver.vertex_count()];
        for (i, &k) in mult.iter().enumerate() {
            for (t, d) in total.iter_mut().zip(self.reps[i].dims()) {
                *t += k as usize * d;
            }
        }
        if total != m.dims() {
            return Err(Error::Arithmetic(
                "decomposition does not account for the dimension vector".to_string(),
            ));
        }
        Ok(mult
            .into_iter()
            .enumerate()
            .filter(|&(_, k)| k > 0)
            .map(|(i, k)| (i, k as usize))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn catalog(label: &str) -> IndCatalog<Rationals> {
        let q = Quiver::dynkin(label.parse().unwrap()).unwrap();
        build_catalog(&q, &Rationals).unwrap()
    }

    #[test]
    fn a2_catalog() {
        let c = catalog("A2");
        let dims: Vec<&[usize]> = (0..c.len()).map(|i| c.dim_vector(i)).collect();
        assert_eq!(dims, [&[0, 1][..], &[1, 0], &[1, 1]]);
        assert!(c.is_projective(c.id_of(&[1, 1]).unwrap()));
        assert_eq!(c.tau(c.simple_id(0)), Some(c.simple_id(1)));
        assert_eq!(c.nu(c.simple_id(0)), (1, c.simple_id(1)));
        assert_eq!(c.nu_inverse(c.simple_id(1)), (-1, c.simple_id(0)));
    }

    #[test]
    fn catalog_sizes() {
        assert_eq!(catalog("A3").len(), 6);
        assert_eq!(catalog("D4").len(), 12);
    }

    #[test]
    fn hom_matrix_is_unitriangular() {
        let c = catalog("D4");
        let topo = c.topological_order();
        for (x, &a) in topo.iter().enumerate() {
            assert_eq!(c.hom(a, a), 1);
            for &b in &topo[..x] {
                assert_eq!(c.hom(a, b), 0);
            }
        }
    }

    #[test]
    fn decompose_block_sum() {
        let c = catalog("A2");
        let q = c.quiver().clone();
        let p1 = c.projective_id(0);
        let s2 = c.simple_id(1);
        let sum = c.rep(p1).direct_sum(&Rationals, &q, c.rep(s2));
        let mut expect = alloc::vec![(p1, 1), (s2, 1)];
        expect.sort();
        assert_eq!(c.decompose(&sum).unwrap(), expect);
        assert!(c.decompose(&Rep::zero(&Rationals, &q)).unwrap().is_empty());
    }

    #[test]
    fn prime_field_agrees() {
        let q = Quiver::dynkin("D4".parse().unwrap()).unwrap();
        let f = PrimeField::new(101).unwrap();
        let cp = build_catalog(&q, &f).unwrap();
        let cq = catalog("D4");
        assert_eq!(cp.hom_matrix(), cq.hom_matrix());
        assert_eq!(cp.ext_matrix(), cq.ext_matrix());
    }

    #[test]
    fn non_simply_laced_rejected() {
        let ty = "B3".parse().unwrap();
        assert!(matches!(Quiver::dynkin(ty), Err(Error::Unsupported(_))));
        let plain = Quiver::new(2, alloc::vec![(0, 1)]).unwrap();
        assert!(build_catalog(&plain, &Rationals).is_err());
    }
}
