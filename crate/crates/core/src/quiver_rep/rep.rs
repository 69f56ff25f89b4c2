use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix};

use super::quiver::{Path, Quiver};

/// A representation: one vector space per vertex (given by its dimension)
/// and one matrix per arrow, of shape `dim(target) × dim(source)`.
pub struct Rep<F: Field> {
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
}

impl<F: Field> Clone for Rep<F> {
    fn clone(&self) -> Self {
        Rep {
            dims: self.dims.clone(),
            maps: self.maps.clone(),
        }
    }
}

impl<F: Field> core::fmt::Debug for Rep<F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Rep")
            .field("dims", &self.dims)
            .field("maps", &self.maps)
            .finish()
    }
}

impl<F: Field> PartialEq for Rep<F> {
    fn eq(&self, other: &Self) -> bool {
        self.dims == other.dims && self.maps == other.maps
    }
}

/// A morphism of representations: one matrix per vertex.
pub struct RepMorphism<F: Field> {
    pub maps: Vec<Matrix<F>>,
}

impl<F: Field> Clone for RepMorphism<F> {
    fn clone(&self) -> Self {
        RepMorphism {
            maps: self.maps.clone(),
        }
    }
}

impl<F: Field> core::fmt::Debug for RepMorphism<F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_list().entries(&self.maps).finish()
    }
}

impl<F: Field> RepMorphism<F> {
    pub fn compose(&self, field: &F, first: &RepMorphism<F>) -> RepMorphism<F> {
        RepMorphism {
            maps: self
                .maps
                .iter()
                .zip(&first.maps)
                .map(|(g, f)| g.mul(field, f))
                .collect(),
        }
    }

    pub fn is_zero(&self, field: &F) -> bool {
        self.maps.iter().all(|m| m.is_zero(field))
    }

    /// Checks `N_a f_s = f_t M_a` for every arrow.
    pub fn is_intertwiner(&self, field: &F, q: &Quiver, m: &Rep<F>, n: &Rep<F>) -> bool {
        q.arrows().iter().enumerate().all(|(a, &(s, t))| {
            n.maps[a].mul(field, &self.maps[s]) == self.maps[t].mul(field, &m.maps[a])
        })
    }
}

impl<F: Field> Rep<F> {
    pub fn new(q: &Quiver, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        if dims.len() != q.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: q.vertex_count(),
                found: dims.len(),
            });
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::MalformedMap(alloc::format!(
                "{} matrices for {} arrows",
                maps.len(),
                q.arrows().len()
            )));
        }
        for (a, &(s, t)) in q.arrows().iter().enumerate() {
            if maps[a].rows() != dims[t] || maps[a].cols() != dims[s] {
                return Err(Error::MalformedMap(alloc::format!(
                    "arrow {}->{} needs a {}x{} matrix",
                    s + 1,
                    t + 1,
                    dims[t],
                    dims[s]
                )));
            }
        }
        Ok(Rep { dims, maps })
    }

    pub(crate) fn from_parts(dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Self {
        Rep { dims, maps }
    }

    pub fn zero(field: &F, q: &Quiver) -> Self {
        let dims = alloc::vec![0; q.vertex_count()];
        let maps = q.arrows().iter().map(|_| Matrix::zeros(field, 0, 0)).collect();
        Rep { dims, maps }
    }

    pub fn simple(field: &F, q: &Quiver, i: usize) -> Self {
        let mut dims = alloc::vec![0; q.vertex_count()];
        dims[i] = 1;
        let maps = q
            .arrows()
            .iter()
            .map(|&(s, t)| Matrix::zeros(field, dims[t], dims[s]))
            .collect();
        Rep { dims, maps }
    }

    /// `P(i)`: basis of `P(i)_v` is the set of paths `i -> v`; an arrow
    /// extends a path.
    pub fn projective(field: &F, q: &Quiver, i: usize) -> Self {
        let n = q.vertex_count();
        let dims: Vec<usize> = (0..n).map(|v| q.paths(i, v).len()).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| {
                let mut m = Matrix::zeros(field, dims[t], dims[s]);
                for (c, p) in q.paths(i, s).iter().enumerate() {
                    let ext = p.then(&arrow_path(q, a));
                    let r = q.path_index(&ext).expect("extended path exists");
                    m.set(r, c, field.one());
                }
                m
            })
            .collect();
        Rep { dims, maps }
    }

    /// `I(i)`: `I(i)_v` is dual to the paths `v -> i`. The arrow `a: s -> t`
    /// sends the dual of `q` to the sum of duals of those `r` with `q = a r`.
    pub fn injective(field: &F, q: &Quiver, i: usize) -> Self {
        let n = q.vertex_count();
        let dims: Vec<usize> = (0..n).map(|v| q.paths(v, i).len()).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| {
                let mut m = Matrix::zeros(field, dims[t], dims[s]);
                let ap = arrow_path(q, a);
                for (r_idx, r) in q.paths(t, i).iter().enumerate() {
                    let qpath = ap.then(r);
                    let c = q.path_index(&qpath).expect("composed path exists");
                    m.set(r_idx, c, field.one());
                }
                m
            })
            .collect();
        Rep { dims, maps }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// The linear map along a path, `dim(end) × dim(start)`.
    pub fn path_map(&self, field: &F, path: &Path) -> Matrix<F> {
        let mut m = Matrix::identity(field, self.dims[path.start]);
        for &a in &path.arrows {
            m = self.maps[a].mul(field, &m);
        }
        m
    }

    pub fn direct_sum(&self, field: &F, q: &Quiver, other: &Rep<F>) -> Rep<F> {
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| {
                let mut m = Matrix::zeros(field, dims[t], dims[s]);
                m.put_block(0, 0, &self.maps[a]);
                m.put_block(self.dims[t], self.dims[s], &other.maps[a]);
                m
            })
            .collect();
        Rep { dims, maps }
    }

    pub fn direct_sum_all<'a>(
        field: &F,
        q: &Quiver,
        parts: impl IntoIterator<Item = &'a Rep<F>>,
    ) -> Rep<F>
    where
        F: 'a,
    {
        let mut acc = Rep::zero(field, q);
        for p in parts {
            acc = acc.direct_sum(field, q, p);
        }
        acc
    }

    /// The dual representation, a representation of the opposite quiver.
    pub fn dual(&self) -> Rep<F> {
        Rep {
            dims: self.dims.clone(),
            maps: self.maps.iter().map(|m| m.transpose()).collect(),
        }
    }

    pub fn identity(&self, field: &F) -> RepMorphism<F> {
        RepMorphism {
            maps: self.dims.iter().map(|&d| Matrix::identity(field, d)).collect(),
        }
    }
}

pub(crate) fn arrow_path(q: &Quiver, a: usize) -> Path {
    let (s, t) = q.arrows()[a];
    Path {
        start: s,
        end: t,
        arrows: alloc::vec![a],
    }
}

/// The quotient `U / L` of subrepresentations `L ⊆ U ⊆ R`, both given by
/// per-vertex column matrices in the coordinates of `R`. Columns of `upper`
/// must be independent; `lower` only needs to span.
pub fn subquotient<F: Field>(
    field: &F,
    q: &Quiver,
    rep: &Rep<F>,
    upper: &[Matrix<F>],
    lower: &[Matrix<F>],
) -> Rep<F> {
    let n = q.vertex_count();
    let mut dims = Vec::with_capacity(n);
    // Per vertex: representatives (in U coordinates) of a quotient basis and
    // the projection from U coordinates onto that basis.
    let mut reps = Vec::with_capacity(n);
    let mut projs = Vec::with_capacity(n);
    for v in 0..n {
        let u = &upper[v];
        let coords = linalg::solve(field, u, &lower[v]).expect("lower lies inside upper");
        let base = linalg::column_basis(field, &coords);
        let comp = linalg::complement(field, &base);
        let t = base.hstack(&comp);
        let tinv = linalg::solve(field, &t, &Matrix::identity(field, t.rows()))
            .expect("basis completion is invertible");
        let proj = tinv.row_block(base.cols(), comp.cols());
        dims.push(comp.cols());
        reps.push(comp);
        projs.push(proj);
    }
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| {
            let image = rep.maps[a].mul(field, &upper[s]);
            let y = linalg::solve(field, &upper[t], &image).expect("upper is a subrepresentation");
            projs[t].mul(field, &y.mul(field, &reps[s]))
        })
        .collect();
    Rep { dims, maps }
}

pub fn kernel_rep<F: Field>(field: &F, q: &Quiver, source: &Rep<F>, f: &RepMorphism<F>) -> Rep<F> {
    let upper: Vec<Matrix<F>> = f.maps.iter().map(|m| linalg::kernel(field, m)).collect();
    let lower: Vec<Matrix<F>> = source
        .dims
        .iter()
        .map(|&d| Matrix::zeros(field, d, 0))
        .collect();
    subquotient(field, q, source, &upper, &lower)
}

pub fn cokernel_rep<F: Field>(
    field: &F,
    q: &Quiver,
    target: &Rep<F>,
    f: &RepMorphism<F>,
) -> Rep<F> {
    let upper: Vec<Matrix<F>> = target
        .dims
        .iter()
        .map(|&d| Matrix::identity(field, d))
        .collect();
    subquotient(field, q, target, &upper, &f.maps)
}

/// All intertwiners `M -> N`, as a basis of the solution space of
/// `N_a f_s = f_t M_a`.
pub fn hom_basis<F: Field>(field: &F, q: &Quiver, m: &Rep<F>, n: &Rep<F>) -> Vec<RepMorphism<F>> {
    let nv = q.vertex_count();
    let mut offset = Vec::with_capacity(nv + 1);
    offset.push(0);
    for v in 0..nv {
        offset.push(offset[v] + n.dims[v] * m.dims[v]);
    }
    let unknowns = offset[nv];
    let eq_count: usize = q.arrows().iter().map(|&(s, t)| n.dims[t] * m.dims[s]).sum();
    let mut sys = Matrix::zeros(field, eq_count, unknowns);
    // Unknown f_v[r][c] sits at offset[v] + r * dim M_v + c.
    let mut row = 0;
    for (a, &(s, t)) in q.arrows().iter().enumerate() {
        let na = &n.maps[a];
        let ma = &m.maps[a];
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                // (N_a f_s)[r][c] = sum_k N_a[r][k] f_s[k][c]
                for k in 0..n.dims[s] {
                    let coef = na.get(r, k);
                    if !field.is_zero(coef) {
                        let idx = offset[s] + k * m.dims[s] + c;
                        let v = field.add(sys.get(row, idx), coef);
                        sys.set(row, idx, v);
                    }
                }
                // -(f_t M_a)[r][c] = -sum_k f_t[r][k] M_a[k][c]
                for k in 0..m.dims[t] {
                    let coef = ma.get(k, c);
                    if !field.is_zero(coef) {
                        let idx = offset[t] + r * m.dims[t] + k;
                        let v = field.sub(sys.get(row, idx), coef);
                        sys.set(row, idx, v);
                    }
                }
                row += 1;
            }
        }
    }
    let ker = linalg::kernel(field, &sys);
    (0..ker.cols())
        .map(|b| {
            let maps = (0..nv)
                .map(|v| {
                    let data = (0..n.dims[v] * m.dims[v])
                        .map(|k| ker.get(offset[v] + k, b).clone())
                        .collect();
                    Matrix::from_rows(n.dims[v], m.dims[v], data)
                })
                .collect();
            RepMorphism { maps }
        })
        .collect()
}

pub fn hom_dim<F: Field>(field: &F, q: &Quiver, m: &Rep<F>, n: &Rep<F>) -> usize {
    hom_basis(field, q, m, n).len()
}

/// The Euler form `<alpha, beta> = sum alpha_i beta_i - sum_{a: i -> j} alpha_i beta_j`.
pub fn euler_form(q: &Quiver, alpha: &[i64], beta: &[i64]) -> Result<i64> {
    let n = q.vertex_count();
    for v in [alpha, beta] {
        if v.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: v.len(),
            });
        }
    }
    let diag: i64 = alpha.iter().zip(beta).map(|(a, b)| a * b).sum();
    let off: i64 = q.arrows().iter().map(|&(s, t)| alpha[s] * beta[t]).sum();
    Ok(diag - off)
}

/// The morphism `⊕ P(v_l) -> N` sending the generator of the `l`-th summand
/// to `images[l] ∈ N_{v_l}`. Column `(l, p)` at vertex `w` is `N(p) images[l]`
/// for each path `p: v_l -> w`.
pub fn morphism_from_projectives<F: Field>(
    field: &F,
    q: &Quiver,
    tops: &[usize],
    images: &[Vec<F::Elem>],
    target: &Rep<F>,
) -> RepMorphism<F> {
    let nv = q.vertex_count();
    let maps = (0..nv)
        .map(|w| {
            let cols: usize = tops.iter().map(|&i| q.paths(i, w).len()).sum();
            let mut m = Matrix::zeros(field, target.dims[w], cols);
            let mut c = 0;
            for (l, &i) in tops.iter().enumerate() {
                let img = Matrix::column_vector(images[l].clone());
                for p in q.paths(i, w) {
                    let col = target.path_map(field, p).mul(field, &img);
                    m.put_block(0, c, &col);
                    c += 1;
                }
            }
            m
        })
        .collect();
    RepMorphism { maps }
}

/// `⊕ P(v)` over the listed vertices.
pub fn projective_sum<F: Field>(field: &F, q: &Quiver, tops: &[usize]) -> Rep<F> {
    let parts: Vec<Rep<F>> = tops.iter().map(|&i| Rep::projective(field, q, i)).collect();
    Rep::direct_sum_all(field, q, parts.iter())
}

/// `⊕ I(v)` over the listed vertices.
pub fn injective_sum<F: Field>(field: &F, q: &Quiver, tops: &[usize]) -> Rep<F> {
    let parts: Vec<Rep<F>> = tops.iter().map(|&i| Rep::injective(field, q, i)).collect();
    Rep::direct_sum_all(field, q, parts.iter())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn a2() -> Quiver {
        Quiver::dynkin("A2".parse().unwrap()).unwrap()
    }

    #[test]
    fn standard_modules_of_a2() {
        let q = a2();
        let f = Rationals;
        assert_eq!(Rep::<Rationals>::projective(&f, &q, 0).dims(), [1, 1]);
        assert_eq!(Rep::<Rationals>::projective(&f, &q, 1).dims(), [0, 1]);
        assert_eq!(Rep::<Rationals>::injective(&f, &q, 0).dims(), [1, 0]);
        assert_eq!(Rep::<Rationals>::injective(&f, &q, 1).dims(), [1, 1]);
    }

    #[test]
    fn hom_examples() {
        let q = a2();
        let f = Rationals;
        let p1 = Rep::projective(&f, &q, 0);
        let s1 = Rep::simple(&f, &q, 0);
        assert_eq!(hom_dim(&f, &q, &p1, &s1), 1);
        assert_eq!(hom_dim(&f, &q, &s1, &p1), 0);
        assert_eq!(hom_dim(&f, &q, &p1, &p1), 1);
        for h in hom_basis(&f, &q, &p1, &s1) {
            assert!(h.is_intertwiner(&f, &q, &p1, &s1));
        }
    }

    #[test]
    fn kernel_and_cokernel() {
        let q = a2();
        let f = Rationals;
        let p1 = Rep::projective(&f, &q, 0);
        let s1 = Rep::simple(&f, &q, 0);
        let pi = hom_basis(&f, &q, &p1, &s1).pop().unwrap();
        assert_eq!(kernel_rep(&f, &q, &p1, &pi).dims(), [0, 1]);
        assert_eq!(cokernel_rep(&f, &q, &s1, &pi).dims(), [0, 0]);
    }

    #[test]
    fn euler_examples() {
        let q = a2();
        assert_eq!(euler_form(&q, &[1, 0], &[0, 1]).unwrap(), -1);
        assert_eq!(euler_form(&q, &[3, 2], &[0, 0]).unwrap(), 0);
        assert_eq!(euler_form(&q, &[1, 1], &[1, 0]).unwrap(), 1);
        assert!(euler_form(&q, &[1], &[1, 0]).is_err());
    }

    #[test]
    fn rep_new_checks_shapes() {
        let q = a2();
        let f = Rationals;
        let bad = Rep::new(&q, alloc::vec![1, 1], alloc::vec![Matrix::zeros(&f, 2, 1)]);
        assert!(matches!(bad, Err(Error::MalformedMap(_))));
        assert!(Rep::<Rationals>::new(&q, alloc::vec![1], alloc::vec![]).is_err());
    }
}
