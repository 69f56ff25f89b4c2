//! Minimal projective presentations `0 -> P1 -> P0 -> M -> 0` and the
//! functors computed from them: Hom and Ext into a second module, the
//! Nakayama complex, and the AR translates.

use alloc::vec::Vec;

use crate::field::Field;
use crate::linalg::{self, Matrix};

use super::quiver::Quiver;
use super::rep::{
    cokernel_rep, injective_sum, kernel_rep, morphism_from_projectives, projective_sum, Rep,
    RepMorphism,
};

/// `P0 = ⊕ P(tops[l])` maps onto `M` by sending the `l`-th generator to
/// `generators[l]`. `P1 = ⊕ P(syzygy_tops[k])` embeds in `P0` with the
/// `k`-th generator going to `syzygies[k] ∈ (P0)_{syzygy_tops[k]}`.
pub struct Presentation<F: Field> {
    pub tops: Vec<usize>,
    pub generators: Vec<Vec<F::Elem>>,
    pub syzygy_tops: Vec<usize>,
    pub syzygies: Vec<Vec<F::Elem>>,
}

impl<F: Field> Clone for Presentation<F> {
    fn clone(&self) -> Self {
        Presentation {
            tops: self.tops.clone(),
            generators: self.generators.clone(),
            syzygy_tops: self.syzygy_tops.clone(),
            syzygies: self.syzygies.clone(),
        }
    }
}

impl<F: Field> core::fmt::Debug for Presentation<F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Presentation")
            .field("tops", &self.tops)
            .field("syzygy_tops", &self.syzygy_tops)
            .finish()
    }
}

/// Columns spanning the radical `Σ_{a: s -> v} image(M_a)` at `v`.
fn radical<F: Field>(field: &F, q: &Quiver, maps: &[Matrix<F>], dim_v: usize, v: usize, sub: Option<&[Matrix<F>]>) -> Matrix<F> {
    let mut rad = Matrix::zeros(field, dim_v, 0);
    for a in q.arrows_in(v) {
        let s = q.arrows()[a].0;
        let img = match sub {
            Some(basis) => maps[a].mul(field, &basis[s]),
            None => maps[a].clone(),
        };
        rad = rad.hstack(&img);
    }
    rad
}

pub fn presentation<F: Field>(field: &F, q: &Quiver, m: &Rep<F>) -> Presentation<F> {
    let n = q.vertex_count();
    let mut tops = Vec::new();
    let mut generators = Vec::new();
    for v in 0..n {
        let rad = radical(field, q, m.maps(), m.dims()[v], v, None);
        let comp = linalg::complement(field, &rad);
        for c in 0..comp.cols() {
            tops.push(v);
            generators.push(comp.column(c));
        }
    }
    let p0 = projective_sum(field, q, &tops);
    let pi = morphism_from_projectives(field, q, &tops, &generators, m);
    let ker: Vec<Matrix<F>> = pi.maps.iter().map(|x| linalg::kernel(field, x)).collect();
    let mut syzygy_tops = Vec::new();
    let mut syzygies = Vec::new();
    for v in 0..n {
        let rad = radical(field, q, p0.maps(), p0.dims()[v], v, Some(&ker));
        let aug = rad.hstack(&ker[v]);
        let (_, pivots) = linalg::rref(field, &aug);
        for p in pivots.into_iter().filter(|&p| p >= rad.cols()) {
            syzygy_tops.push(v);
            syzygies.push(ker[v].column(p - rad.cols()));
        }
    }
    let p1_dim: usize = syzygy_tops
        .iter()
        .map(|&j| (0..n).map(|w| q.paths(j, w).len()).sum::<usize>())
        .sum();
    assert_eq!(
        p1_dim + m.total_dim(),
        p0.total_dim(),
        "syzygy of a module over a hereditary algebra must be projective"
    );
    Presentation {
        tops,
        generators,
        syzygy_tops,
        syzygies,
    }
}

impl<F: Field> Presentation<F> {
    pub fn p0(&self, field: &F, q: &Quiver) -> Rep<F> {
        projective_sum(field, q, &self.tops)
    }

    pub fn p1(&self, field: &F, q: &Quiver) -> Rep<F> {
        projective_sum(field, q, &self.syzygy_tops)
    }

    /// The inclusion `P1 -> P0`.
    pub fn differential(&self, field: &F, q: &Quiver) -> RepMorphism<F> {
        let p0 = self.p0(field, q);
        morphism_from_projectives(field, q, &self.syzygy_tops, &self.syzygies, &p0)
    }

    /// Offset of the block for summand `l` inside `(P0)_v`.
    fn p0_offset(&self, q: &Quiver, l: usize, v: usize) -> usize {
        self.tops[..l].iter().map(|&i| q.paths(i, v).len()).sum()
    }

    /// Restriction `Hom(P0, N) = ⊕_l N_{i_l} -> Hom(P1, N) = ⊕_k N_{j_k}`.
    pub fn restriction(&self, field: &F, q: &Quiver, n: &Rep<F>) -> Matrix<F> {
        let rows: usize = self.syzygy_tops.iter().map(|&j| n.dims()[j]).sum();
        let cols: usize = self.tops.iter().map(|&i| n.dims()[i]).sum();
        let mut rho = Matrix::zeros(field, rows, cols);
        let mut r0 = 0;
        for (k, &j) in self.syzygy_tops.iter().enumerate() {
            let mut c0 = 0;
            for (l, &i) in self.tops.iter().enumerate() {
                let off = self.p0_offset(q, l, j);
                let mut block = Matrix::zeros(field, n.dims()[j], n.dims()[i]);
                for (pi, p) in q.paths(i, j).iter().enumerate() {
                    let coef = &self.syzygies[k][off + pi];
                    if !field.is_zero(coef) {
                        block = block.add(field, &n.path_map(field, p).scale(field, coef));
                    }
                }
                rho.put_block(r0, c0, &block);
                c0 += n.dims()[i];
            }
            r0 += n.dims()[j];
        }
        rho
    }

    pub fn hom_dim(&self, field: &F, q: &Quiver, n: &Rep<F>) -> usize {
        let rho = self.restriction(field, q, n);
        rho.cols() - linalg::rank(field, &rho)
    }

    pub fn ext_dim(&self, field: &F, q: &Quiver, n: &Rep<F>) -> usize {
        let rho = self.restriction(field, q, n);
        rho.rows() - linalg::rank(field, &rho)
    }

    /// Representatives of a basis of `Ext^1(M, N)`: standard vectors of
    /// `⊕_k N_{j_k}` completing the image of the restriction map.
    pub fn ext_basis(&self, field: &F, q: &Quiver, n: &Rep<F>) -> Matrix<F> {
        let rho = self.restriction(field, q, n);
        linalg::complement(field, &rho)
    }

    /// Images of the top generators under a morphism `M -> N`.
    pub fn generator_images(&self, field: &F, f: &RepMorphism<F>) -> Vec<Vec<F::Elem>> {
        self.tops
            .iter()
            .zip(&self.generators)
            .map(|(&i, g)| f.maps[i].mul(field, &Matrix::column_vector(g.clone())).column(0))
            .collect()
    }

    /// The Nakayama image `ν(P1) -> ν(P0)` of the presentation.
    pub fn nakayama_map(&self, field: &F, q: &Quiver) -> (Rep<F>, Rep<F>, RepMorphism<F>) {
        let i1 = injective_sum(field, q, &self.syzygy_tops);
        let i0 = injective_sum(field, q, &self.tops);
        let maps = (0..q.vertex_count())
            .map(|v| {
                let mut m = Matrix::zeros(field, i0.dims()[v], i1.dims()[v]);
                let mut c0 = 0;
                for (k, &j) in self.syzygy_tops.iter().enumerate() {
                    let qs = q.paths(v, j);
                    let mut r0 = 0;
                    for (l, &i) in self.tops.iter().enumerate() {
                        let rs = q.paths(v, i);
                        let off = self.p0_offset(q, l, j);
                        for (pi, p) in q.paths(i, j).iter().enumerate() {
                            let coef = &self.syzygies[k][off + pi];
                            if field.is_zero(coef) {
                                continue;
                            }
                            for (ri, r) in rs.iter().enumerate() {
                                let rp = r.then(p);
                                if let Some(qi) = qs.iter().position(|x| *x == rp) {
                                    let cur = field.add(m.get(r0 + ri, c0 + qi), coef);
                                    m.set(r0 + ri, c0 + qi, cur);
                                }
                            }
                        }
                        r0 += rs.len();
                    }
                    c0 += qs.len();
                }
                m
            })
            .collect();
        (i1, i0, RepMorphism { maps })
    }

    /// Kernel and cokernel of the Nakayama map: `ν M = ker[1] ⊕ coker`.
    pub fn nakayama_homology(&self, field: &F, q: &Quiver) -> (Rep<F>, Rep<F>) {
        let (i1, i0, map) = self.nakayama_map(field, q);
        (
            kernel_rep(field, q, &i1, &map),
            cokernel_rep(field, q, &i0, &map),
        )
    }

    /// The extension of `M` by `N` classified by `g ∈ ⊕_k N_{j_k}`: the
    /// pushout of `P1 -> P0` along `g: P1 -> N`.
    pub fn extension(&self, field: &F, q: &Quiver, n: &Rep<F>, g: &[F::Elem]) -> Rep<F> {
        let p0 = self.p0(field, q);
        let sum = n.direct_sum(field, q, &p0);
        let mut images = Vec::with_capacity(self.syzygy_tops.len());
        let mut off = 0;
        for (k, &j) in self.syzygy_tops.iter().enumerate() {
            let mut v: Vec<F::Elem> = g[off..off + n.dims()[j]].to_vec();
            v.extend(self.syzygies[k].iter().map(|x| field.neg(x)));
            images.push(v);
            off += n.dims()[j];
        }
        let f = morphism_from_projectives(field, q, &self.syzygy_tops, &images, &sum);
        cokernel_rep(field, q, &sum, &f)
    }
}

/// `τ M`, the kernel of the Nakayama map on a minimal presentation.
pub fn tau<F: Field>(field: &F, q: &Quiver, m: &Rep<F>) -> Rep<F> {
    presentation(field, q, m).nakayama_homology(field, q).0
}

/// `τ⁻ M = D τ_{Q^op} D M`.
pub fn tau_inverse<F: Field>(field: &F, q: &Quiver, m: &Rep<F>) -> Rep<F> {
    let op = q.opposite();
    tau(field, &op, &m.dual()).dual()
}

/// `ν⁻ M` split by degree: the first module sits in shift 0, the second in
/// shift −1.
pub fn nakayama_inverse_homology<F: Field>(field: &F, q: &Quiver, m: &Rep<F>) -> (Rep<F>, Rep<F>) {
    let op = q.opposite();
    let (k, c) = presentation(field, &op, &m.dual()).nakayama_homology(field, &op);
    (c.dual(), k.dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn a2() -> Quiver {
        Quiver::dynkin("A2".parse().unwrap()).unwrap()
    }

    #[test]
    fn simple_top_presentation() {
        let q = a2();
        let f = Rationals;
        let s1 = Rep::simple(&f, &q, 0);
        let p = presentation(&f, &q, &s1);
        assert_eq!(p.tops, [0]);
        assert_eq!(p.syzygy_tops, [1]);
        let s2 = Rep::simple(&f, &q, 1);
        assert_eq!(p.ext_dim(&f, &q, &s2), 1);
        assert_eq!(p.hom_dim(&f, &q, &s2), 0);
        let p2 = presentation(&f, &q, &s2);
        assert_eq!(p2.ext_dim(&f, &q, &s1), 0);
        assert!(p2.syzygy_tops.is_empty());
    }

    #[test]
    fn translates_of_a2() {
        let q = a2();
        let f = Rationals;
        let s1 = Rep::simple(&f, &q, 0);
        let s2 = Rep::simple(&f, &q, 1);
        assert_eq!(tau(&f, &q, &s1).dims(), [0, 1]);
        assert!(tau(&f, &q, &s2).is_zero());
        assert_eq!(tau_inverse(&f, &q, &s2).dims(), [1, 0]);
        assert!(tau_inverse(&f, &q, &s1).is_zero());
        let (k, c) = presentation(&f, &q, &s1).nakayama_homology(&f, &q);
        assert_eq!((k.dims(), c.dims()), (&[0, 1][..], &[0, 0][..]));
    }

    #[test]
    fn nonsplit_extension_is_projective() {
        let q = a2();
        let f = Rationals;
        let s1 = Rep::simple(&f, &q, 0);
        let s2 = Rep::simple(&f, &q, 1);
        let p = presentation(&f, &q, &s1);
        let basis = p.ext_basis(&f, &q, &s2);
        let e = p.extension(&f, &q, &s2, &basis.column(0));
        assert_eq!(e.dims(), [1, 1]);
        assert!(!e.maps()[0].is_zero(&f));
    }
}
