//! The bounded derived category of a Dynkin path algebra. Every object is a
//! direct sum of shifted indecomposable modules, so objects are stored as
//! sorted multisets of stalks; complexes appear only inside [`DerivedCategory::cone`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix};
use crate::quiver_rep::{
    build_catalog, morphism_from_projectives, subquotient, IndCatalog, Quiver, Rep, RepMorphism,
};

/// The indecomposable `M[shift]` with `M` the catalog entry `ind`. It sits
/// in cohomological degree `-shift`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Stalk {
    pub shift: i32,
    pub ind: usize,
}

impl Stalk {
    pub fn new(ind: usize, shift: i32) -> Self {
        Stalk { shift, ind }
    }

    pub fn shifted(self, by: i32) -> Self {
        Stalk {
            shift: self.shift + by,
            ind: self.ind,
        }
    }

    pub fn degree(self) -> i32 {
        -self.shift
    }
}

/// A finite direct sum of stalks with positive multiplicities, kept sorted
/// by `(shift, id)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DObject {
    summands: Vec<(Stalk, usize)>,
}

impl DObject {
    pub fn new(parts: impl IntoIterator<Item = (Stalk, usize)>) -> Self {
        let mut merged: BTreeMap<Stalk, usize> = BTreeMap::new();
        for (s, m) in parts {
            if m > 0 {
                *merged.entry(s).or_default() += m;
            }
        }
        DObject {
            summands: merged.into_iter().collect(),
        }
    }

    pub fn zero() -> Self {
        DObject::default()
    }

    pub fn stalk(s: Stalk) -> Self {
        DObject {
            summands: alloc::vec![(s, 1)],
        }
    }

    pub fn from_stalks(stalks: impl IntoIterator<Item = Stalk>) -> Self {
        DObject::new(stalks.into_iter().map(|s| (s, 1)))
    }

    pub fn summands(&self) -> &[(Stalk, usize)] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// The single stalk, if the object is indecomposable.
    pub fn as_stalk(&self) -> Option<Stalk> {
        match self.summands.as_slice() {
            [(s, 1)] => Some(*s),
            _ => None,
        }
    }

    pub fn shifted(&self, by: i32) -> Self {
        DObject {
            summands: self.summands.iter().map(|&(s, m)| (s.shifted(by), m)).collect(),
        }
    }

    pub fn direct_sum(&self, other: &DObject) -> Self {
        DObject::new(self.summands.iter().chain(&other.summands).copied())
    }

    /// Stalks repeated by multiplicity.
    pub fn expanded(&self) -> Vec<Stalk> {
        self.summands
            .iter()
            .flat_map(|&(s, m)| core::iter::repeat_n(s, m))
            .collect()
    }

    /// Number of indecomposable summands counted with multiplicity.
    pub fn len(&self) -> usize {
        self.summands.iter().map(|&(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WindowKind {
    /// `D^{[m,n]}`
    Plain,
    /// `D^{≤n} ∩ ν D^{≥m+1}`
    Minus,
    /// `D^{≤n} ∩ ν⁻¹ D^{≥m-1}`
    Plus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WindowSpec {
    pub kind: WindowKind,
    pub m: i32,
    pub n: i32,
}

impl WindowSpec {
    pub fn new(kind: WindowKind, m: i32, n: i32) -> Result<Self> {
        if m > n {
            return Err(Error::InvalidArgument(alloc::format!("empty window [{m},{n}]")));
        }
        Ok(WindowSpec { kind, m, n })
    }

    /// Range of shifts an indecomposable of the window can have.
    fn shift_range(&self) -> (i32, i32) {
        match self.kind {
            WindowKind::Plain => (-self.n, -self.m),
            WindowKind::Minus => (-self.n, -self.m),
            WindowKind::Plus => (-self.n, 1 - self.m),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NakayamaDirection {
    Nu,
    NuInverse,
}

/// A component of a map between stalks `M[s] -> N[t]`: an intertwiner when
/// `t = s`, or a class in `Ext^1(M, N)` (coordinates in the catalog's Ext
/// basis) when `t = s + 1`.
pub enum Component<F: Field> {
    Hom(RepMorphism<F>),
    Ext(Vec<F::Elem>),
}

impl<F: Field> Clone for Component<F> {
    fn clone(&self) -> Self {
        match self {
            Component::Hom(h) => Component::Hom(h.clone()),
            Component::Ext(e) => Component::Ext(e.clone()),
        }
    }
}

/// A morphism between direct sums of stalks. Summands are listed one per
/// copy; components name `(source index, target index)`.
pub struct DMap<F: Field> {
    pub source: Vec<Stalk>,
    pub target: Vec<Stalk>,
    pub components: Vec<(usize, usize, Component<F>)>,
}

struct Piece<F: Field> {
    /// Degree inside the cone complex.
    cdeg: i32,
    rep: Rep<F>,
}

/// `D^b(mod kQ)` for a Dynkin quiver `Q`.
pub struct DerivedCategory<F: Field> {
    catalog: IndCatalog<F>,
}

impl<F: Field> core::fmt::Debug for DerivedCategory<F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("DerivedCategory")
            .field("catalog", &self.catalog)
            .finish()
    }
}

impl<F: Field> DerivedCategory<F> {
    pub fn new(quiver: &Quiver, field: &F) -> Result<Self> {
        Ok(DerivedCategory {
            catalog: build_catalog(quiver, field)?,
        })
    }

    pub fn from_catalog(catalog: IndCatalog<F>) -> Self {
        DerivedCategory { catalog }
    }

    pub fn catalog(&self) -> &IndCatalog<F> {
        &self.catalog
    }

    pub fn field(&self) -> &F {
        self.catalog.field()
    }

    pub fn quiver(&self) -> &Quiver {
        self.catalog.quiver()
    }

    pub fn rank(&self) -> usize {
        self.quiver().vertex_count()
    }

    /// `dim Hom(M_a[i], M_b[j][l])`.
    pub fn stalk_hom(&self, x: Stalk, y: Stalk, l: i32) -> usize {
        match y.shift + l - x.shift {
            0 => self.catalog.hom(x.ind, y.ind),
            1 => self.catalog.ext(x.ind, y.ind),
            _ => 0,
        }
    }

    /// `dim Hom(X, Y[l])`.
    pub fn graded_hom(&self, x: &DObject, y: &DObject, l: i32) -> usize {
        let mut total = 0;
        for &(a, ma) in x.summands() {
            for &(b, mb) in y.summands() {
                total += ma * mb * self.stalk_hom(a, b, l);
            }
        }
        total
    }

    /// `Σ_l dim Hom(X, Y[l])`.
    pub fn total_hom(&self, x: Stalk, y: Stalk) -> usize {
        let e = y.shift - x.shift;
        self.stalk_hom(x, y, -e) + self.stalk_hom(x, y, 1 - e)
    }

    /// First module `M` (by catalog id) with `Hom(M, X[l]) = 0` for every
    /// `X` in `set` and every `l`.
    pub fn left_perp_module(&self, set: &[Stalk]) -> Option<usize> {
        (0..self.catalog.len())
            .find(|&m| set.iter().all(|&x| self.total_hom(Stalk::new(m, 0), x) == 0))
    }

    /// Human-readable name: the dimension vector followed by the shift,
    /// e.g. `(0,1,1)[1]`.
    pub fn stalk_label(&self, s: Stalk) -> alloc::string::String {
        let dims: Vec<alloc::string::String> = self
            .catalog
            .dim_vector(s.ind)
            .iter()
            .map(|d| alloc::format!("{d}"))
            .collect();
        alloc::format!("({})[{}]", dims.join(","), s.shift)
    }

    pub fn nu_stalk(&self, s: Stalk) -> Stalk {
        let (d, id) = self.catalog.nu(s.ind);
        Stalk::new(id, s.shift + d)
    }

    pub fn nu_inverse_stalk(&self, s: Stalk) -> Stalk {
        let (d, id) = self.catalog.nu_inverse(s.ind);
        Stalk::new(id, s.shift + d)
    }

    pub fn nakayama(&self, x: &DObject, direction: NakayamaDirection) -> DObject {
        DObject::new(x.summands().iter().map(|&(s, m)| {
            let t = match direction {
                NakayamaDirection::Nu => self.nu_stalk(s),
                NakayamaDirection::NuInverse => self.nu_inverse_stalk(s),
            };
            (t, m)
        }))
    }

    /// `X ∈ D^{≤n}`: every summand in cohomological degree at most `n`.
    pub fn in_le(x: &DObject, n: i32) -> bool {
        x.summands().iter().all(|(s, _)| s.degree() <= n)
    }

    /// `X ∈ D^{≥m}`.
    pub fn in_ge(x: &DObject, m: i32) -> bool {
        x.summands().iter().all(|(s, _)| s.degree() >= m)
    }

    pub fn stalk_in_window(&self, s: Stalk, w: &WindowSpec) -> bool {
        let deg = s.degree();
        match w.kind {
            WindowKind::Plain => w.m <= deg && deg <= w.n,
            WindowKind::Minus => deg <= w.n && self.nu_inverse_stalk(s).degree() > w.m,
            WindowKind::Plus => deg <= w.n && self.nu_stalk(s).degree() >= w.m - 1,
        }
    }

    pub fn in_window(&self, x: &DObject, w: &WindowSpec) -> bool {
        x.summands().iter().all(|&(s, _)| self.stalk_in_window(s, w))
    }

    /// The indecomposables of a window, sorted canonically.
    pub fn window_indecomposables(&self, w: &WindowSpec) -> Vec<Stalk> {
        let (lo, hi) = w.shift_range();
        let mut out = Vec::new();
        for shift in lo..=hi {
            for ind in 0..self.catalog.len() {
                let s = Stalk::new(ind, shift);
                if self.stalk_in_window(s, w) {
                    out.push(s);
                }
            }
        }
        out
    }

    /// Irreducible maps between indecomposables of `D^b`: a nonzero map
    /// `X -> Y` that does not factor through an intermediate indecomposable.
    pub fn is_irreducible(&self, x: Stalk, y: Stalk) -> bool {
        if x == y || self.stalk_hom(x, y, 0) == 0 {
            return false;
        }
        for shift in [x.shift, x.shift + 1] {
            for ind in 0..self.catalog.len() {
                let z = Stalk::new(ind, shift);
                if z != x
                    && z != y
                    && self.stalk_hom(x, z, 0) != 0
                    && self.stalk_hom(z, y, 0) != 0
                {
                    return false;
                }
            }
        }
        true
    }

    /// The identity of a stalk as a map component.
    pub fn identity_component(&self, s: Stalk) -> Component<F> {
        Component::Hom(self.catalog.rep(s.ind).identity(self.field()))
    }

    /// The mapping cone, decomposed into stalks. Source summands are
    /// replaced by their projective presentations; the target stays a
    /// complex with zero differential.
    pub fn cone(&self, f: &DMap<F>) -> Result<DObject> {
        let field = self.field();
        let q = self.quiver();
        let cat = &self.catalog;
        let nv = q.vertex_count();
        let mut pieces: Vec<Piece<F>> = Vec::new();
        let mut p0_of = Vec::with_capacity(f.source.len());
        let mut p1_of = Vec::with_capacity(f.source.len());
        let mut edges: Vec<(usize, usize, RepMorphism<F>)> = Vec::new();
        for (a, s) in f.source.iter().enumerate() {
            let pres = cat.presentation(s.ind);
            p0_of.push(pieces.len());
            pieces.push(Piece {
                cdeg: -s.shift - 1,
                rep: pres.p0(field, q),
            });
            p1_of.push(pieces.len());
            pieces.push(Piece {
                cdeg: -s.shift - 2,
                rep: pres.p1(field, q),
            });
            let iota = pres.differential(field, q);
            let neg = RepMorphism {
                maps: iota.maps.iter().map(|m| m.neg(field)).collect(),
            };
            edges.push((p1_of[a], p0_of[a], neg));
        }
        let mut target_of = Vec::with_capacity(f.target.len());
        for t in &f.target {
            target_of.push(pieces.len());
            pieces.push(Piece {
                cdeg: -t.shift,
                rep: cat.rep(t.ind).clone(),
            });
        }
        for (a, b, comp) in &f.components {
            let (a, b) = (*a, *b);
            let (Some(s), Some(t)) = (f.source.get(a), f.target.get(b)) else {
                return Err(Error::MalformedMap(alloc::format!(
                    "component ({a},{b}) names a missing summand"
                )));
            };
            let pres = cat.presentation(s.ind);
            let n = cat.rep(t.ind);
            match comp {
                Component::Hom(h) => {
                    if t.shift != s.shift {
                        return Err(Error::MalformedMap(
                            "Hom component between different shifts".into(),
                        ));
                    }
                    let m = cat.rep(s.ind);
                    let shapes_ok = h.maps.len() == nv
                        && (0..nv).all(|v| {
                            h.maps[v].rows() == n.dims()[v] && h.maps[v].cols() == m.dims()[v]
                        });
                    if !shapes_ok || !h.is_intertwiner(field, q, m, n) {
                        return Err(Error::MalformedMap("component is not a morphism".into()));
                    }
                    let images = pres.generator_images(field, h);
                    let g = morphism_from_projectives(field, q, &pres.tops, &images, n);
                    edges.push((p0_of[a], target_of[b], g));
                }
                Component::Ext(coords) => {
                    let basis = cat.ext_basis(s.ind, t.ind);
                    if t.shift != s.shift + 1 || coords.len() != basis.cols() {
                        return Err(Error::MalformedMap("Ext component has wrong shape".into()));
                    }
                    let g = basis.mul(field, &Matrix::column_vector(coords.clone()));
                    let mut images = Vec::with_capacity(pres.syzygy_tops.len());
                    let mut off = 0;
                    for &j in &pres.syzygy_tops {
                        images.push(
                            (off..off + n.dims()[j]).map(|r| g.get(r, 0).clone()).collect(),
                        );
                        off += n.dims()[j];
                    }
                    let g = morphism_from_projectives(field, q, &pres.syzygy_tops, &images, n);
                    edges.push((p1_of[a], target_of[b], g));
                }
            }
        }
        let Some(lo) = pieces.iter().map(|p| p.cdeg).min() else {
            return Ok(DObject::zero());
        };
        let hi = pieces.iter().map(|p| p.cdeg).max().unwrap_or(lo);
        // Offsets of each piece inside its cone term, per vertex.
        let mut offsets: Vec<Vec<usize>> = alloc::vec![alloc::vec![0; nv]; pieces.len()];
        let mut term_dims: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        for (i, p) in pieces.iter().enumerate() {
            let dims = term_dims.entry(p.cdeg).or_insert_with(|| alloc::vec![0; nv]);
            offsets[i].copy_from_slice(dims);
            for (d, &k) in dims.iter_mut().zip(p.rep.dims()) {
                *d += k;
            }
        }
        let zero_dims = alloc::vec![0; nv];
        let dims_at = |k: i32| term_dims.get(&k).cloned().unwrap_or_else(|| zero_dims.clone());
        let term_rep = |k: i32| -> Rep<F> {
            let parts: Vec<&Rep<F>> = pieces.iter().filter(|p| p.cdeg == k).map(|p| &p.rep).collect();
            Rep::direct_sum_all(field, q, parts)
        };
        let differential = |k: i32| -> Vec<Matrix<F>> {
            let (src, dst) = (dims_at(k), dims_at(k + 1));
            let mut maps: Vec<Matrix<F>> =
                (0..nv).map(|v| Matrix::zeros(field, dst[v], src[v])).collect();
            for (from, to, g) in &edges {
                if pieces[*from].cdeg != k {
                    continue;
                }
                debug_assert_eq!(pieces[*to].cdeg, k + 1);
                for v in 0..nv {
                    // Repeated components between the same pieces add up.
                    let (r0, c0) = (offsets[*to][v], offsets[*from][v]);
                    for r in 0..g.maps[v].rows() {
                        for c in 0..g.maps[v].cols() {
                            let sum = field.add(maps[v].get(r0 + r, c0 + c), g.maps[v].get(r, c));
                            maps[v].set(r0 + r, c0 + c, sum);
                        }
                    }
                }
            }
            maps
        };
        let mut out = Vec::new();
        let mut prev = differential(lo - 1);
        for k in lo..=hi {
            let next = differential(k);
            let rep = term_rep(k);
            let upper: Vec<Matrix<F>> = next.iter().map(|m| linalg::kernel(field, m)).collect();
            let h = subquotient(field, q, &rep, &upper, &prev);
            for (id, mult) in cat.decompose(&h)? {
                out.push((Stalk::new(id, -k), mult));
            }
            prev = next;
        }
        Ok(DObject::new(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn a2() -> DerivedCategory<Rationals> {
        let q = Quiver::dynkin("A2".parse().unwrap()).unwrap();
        DerivedCategory::new(&q, &Rationals).unwrap()
    }

    #[test]
    fn graded_hom_examples() {
        let d = a2();
        let c = d.catalog();
        let s1 = Stalk::new(c.simple_id(0), 0);
        let s2 = Stalk::new(c.simple_id(1), 0);
        assert_eq!(d.graded_hom(&DObject::stalk(s1), &DObject::stalk(s2.shifted(1)), 0), 1);
        let h = DObject::from_stalks([
            Stalk::new(c.projective_id(0), 0),
            Stalk::new(c.projective_id(1), 0),
        ]);
        assert_eq!(d.graded_hom(&h, &h.shifted(1), 0), 0);
        assert_eq!(d.graded_hom(&h, &h, 5), 0);
    }

    #[test]
    fn nakayama_examples() {
        let d = a2();
        let c = d.catalog();
        let s1 = DObject::stalk(Stalk::new(c.simple_id(0), 0));
        let s2_1 = DObject::stalk(Stalk::new(c.simple_id(1), 1));
        assert_eq!(d.nakayama(&s1, NakayamaDirection::Nu), s2_1);
        for v in 0..2 {
            let p = DObject::stalk(Stalk::new(c.projective_id(v), 0));
            let i = DObject::stalk(Stalk::new(c.injective_id(v), 0));
            assert_eq!(d.nakayama(&p, NakayamaDirection::Nu), i);
        }
    }

    #[test]
    fn window_examples() {
        let d = a2();
        let c = d.catalog();
        let w = WindowSpec::new(WindowKind::Minus, -1, 0).unwrap();
        assert!(d.in_window(&DObject::stalk(Stalk::new(c.simple_id(1), 1)), &w));
        assert!(!d.in_window(&DObject::stalk(Stalk::new(c.injective_id(0), 1)), &w));
        let plain = WindowSpec::new(WindowKind::Plain, 0, 0).unwrap();
        for id in 0..c.len() {
            assert!(d.in_window(&DObject::stalk(Stalk::new(id, 0)), &plain));
        }
        assert!(WindowSpec::new(WindowKind::Plain, 1, 0).is_err());
    }

    #[test]
    fn cone_examples() {
        let d = a2();
        let c = d.catalog();
        let f = Rationals;
        let p1 = c.projective_id(0);
        let p2 = c.projective_id(1);
        let s1 = c.simple_id(0);
        let s2 = c.simple_id(1);
        let surj = c.hom_basis(p1, s1)[0].clone();
        let map = DMap {
            source: alloc::vec![Stalk::new(p1, 0)],
            target: alloc::vec![Stalk::new(s1, 0)],
            components: alloc::vec![(0, 0, Component::Hom(surj))],
        };
        assert_eq!(d.cone(&map).unwrap(), DObject::stalk(Stalk::new(s2, 1)));
        let inc = c.hom_basis(p2, p1)[0].clone();
        let map = DMap {
            source: alloc::vec![Stalk::new(p2, 0)],
            target: alloc::vec![Stalk::new(p1, 0)],
            components: alloc::vec![(0, 0, Component::Hom(inc))],
        };
        assert_eq!(d.cone(&map).unwrap(), DObject::stalk(Stalk::new(s1, 0)));
        for id in 0..c.len() {
            let s = Stalk::new(id, 2);
            let map = DMap {
                source: alloc::vec![s],
                target: alloc::vec![s],
                components: alloc::vec![(0, 0, Component::Hom(c.rep(id).identity(&f)))],
            };
            assert!(d.cone(&map).unwrap().is_zero());
        }
    }

    #[test]
    fn cone_rejects_bad_shapes() {
        let d = a2();
        let c = d.catalog();
        let s1 = c.simple_id(0);
        let s2 = c.simple_id(1);
        let map = DMap {
            source: alloc::vec![Stalk::new(s1, 0)],
            target: alloc::vec![Stalk::new(s2, 0)],
            components: alloc::vec![(0, 0, Component::Ext(alloc::vec![Rationals.one()]))],
        };
        assert!(matches!(d.cone(&map), Err(Error::MalformedMap(_))));
        let ok = DMap {
            source: alloc::vec![Stalk::new(s1, 0)],
            target: alloc::vec![Stalk::new(s2, 1)],
            components: alloc::vec![(0, 0, Component::Ext(alloc::vec![Rationals.one()]))],
        };
        // The nonsplit extension: cone(S_1 -> S_2[1]) = P(1)[1].
        let p1 = c.projective_id(0);
        assert_eq!(d.cone(&ok).unwrap(), DObject::stalk(Stalk::new(p1, 1)));
    }
}
