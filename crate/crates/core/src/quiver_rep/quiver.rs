use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::root_data::DynkinType;

/// A path as the list of arrow indices it traverses, in order. The trivial
/// path at a vertex has no arrows.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            start: v,
            end: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Path) -> Path {
        debug_assert_eq!(self.end, next.start);
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Path {
            start: self.start,
            end: next.end,
            arrows,
        }
    }
}

/// A finite acyclic quiver on vertices `0..n`. Arrow indices are stable, so
/// representations can store one matrix per arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
    dynkin: Option<DynkinType>,
    /// `paths[i][j]`: all paths from `i` to `j`, shortest first.
    paths: Vec<Vec<Vec<Path>>>,
}

impl Quiver {
    pub fn new(n: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidQuiver("no vertices".to_string()));
        }
        for &(s, t) in &arrows {
            if s >= n || t >= n {
                return Err(Error::InvalidQuiver(alloc::format!(
                    "arrow {}->{} leaves the vertex range 1..{n}",
                    s + 1,
                    t + 1
                )));
            }
            if s == t {
                return Err(Error::InvalidQuiver(alloc::format!("loop at vertex {}", s + 1)));
            }
        }
        let mut q = Quiver {
            n,
            arrows,
            dynkin: None,
            paths: Vec::new(),
        };
        if q.topological_order().is_none() {
            return Err(Error::InvalidQuiver("oriented cycle".to_string()));
        }
        q.paths = q.compute_paths();
        Ok(q)
    }

    /// The Dynkin quiver with default orientation: a linear chain for `A_n`,
    /// the chain plus the extra arrow pointing out of the branch vertex for
    /// `D_n`, and into the branch vertex for `E_n`.
    pub fn dynkin(ty: DynkinType) -> Result<Self> {
        if !ty.is_simply_laced() {
            return Err(Error::Unsupported(ty.to_string()));
        }
        let n = ty.rank();
        let mut arrows = Vec::new();
        for (i, j, _) in ty.diagram() {
            match ty.family() {
                crate::root_data::Family::E if j == n - 1 => arrows.push((j, i)),
                _ => arrows.push((i, j)),
            }
        }
        let mut q = Quiver::new(n, arrows)?;
        q.dynkin = Some(ty);
        Ok(q)
    }

    /// A Dynkin quiver with a user-chosen orientation. The arrows (0-based)
    /// must orient each diagram edge exactly once.
    pub fn dynkin_oriented(ty: DynkinType, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if !ty.is_simply_laced() {
            return Err(Error::Unsupported(ty.to_string()));
        }
        let want: BTreeSet<(usize, usize)> = ty
            .diagram()
            .into_iter()
            .map(|(i, j, _)| (i.min(j), i.max(j)))
            .collect();
        let got: Vec<(usize, usize)> = arrows.iter().map(|&(s, t)| (s.min(t), s.max(t))).collect();
        let got_set: BTreeSet<(usize, usize)> = got.iter().copied().collect();
        if got.len() != got_set.len() || got_set != want {
            return Err(Error::InvalidQuiver(alloc::format!(
                "orientation does not match the {ty} diagram"
            )));
        }
        let mut q = Quiver::new(ty.rank(), arrows)?;
        q.dynkin = Some(ty);
        Ok(q)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn dynkin_type(&self) -> Option<DynkinType> {
        self.dynkin
    }

    pub fn paths(&self, from: usize, to: usize) -> &[Path] {
        &self.paths[from][to]
    }

    pub fn path_index(&self, path: &Path) -> Option<usize> {
        self.paths[path.start][path.end].iter().position(|p| p == path)
    }

    pub fn arrows_out(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].0 == v)
    }

    pub fn arrows_in(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].1 == v)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows_out(v).next().is_none()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows_in(v).next().is_none()
    }

    /// Vertices with every arrow pointing forward, smallest index first
    /// among the available sources.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = alloc::vec![0usize; self.n];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        ready.insert(t);
                    }
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    /// Same vertices and arrow indices, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let arrows = self.arrows.iter().map(|&(s, t)| (t, s)).collect();
        let mut q = Quiver::new(self.n, arrows).expect("opposite of an acyclic quiver");
        q.dynkin = self.dynkin;
        q
    }

    /// Reverse every arrow incident to `k` (a sink or a source).
    pub fn reflect(&self, k: usize) -> Quiver {
        debug_assert!(self.is_sink(k) || self.is_source(k));
        let arrows = self
            .arrows
            .iter()
            .map(|&(s, t)| if s == k || t == k { (t, s) } else { (s, t) })
            .collect();
        let mut q = Quiver::new(self.n, arrows).expect("reflection at a sink or source");
        q.dynkin = self.dynkin;
        q
    }

    fn compute_paths(&self) -> Vec<Vec<Vec<Path>>> {
        let mut table = alloc::vec![alloc::vec![Vec::new(); self.n]; self.n];
        for (start, row) in table.iter_mut().enumerate() {
            let mut frontier = alloc::vec![Path::trivial(start)];
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for p in frontier {
                    for a in self.arrows_out(p.end) {
                        let mut arrows = p.arrows.clone();
                        arrows.push(a);
                        next.push(Path {
                            start,
                            end: self.arrows[a].1,
                            arrows,
                        });
                    }
                    row[p.end].push(p);
                }
                frontier = next;
            }
        }
        table
    }
}
