//! Clique search over bitset graphs, split into independent per-root tasks.

use alloc::vec::Vec;
use core::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Runs independent tasks `0..roots` and returns their results in order.
/// The `silting` crate provides a thread-pool implementation.
pub trait RootRunner {
    fn run<T, G>(&self, roots: usize, task: G) -> Vec<T>
    where
        T: Send,
        G: Fn(usize) -> T + Sync + Send;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl RootRunner for Sequential {
    fn run<T, G>(&self, roots: usize, task: G) -> Vec<T>
    where
        T: Send,
        G: Fn(usize) -> T + Sync + Send,
    {
        (0..roots).map(task).collect()
    }
}

/// Caps the number of search nodes visited, shared across workers.
#[derive(Debug, Default)]
pub struct Budget {
    limit: Option<u64>,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: Option<u64>) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Budget::new(None)
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn limit(&self) -> Option<u64> {
        self.limit
    }

    fn tick(&self) -> Result<()> {
        let used = self.used.fetch_add(1, Ordering::Relaxed) + 1;
        match self.limit {
            Some(limit) if used > limit => Err(Error::BudgetExceeded(limit)),
            _ => Ok(()),
        }
    }
}

/// Undirected graph without loops, stored as adjacency bitsets.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

type Bits = Vec<u64>;

fn bit_iter(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        core::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * 64 + b)
        })
    })
}

fn count(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

fn and(a: &[u64], b: &[u64]) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn is_empty(bits: &[u64]) -> bool {
    bits.iter().all(|&w| w == 0)
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            adj: alloc::vec![0; n * words],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.adj[a * self.words + b / 64] |= 1 << (b % 64);
            self.adj[b * self.words + a / 64] |= 1 << (a % 64);
        }
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    fn row(&self, a: usize) -> &[u64] {
        &self.adj[a * self.words..(a + 1) * self.words]
    }

    /// Bits of the vertices strictly above (`above = true`) or below `v`.
    fn side(&self, v: usize, above: bool) -> Bits {
        (0..self.words)
            .map(|w| {
                let mut word = 0u64;
                for b in 0..64 {
                    let u = w * 64 + b;
                    if u < self.n && ((above && u > v) || (!above && u < v)) {
                        word |= 1 << b;
                    }
                }
                word
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliqueMode {
    /// Cliques with exactly this many vertices.
    Exact(usize),
    /// Maximal cliques.
    Maximal,
}

/// Cliques whose smallest vertex is `root`, each passed to `sink` as an
/// increasing vertex list.
pub fn cliques_from_root(
    g: &Graph,
    root: usize,
    mode: CliqueMode,
    budget: &Budget,
    sink: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    let mut r = alloc::vec![root];
    let above = and(g.row(root), &g.side(root, true));
    match mode {
        CliqueMode::Exact(k) => exact(g, &mut r, above, k, budget, sink),
        CliqueMode::Maximal => {
            let below = and(g.row(root), &g.side(root, false));
            bron_kerbosch(g, &mut r, above, below, budget, sink)
        }
    }
}

fn exact(
    g: &Graph,
    r: &mut Vec<usize>,
    cand: Bits,
    k: usize,
    budget: &Budget,
    sink: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    budget.tick()?;
    if r.len() == k {
        return sink(r);
    }
    if r.len() + count(&cand) < k {
        return Ok(());
    }
    for u in bit_iter(&cand).collect::<Vec<_>>() {
        let next = and(&and(&cand, g.row(u)), &g.side(u, true));
        r.push(u);
        exact(g, r, next, k, budget, sink)?;
        r.pop();
    }
    Ok(())
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: Bits,
    mut x: Bits,
    budget: &Budget,
    sink: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    budget.tick()?;
    if is_empty(&p) {
        if is_empty(&x) {
            let mut clique = r.clone();
            clique.sort_unstable();
            sink(&clique)?;
        }
        return Ok(());
    }
    let pivot = bit_iter(&p)
        .chain(bit_iter(&x))
        .max_by_key(|&u| (count(&and(&p, g.row(u))), core::cmp::Reverse(u)))
        .expect("p is nonempty");
    let branch: Vec<usize> = bit_iter(&p).filter(|&v| !g.adjacent(pivot, v)).collect();
    for v in branch {
        r.push(v);
        bron_kerbosch(g, r, and(&p, g.row(v)), and(&x, g.row(v)), budget, sink)?;
        r.pop();
        p[v / 64] &= !(1 << (v % 64));
        x[v / 64] |= 1 << (v % 64);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(g: &Graph, mode: CliqueMode) -> Vec<Vec<usize>> {
        let budget = Budget::unlimited();
        let mut out = Vec::new();
        for root in 0..g.len() {
            cliques_from_root(g, root, mode, &budget, &mut |c| {
                out.push(c.to_vec());
                Ok(())
            })
            .unwrap();
        }
        out.sort();
        out
    }

    #[test]
    fn cliques_of_a_small_graph() {
        // two triangles sharing the edge 1-2, plus an isolated vertex 4
        let mut g = Graph::new(5);
        for (a, b) in [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)] {
            g.add_edge(a, b);
        }
        assert_eq!(all(&g, CliqueMode::Maximal), [vec![0, 1, 2], vec![1, 2, 3], vec![4]]);
        assert_eq!(all(&g, CliqueMode::Exact(2)).len(), 5);
        assert_eq!(all(&g, CliqueMode::Exact(3)).len(), 2);
    }

    #[test]
    fn wide_graphs_cross_word_boundaries() {
        let mut g = Graph::new(130);
        g.add_edge(3, 70);
        g.add_edge(70, 129);
        g.add_edge(3, 129);
        let tri = all(&g, CliqueMode::Exact(3));
        assert_eq!(tri, [vec![3, 70, 129]]);
    }

    #[test]
    fn budget_stops_the_search() {
        let mut g = Graph::new(12);
        for a in 0..12 {
            for b in a + 1..12 {
                g.add_edge(a, b);
            }
        }
        let budget = Budget::new(Some(10));
        let r = cliques_from_root(&g, 0, CliqueMode::Exact(6), &budget, &mut |_| Ok(()));
        assert_eq!(r, Err(Error::BudgetExceeded(10)));
    }
}
