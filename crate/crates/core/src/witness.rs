use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::derived::Stalk;

/// Why a predicate failed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Witness {
    /// `dim Hom(x, y[l]) = dim` where zero was required.
    Hom { x: Stalk, y: Stalk, l: i32, dim: usize },
    /// `End(x)` is not one-dimensional.
    Endomorphisms { x: Stalk, dim: usize },
    /// A nonzero object orthogonal to the whole set.
    Perp(Stalk),
    /// An object outside the set that could be added.
    NotMaximal(Stalk),
    WrongSize { expected: usize, found: usize },
    Duplicate(Stalk),
    OutsideDomain(Stalk),
    /// The orbit category has the wrong type for this predicate.
    WrongAmbient,
    /// A cycle in the `Ext`-digraph.
    Cycle(Vec<Stalk>),
}

impl Witness {
    /// Formats the witness with a caller-chosen name for each stalk.
    pub fn render(&self, label: impl Fn(&Stalk) -> String) -> String {
        let st = label;
        match self {
            Witness::Hom { x, y, l, dim } => {
                alloc::format!("dim Hom({}, {}[{l}]) = {dim}", st(x), st(y))
            }
            Witness::Endomorphisms { x, dim } => alloc::format!("dim End({}) = {dim}", st(x)),
            Witness::Perp(x) => alloc::format!("{} is orthogonal to the set", st(x)),
            Witness::NotMaximal(x) => alloc::format!("{} can be added", st(x)),
            Witness::WrongSize { expected, found } => {
                alloc::format!("{found} elements, expected {expected}")
            }
            Witness::Duplicate(x) => alloc::format!("{} repeated", st(x)),
            Witness::OutsideDomain(x) => alloc::format!("{} is outside the fundamental domain", st(x)),
            Witness::WrongAmbient => String::from("wrong orbit category"),
            Witness::Cycle(c) => {
                let mut out = String::from("Ext cycle");
                for s in c {
                    out.push(' ');
                    out.push_str(&st(s));
                }
                out
            }
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|s| alloc::format!("#{}[{}]", s.ind, s.shift)))
    }
}

/// Outcome of a predicate: `Ok(())` or the first failure found.
pub type Verdict = core::result::Result<(), Witness>;
