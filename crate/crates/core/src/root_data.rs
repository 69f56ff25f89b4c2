//! Dynkin and Weyl group numerics: Cartan matrices, exponents, Coxeter
//! numbers, positive roots and the two Fuss-Catalan products.
//!
//! All counting is exact. The E-series values overflow 64-bit integers for
//! moderate `d`, so results are [`BigUint`].

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];
}

/// A Dynkin label such as `A3` or `E8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::RankOutOfRange {
                family: family.letter(),
                rank,
            });
        }
        Ok(DynkinType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Edges of the Dynkin diagram on vertices `0..rank`, with the number of
    /// bonds. A `B_n`/`C_n` double bond joins the last two vertices, `F_4`'s
    /// joins the middle pair.
    pub fn diagram(&self) -> Vec<(usize, usize, u8)> {
        let n = self.rank;
        let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1, 1u8));
        match self.family {
            Family::A => chain(n).collect(),
            Family::B | Family::C => {
                let mut e: Vec<_> = chain(n - 1).collect();
                e.push((n - 2, n - 1, 2));
                e
            }
            Family::D => {
                let mut e: Vec<_> = chain(n - 1).collect();
                e.push((n - 3, n - 1, 1));
                e
            }
            Family::E => {
                let mut e: Vec<_> = chain(n - 1).collect();
                e.push((2, n - 1, 1));
                e
            }
            Family::F => alloc::vec![(0, 1, 1), (1, 2, 2), (2, 3, 1)],
            Family::G => alloc::vec![(0, 1, 3)],
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    /// Accepts `A3`, `A_3`, `a3`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnknownLabel(t.to_string())),
        };
        let rest = chars.as_str();
        let rest = rest.strip_prefix('_').unwrap_or(rest);
        let rank: usize = rest
            .parse()
            .map_err(|_| Error::UnknownLabel(t.to_string()))?;
        DynkinType::new(family, rank)
    }
}

/// Which Fuss-Catalan product to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `prod (d h + e_i + 1) / (e_i + 1)`
    Full,
    /// `prod (d h + e_i - 1) / (e_i + 1)`
    Positive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub dynkin: DynkinType,
    pub coxeter_number: u32,
    pub exponents: Vec<u32>,
    /// `cartan[i][j] = <alpha_i^vee, alpha_j>`.
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, sorted lexicographically.
    pub positive_roots: Vec<Vec<i64>>,
    pub simply_laced: bool,
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.dynkin.rank()
    }

    pub fn positive_root_count(&self) -> usize {
        self.positive_roots.len()
    }
}

fn exponents_of(ty: DynkinType) -> (u32, Vec<u32>) {
    let n = ty.rank() as u32;
    match ty.family() {
        Family::A => (n + 1, (1..=n).collect()),
        Family::B | Family::C => (2 * n, (1..=n).map(|i| 2 * i - 1).collect()),
        Family::D => {
            let mut e: Vec<u32> = (1..n).map(|i| 2 * i - 1).collect();
            e.push(n - 1);
            e.sort_unstable();
            (2 * (n - 1), e)
        }
        Family::E => match n {
            6 => (12, alloc::vec![1, 4, 5, 7, 8, 11]),
            7 => (18, alloc::vec![1, 5, 7, 9, 11, 13, 17]),
            _ => (30, alloc::vec![1, 7, 11, 13, 17, 19, 23, 29]),
        },
        Family::F => (12, alloc::vec![1, 5, 7, 11]),
        Family::G => (6, alloc::vec![1, 5]),
    }
}

fn cartan_of(ty: DynkinType) -> Vec<Vec<i64>> {
    let n = ty.rank();
    let mut a = alloc::vec![alloc::vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j, bonds) in ty.diagram() {
        a[i][j] = -1;
        a[j][i] = -1;
        if bonds > 1 {
            // The long root sits at the lower index for B, F and G.
            a[j][i] = -(bonds as i64);
        }
    }
    if ty.family() == Family::C {
        // C_n is the transpose of B_n.
        let t: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect();
        return t;
    }
    a
}

/// Closure of the simple roots under simple reflections, keeping positives.
fn positive_roots_of(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let simple = |i: usize| {
        let mut v = alloc::vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let s = simple(i);
        seen.insert(s.clone());
        queue.push_back(s);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            if beta == simple(i) {
                continue;
            }
            let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
            let mut gamma = beta.clone();
            gamma[i] -= pairing;
            debug_assert!(gamma.iter().all(|&c| c >= 0));
            if seen.insert(gamma.clone()) {
                queue.push_back(gamma);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn make_root_datum(dynkin: DynkinType) -> Result<RootDatum> {
    let (h, exponents) = exponents_of(dynkin);
    let cartan = cartan_of(dynkin);
    let positive_roots = positive_roots_of(&cartan);
    let n = dynkin.rank() as u32;
    if positive_roots.len() as u32 * 2 != n * h || exponents.iter().sum::<u32>() * 2 != n * h {
        return Err(Error::Construction(alloc::format!(
            "{dynkin}: root count does not match n*h/2"
        )));
    }
    Ok(RootDatum {
        dynkin,
        coxeter_number: h,
        exponents,
        cartan,
        positive_roots,
        simply_laced: dynkin.is_simply_laced(),
    })
}

/// Parses a label and builds its datum.
pub fn root_datum(label: &str) -> Result<RootDatum> {
    make_root_datum(label.parse()?)
}

fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn to_natural(q: BigRational, what: &str) -> Result<BigUint> {
    if !q.is_integer() || q.is_negative() {
        return Err(Error::Arithmetic(alloc::format!(
            "{what} is not a nonnegative integer: {q}"
        )));
    }
    Ok(q.to_integer().to_biguint().expect("checked nonnegative"))
}

fn check_d(d: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".to_string()));
    }
    Ok(())
}

/// The Fuss-Catalan product over the exponents, in exact arithmetic.
pub fn fuss_catalan(datum: &RootDatum, d: u32, variant: Variant) -> Result<BigUint> {
    check_d(d)?;
    let dh = d as i64 * datum.coxeter_number as i64;
    let mut acc = BigRational::one();
    for &e in &datum.exponents {
        let e = e as i64;
        let num = match variant {
            Variant::Full => dh + e + 1,
            Variant::Positive => dh + e - 1,
        };
        acc *= BigRational::new(BigInt::from(num), BigInt::from(e + 1));
    }
    to_natural(acc, "Fuss-Catalan product")
}

fn binom(n: i64, k: i64) -> BigRational {
    if k < 0 || n < k || n < 0 {
        return rational(0);
    }
    BigRational::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

fn poly(d: i64, factors: &[(i64, i64)], denom: i64) -> BigRational {
    let mut acc = BigRational::one();
    for &(a, b) in factors {
        acc *= rational(a * d + b);
    }
    acc / rational(denom)
}

/// Closed-form counts tabulated per Dynkin family. The positive variant is
/// available for every family; the full variant has closed forms for A, B
/// and C and falls back to [`fuss_catalan`] otherwise.
pub fn figure1_closed_form(datum: &RootDatum, d: u32, variant: Variant) -> Result<BigUint> {
    check_d(d)?;
    let n = datum.rank() as i64;
    let di = d as i64;
    let q = match (variant, datum.dynkin.family()) {
        (Variant::Positive, Family::A) => binom((di + 1) * n + di - 1, n) / rational(n + 1),
        (Variant::Positive, Family::B | Family::C) => binom((di + 1) * n - 1, n),
        (Variant::Positive, Family::D) => {
            rational((2 * di + 1) * n - 2 * di - 2) / rational(n)
                * binom((n - 1) * (di + 1) - 1, n - 1)
        }
        (Variant::Positive, Family::E) => match n {
            6 => poly(di, &[(1, 0), (2, 1), (3, 1), (4, 1), (6, 5), (12, 7)], 30),
            7 => poly(di, &[(1, 0), (3, 1), (3, 2), (9, 2), (9, 4), (9, 5), (9, 8)], 280),
            _ => poly(
                di,
                &[(1, 0), (3, 1), (5, 1), (5, 2), (5, 3), (15, 8), (15, 11), (15, 14)],
                1344,
            ),
        },
        (Variant::Positive, Family::F) => poly(di, &[(1, 0), (2, 1), (3, 1), (6, 5)], 2),
        (Variant::Positive, Family::G) => rational(3 * di * di + 2 * di),
        (Variant::Full, Family::A) => binom((di + 1) * (n + 1), n) / rational(n + 1),
        (Variant::Full, Family::B | Family::C) => binom((di + 1) * n, n),
        (Variant::Full, _) => return fuss_catalan(datum, d, variant),
    };
    to_natural(q, "closed form")
}

/// Convenience for small values in tests and reports.
pub fn to_u64(v: &BigUint) -> Option<u64> {
    v.to_u64()
}

/// Every label with rank at most `max_rank`, one per family member.
pub fn all_types_up_to(max_rank: usize) -> Vec<DynkinType> {
    let mut out = Vec::new();
    for fam in Family::ALL {
        for rank in 1..=max_rank {
            if let Ok(t) = DynkinType::new(fam, rank) {
                out.push(t);
            }
        }
    }
    out
}

pub fn label(ty: &DynkinType) -> String {
    ty.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn a3_datum() {
        let r = root_datum("A_3").unwrap();
        assert_eq!(r.coxeter_number, 4);
        assert_eq!(r.exponents, [1, 2, 3]);
        assert_eq!(r.positive_root_count(), 6);
        assert!(r.simply_laced);
    }

    #[test]
    fn a1_and_e6() {
        let r = root_datum("A1").unwrap();
        assert_eq!((r.coxeter_number, r.positive_root_count()), (2, 1));
        let e6 = root_datum("E6").unwrap();
        assert_eq!(e6.coxeter_number, 12);
        assert_eq!(e6.exponents, [1, 4, 5, 7, 8, 11]);
        assert_eq!(e6.positive_root_count(), 36);
    }

    #[test]
    fn bad_labels() {
        assert!(matches!(root_datum("D3"), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(root_datum("E9"), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(root_datum("H3"), Err(Error::UnknownLabel(_))));
        assert!(matches!(root_datum("A"), Err(Error::UnknownLabel(_))));
        assert!(matches!(root_datum("B1"), Err(Error::RankOutOfRange { .. })));
    }

    #[test]
    fn classical_root_counts() {
        for t in all_types_up_to(8) {
            let r = make_root_datum(t).unwrap();
            let n = t.rank();
            let expect = match t.family() {
                Family::A => n * (n + 1) / 2,
                Family::B | Family::C => n * n,
                Family::D => n * (n - 1),
                Family::E => [36, 63, 120][n - 6],
                Family::F => 24,
                Family::G => 6,
            };
            assert_eq!(r.positive_root_count(), expect, "{t}");
            if r.simply_laced {
                for i in 0..n {
                    for j in 0..n {
                        assert_eq!(r.cartan[i][j], r.cartan[j][i]);
                    }
                }
            }
        }
    }

    #[test]
    fn worked_counts() {
        let a3 = root_datum("A3").unwrap();
        assert_eq!(fuss_catalan(&a3, 1, Variant::Positive).unwrap(), u(5));
        let a2 = root_datum("A2").unwrap();
        assert_eq!(fuss_catalan(&a2, 2, Variant::Positive).unwrap(), u(7));
        assert_eq!(fuss_catalan(&a2, 1, Variant::Full).unwrap(), u(5));
        let a1 = root_datum("A1").unwrap();
        for d in 1..20u32 {
            assert_eq!(fuss_catalan(&a1, d, Variant::Positive).unwrap(), u(d as u64));
        }
        assert_eq!(figure1_closed_form(&a3, 1, Variant::Positive).unwrap(), u(5));
        let d4 = root_datum("D4").unwrap();
        assert_eq!(figure1_closed_form(&d4, 1, Variant::Positive).unwrap(), u(20));
        assert_eq!(fuss_catalan(&d4, 1, Variant::Positive).unwrap(), u(20));
        let g2 = root_datum("G2").unwrap();
        assert_eq!(figure1_closed_form(&g2, 3, Variant::Positive).unwrap(), u(33));
        let e6 = root_datum("E6").unwrap();
        assert_eq!(fuss_catalan(&e6, 1, Variant::Positive).unwrap(), u(418));
    }

    #[test]
    fn zero_d_rejected() {
        let a2 = root_datum("A2").unwrap();
        assert!(fuss_catalan(&a2, 0, Variant::Full).is_err());
        assert!(figure1_closed_form(&a2, 0, Variant::Positive).is_err());
    }

    #[test]
    fn non_integral_product_is_reported() {
        let mut bogus = root_datum("A2").unwrap();
        bogus.exponents = alloc::vec![1, 3];
        assert!(matches!(
            fuss_catalan(&bogus, 1, Variant::Positive),
            Err(Error::Arithmetic(_))
        ));
    }
}
