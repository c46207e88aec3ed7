//! Exact rational scalars, dense matrices and determinant / minor kernels.
//!
//! Every entry in the crate is a [`Rational`] (an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator). Nothing here
//! ever rounds.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Default cap on the number of minors [`all_minors_nonneg`] will evaluate.
pub const DEFAULT_MINOR_BUDGET: u64 = 2_000_000;

/// Laplace expansion is factorial; refuse anything larger.
pub const COFACTOR_MAX_DIM: usize = 9;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"`, `"p/q"` or `"-p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: `{s}`"));
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(Rational::from_integer)
            .map_err(|_| bad()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Integers print bare, everything else as `p/q`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Serde adapter: a rational as a `"p/q"` string.
pub mod serde_rational {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let raw = RawRational::deserialize(d)?;
        raw.into_rational().map_err(serde::de::Error::custom)
    }

    /// Accept both `"3/4"` and a bare JSON integer.
    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(super) enum RawRational {
        Text(String),
        Int(i64),
    }

    impl RawRational {
        pub(super) fn into_rational(self) -> Result<Rational> {
            match self {
                RawRational::Text(s) => parse_rational(&s),
                RawRational::Int(n) => Ok(int(n)),
            }
        }
    }
}

/// Serde adapter for `Vec<Rational>`.
pub mod serde_rational_vec {
    use super::serde_rational::RawRational;
    use super::*;
    use serde::ser::SerializeSeq;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&format_rational(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Rational>, D::Error> {
        let raw = Vec::<RawRational>::deserialize(d)?;
        raw.into_iter()
            .map(|r| r.into_rational().map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Row-major rectangular matrix of rationals, at least 1×1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl DenseMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(format!("empty matrix {rows}x{cols}")));
        }
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Rational,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone()).expect("nonempty")
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if !a.is_zero() {
                    acc += a * other.get(k, j);
                }
            }
            acc
        })
    }

    /// The submatrix on the given (sorted, in-range) row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if rows.iter().any(|&r| r >= self.rows) || cols.iter().any(|&c| c >= self.cols) {
            return Err(Error::Dimension("submatrix index out of range".into()));
        }
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    /// Leading `n`×`n` section.
    pub fn leading(&self, n: usize) -> Result<Self> {
        let idx: Vec<usize> = (0..n).collect();
        self.submatrix(&idx, &idx)
    }

    /// `diag(1, M)`: a unit corner block followed by `M`.
    pub fn bordered_by_one(&self) -> Self {
        Self::from_fn(self.rows + 1, self.cols + 1, |i, j| match (i, j) {
            (0, 0) => Rational::one(),
            (0, _) | (_, 0) => Rational::zero(),
            _ => self.get(i - 1, j - 1).clone(),
        })
        .expect("nonempty")
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "[{}]", line.join(", "))?;
        }
        Ok(())
    }
}

fn require_square(m: &DenseMatrix) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::Dimension(format!(
            "determinant of non-square {}x{} matrix",
            m.rows, m.cols
        )))
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled by the LCM of its denominators so elimination
/// runs over the integers; the product of those scales is divided back out
/// at the end.
pub fn det_bareiss(m: &DenseMatrix) -> Result<Rational> {
    require_square(m)?;
    let n = m.rows;

    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let row = m.row(i);
        let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        a.push(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
        scale *= lcm;
    }

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            for j in (k + 1)..n {
                let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                // Sylvester's identity: the division is exact.
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot_row[k].clone();
    }

    let mut det = a[n - 1][n - 1].clone();
    if negate {
        det = -det;
    }
    Ok(Rational::new(det, scale))
}

/// Exact determinant by Laplace expansion along the first row.
pub fn det_cofactor(m: &DenseMatrix) -> Result<Rational> {
    require_square(m)?;
    if m.rows > COFACTOR_MAX_DIM {
        return Err(Error::SizeLimit {
            what: "cofactor dimension",
            got: m.rows,
            limit: COFACTOR_MAX_DIM,
        });
    }
    let cols: Vec<usize> = (0..m.cols).collect();
    Ok(laplace(m, 0, &cols))
}

fn laplace(m: &DenseMatrix, row: usize, cols: &[usize]) -> Rational {
    if cols.len() == 1 {
        return m.get(row, cols[0]).clone();
    }
    let mut acc = Rational::zero();
    for (pos, &c) in cols.iter().enumerate() {
        let a = m.get(row, c);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = a * laplace(m, row + 1, &rest);
        if pos % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// A minor located by its row and column index sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    #[serde(with = "serde_rational")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorVerdict {
    /// Every minor up to the requested order is nonnegative.
    Nonnegative,
    /// The first negative minor in enumeration order.
    Negative(MinorWitness),
    /// The enumeration would exceed the budget; nothing was concluded.
    Inconclusive { required: u64, budget: u64 },
}

impl MinorVerdict {
    pub fn is_nonnegative(&self) -> bool {
        matches!(self, MinorVerdict::Nonnegative)
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Number of minors of order `1..=max_order` of a `rows`×`cols` matrix.
pub fn minor_count(rows: usize, cols: usize, max_order: usize) -> u64 {
    (1..=max_order).fold(0u64, |acc, k| {
        acc.saturating_add(binomial(rows, k).saturating_mul(binomial(cols, k)))
    })
}

/// Advance `idx` to the next `k`-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in (i + 1)..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Checks every minor of order `1..=max_order`.
///
/// Minors are visited by increasing order, then lexicographic row subset,
/// then lexicographic column subset, so the witness is deterministic.
pub fn all_minors_nonneg(m: &DenseMatrix, max_order: usize, budget: u64) -> Result<MinorVerdict> {
    if max_order > m.rows.min(m.cols) {
        return Err(Error::Dimension(format!(
            "max order {max_order} exceeds min dimension of {}x{}",
            m.rows, m.cols
        )));
    }
    let required = minor_count(m.rows, m.cols, max_order);
    if required > budget {
        return Ok(MinorVerdict::Inconclusive { required, budget });
    }
    for k in 1..=max_order {
        let mut rows: Vec<usize> = (0..k).collect();
        loop {
            let mut cols: Vec<usize> = (0..k).collect();
            loop {
                let value = det_bareiss(&m.submatrix(&rows, &cols)?)?;
                if value.is_negative() {
                    return Ok(MinorVerdict::Negative(MinorWitness {
                        rows: rows.clone(),
                        cols: cols.clone(),
                        value,
                    }));
                }
                if !next_combination(&mut cols, m.cols) {
                    break;
                }
            }
            if !next_combination(&mut rows, m.rows) {
                break;
            }
        }
    }
    Ok(MinorVerdict::Nonnegative)
}
