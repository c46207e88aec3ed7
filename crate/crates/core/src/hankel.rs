//! Hankel matrices, the two-family determinant test for Stieltjes moment
//! sequences, and the `H = R T Rᵗ` factorization.
//!
//! Every verdict here is bounded: a report states the depth it checked and
//! says nothing about larger sections.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    det_bareiss, format_rational, serde_rational, serde_rational_vec, DenseMatrix, Rational,
};
use crate::recursive::{build_recursive, catalan_like};
use crate::seqspec::SequenceSpec;

/// Default depth for exact checks.
pub const DEFAULT_DEPTH: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Recurrence,
    Series,
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentSequence {
    #[serde(with = "serde_rational_vec")]
    terms: Vec<Rational>,
    provenance: Provenance,
}

impl MomentSequence {
    pub fn new(terms: Vec<Rational>, provenance: Provenance) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InsufficientTerms { needed: 1, got: 0 });
        }
        Ok(Self { terms, provenance })
    }

    pub fn explicit(terms: Vec<Rational>) -> Result<Self> {
        Self::new(terms, Provenance::Explicit)
    }

    /// `m_0..=m_last` from the recurrence.
    pub fn from_recurrence(sigma: &SequenceSpec, tau: &SequenceSpec, last: usize) -> Result<Self> {
        Self::new(catalan_like(sigma, tau, last)?, Provenance::Recurrence)
    }

    pub fn terms(&self) -> &[Rational] {
        &self.terms
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }
}

/// `(n+1)`×`(n+1)` matrix with entry `(i, j) = m_{i+j+shift}`.
pub fn build_hankel(seq: &MomentSequence, n: usize, shift: usize) -> Result<DenseMatrix> {
    let needed = 2 * n + 1 + shift;
    if seq.terms.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            got: seq.terms.len(),
        });
    }
    DenseMatrix::from_fn(n + 1, n + 1, |i, j| seq.terms[i + j + shift].clone())
}

/// The first negative determinant found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HankelWitness {
    /// 0 for `det[m_{i+j}]`, 1 for `det[m_{i+j+1}]`.
    pub family: usize,
    pub k: usize,
    #[serde(with = "serde_rational")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE", tag = "status", content = "witness")]
pub enum StieltjesVerdict {
    Pass,
    Fail(HankelWitness),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StieltjesReport {
    pub depth: usize,
    #[serde(with = "serde_rational_vec")]
    pub dets0: Vec<Rational>,
    #[serde(with = "serde_rational_vec")]
    pub dets1: Vec<Rational>,
    pub verdict: StieltjesVerdict,
}

impl StieltjesReport {
    pub fn passed(&self) -> bool {
        self.verdict == StieltjesVerdict::Pass
    }

    /// Header `k,det0,det1`, then one row per depth.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,det0,det1\n");
        for k in 0..=self.depth {
            out.push_str(&format!(
                "{k},{},{}\n",
                format_rational(&self.dets0[k]),
                format_rational(&self.dets1[k])
            ));
        }
        out
    }
}

/// Both determinant families for `k = 0..=depth`; PASS iff none is negative.
/// Witnesses are ordered by `k`, then family.
pub fn stieltjes_check(seq: &MomentSequence, depth: usize) -> Result<StieltjesReport> {
    stieltjes_check_with(seq, depth, false)
}

/// As [`stieltjes_check`], optionally evaluating determinants on the rayon
/// pool. The report is identical either way.
pub fn stieltjes_check_with(
    seq: &MomentSequence,
    depth: usize,
    parallel: bool,
) -> Result<StieltjesReport> {
    let needed = 2 * depth + 2;
    if seq.terms.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            got: seq.terms.len(),
        });
    }
    let jobs: Vec<(usize, usize)> = (0..=depth).flat_map(|k| [(k, 0), (k, 1)]).collect();
    let eval = |&(k, shift): &(usize, usize)| det_bareiss(&build_hankel(seq, k, shift)?);
    let dets: Vec<Rational> = if parallel {
        jobs.par_iter().map(eval).collect::<Result<_>>()?
    } else {
        jobs.iter().map(eval).collect::<Result<_>>()?
    };
    let (mut dets0, mut dets1) = (Vec::with_capacity(depth + 1), Vec::with_capacity(depth + 1));
    for (i, d) in dets.into_iter().enumerate() {
        if i % 2 == 0 {
            dets0.push(d);
        } else {
            dets1.push(d);
        }
    }
    let witness = (0..=depth).find_map(|k| {
        [(0, &dets0[k]), (1, &dets1[k])]
            .into_iter()
            .find(|(_, v)| v.is_negative())
            .map(|(family, v)| HankelWitness {
                family,
                k,
                value: v.clone(),
            })
    });
    let verdict = witness.map_or(StieltjesVerdict::Pass, StieltjesVerdict::Fail);
    Ok(StieltjesReport {
        depth,
        dets0,
        dets1,
        verdict,
    })
}

/// `T_0 = 1`, `T_k = t_1 ⋯ t_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalsDiagonal {
    pub values: Vec<Rational>,
}

impl TotalsDiagonal {
    pub fn new(tau: &SequenceSpec, n: usize) -> Result<Self> {
        let mut values = Vec::with_capacity(n + 1);
        values.push(Rational::one());
        for k in 1..=n {
            let next = &values[k - 1] * tau.eval(k)?;
            values.push(next);
        }
        Ok(Self { values })
    }

    pub fn matrix(&self) -> DenseMatrix {
        let n = self.values.len();
        DenseMatrix::from_fn(n, n, |i, j| {
            if i == j {
                self.values[i].clone()
            } else {
                Rational::zero()
            }
        })
        .expect("nonempty")
    }
}

/// Checks the Hankel section of `seq` against `R T Rᵗ` built from `(σ, τ)`.
pub fn h_eq_rtrt(
    seq: &MomentSequence,
    sigma: &SequenceSpec,
    tau: &SequenceSpec,
    depth: usize,
) -> Result<bool> {
    let h = build_hankel(seq, depth, 0)?;
    let r = build_recursive(sigma, tau, depth)?.section(depth)?;
    let t = TotalsDiagonal::new(tau, depth)?.matrix();
    Ok(r.mul(&t)?.mul(&r.transpose())? == h)
}

/// `H = R T Rᵗ` on `(depth+1)`-sections, `H` from the Catalan-like numbers of `(σ, τ)`.
pub fn verify_h_eq_rtrt(sigma: &SequenceSpec, tau: &SequenceSpec, depth: usize) -> Result<bool> {
    let seq = MomentSequence::from_recurrence(sigma, tau, 2 * depth)?;
    h_eq_rtrt(&seq, sigma, tau, depth)
}

/// `∏_{k=0}^{n} T_k`: the determinant of the `(n+1)`-section of `H`,
/// because `R` is unit lower triangular.
pub fn hankel_det_product(tau: &SequenceSpec, n: usize) -> Result<Rational> {
    Ok(TotalsDiagonal::new(tau, n)?
        .values
        .iter()
        .fold(Rational::one(), |acc, t| acc * t))
}
