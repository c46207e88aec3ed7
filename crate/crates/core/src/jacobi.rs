//! The tridiagonal coefficient matrix `J^{σ,τ}` (diagonal `s_k`, subdiagonal
//! `t_k`, superdiagonal 1) and its total-positivity certificates.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{
    det_bareiss, int, serde_rational, serde_rational_vec, DenseMatrix, MinorWitness, Rational,
};
use crate::seqspec::{eval_poly, SequenceSpec, TailRule};

/// Explicit evaluation range for the sufficient condition, beyond the probe depth.
pub const LEMMA2_GUARD: usize = 64;

/// Cap on the extra explicit evaluations needed to close a polynomial tail.
const LEMMA2_ROOT_SCAN_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiMatrix {
    sigma: SequenceSpec,
    tau: SequenceSpec,
}

impl JacobiMatrix {
    pub fn new(sigma: SequenceSpec, tau: SequenceSpec) -> Self {
        Self { sigma, tau }
    }

    pub fn sigma(&self) -> &SequenceSpec {
        &self.sigma
    }

    pub fn tau(&self) -> &SequenceSpec {
        &self.tau
    }

    pub fn entry(&self, i: usize, j: usize) -> Result<Rational> {
        Ok(if i == j {
            self.sigma.eval(i)?
        } else if j == i + 1 {
            Rational::one()
        } else if i == j + 1 {
            self.tau.eval(i)?
        } else {
            Rational::zero()
        })
    }

    /// The leading `rows`×`cols` block.
    pub fn section(&self, rows: usize, cols: usize) -> Result<DenseMatrix> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(self.entry(i, j)?);
            }
        }
        DenseMatrix::new(rows, cols, entries)
    }

    /// The `(depth+1)`×`(depth+1)` leading section.
    pub fn square_section(&self, depth: usize) -> Result<DenseMatrix> {
        self.section(depth + 1, depth + 1)
    }
}

/// Parameters of `J(p, q; s, t)`: diagonal `(p, s, s, …)`, subdiagonal `(q, t, t, …)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct JacobiParams {
    #[serde(with = "serde_rational")]
    pub p: Rational,
    #[serde(with = "serde_rational")]
    pub q: Rational,
    #[serde(with = "serde_rational")]
    pub s: Rational,
    #[serde(with = "serde_rational")]
    pub t: Rational,
}

#[derive(Deserialize)]
struct RawParams {
    #[serde(with = "serde_rational")]
    p: Rational,
    #[serde(with = "serde_rational")]
    q: Rational,
    #[serde(with = "serde_rational")]
    s: Rational,
    #[serde(with = "serde_rational")]
    t: Rational,
}

impl TryFrom<RawParams> for JacobiParams {
    type Error = Error;
    fn try_from(r: RawParams) -> Result<Self> {
        JacobiParams::new(r.p, r.q, r.s, r.t)
    }
}

impl JacobiParams {
    pub fn new(p: Rational, q: Rational, s: Rational, t: Rational) -> Result<Self> {
        for (name, v) in [("p", &p), ("q", &q), ("s", &s), ("t", &t)] {
            if v.is_negative() {
                return Err(Error::Domain(format!("parameter {name} = {v} is negative")));
            }
        }
        Ok(Self { p, q, s, t })
    }

    pub fn from_ints(p: i64, q: i64, s: i64, t: i64) -> Result<Self> {
        Self::new(int(p), int(q), int(s), int(t))
    }

    pub fn sigma(&self) -> SequenceSpec {
        SequenceSpec::new(
            vec![self.p.clone()],
            TailRule::Constant {
                value: self.s.clone(),
            },
            0,
        )
        .expect("valid")
    }

    pub fn tau(&self) -> SequenceSpec {
        SequenceSpec::new(
            vec![self.q.clone()],
            TailRule::Constant {
                value: self.t.clone(),
            },
            1,
        )
        .expect("valid")
    }

    pub fn jacobi(&self) -> JacobiMatrix {
        JacobiMatrix::new(self.sigma(), self.tau())
    }
}

/// Leading principal minors `D_0, …, D_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorChain {
    #[serde(with = "serde_rational_vec")]
    pub values: Vec<Rational>,
}

impl MinorChain {
    /// `1 ≤ D_0 ≤ D_1 ≤ … ≤ D_n`.
    pub fn is_nondecreasing_from_one(&self) -> bool {
        self.values.first().is_some_and(|d| *d >= Rational::one())
            && self.values.windows(2).all(|w| w[0] <= w[1])
    }
}

/// `D_k = s_k D_{k-1} - t_k D_{k-2}`, with `D_{-1} = 1` and `D_{-2} = 0`.
pub fn leading_minors(j: &JacobiMatrix, n: usize) -> Result<MinorChain> {
    let mut values = Vec::with_capacity(n + 1);
    let (mut two_back, mut one_back) = (Rational::zero(), Rational::one());
    for k in 0..=n {
        let mut d = j.sigma.eval(k)? * &one_back;
        if k >= 1 {
            d -= j.tau.eval(k)? * &two_back;
        }
        values.push(d.clone());
        two_back = std::mem::replace(&mut one_back, d);
    }
    Ok(MinorChain { values })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    True,
    False,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::True => "TRUE",
            Verdict::False => "FALSE",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Machine-readable outcome of one total-positivity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TpReport {
    pub criterion: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<MinorWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fallback: Option<Box<TpReport>>,
}

impl TpReport {
    fn new(criterion: &str, verdict: Verdict, depth: Option<usize>) -> Self {
        Self {
            criterion: criterion.into(),
            verdict,
            depth,
            witness: None,
            note: None,
            fallback: None,
        }
    }

    fn with_witness(mut self, w: MinorWitness) -> Self {
        self.witness = Some(w);
        self
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Outcome of the `s_0 ≥ 1`, `s_k ≥ t_k + 1` test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lemma2Verdict {
    /// Holds for every `k`; the tail was closed symbolically.
    Holds,
    /// Fails at index `k` (`k = 0` means `s_0 < 1`).
    Fails { index: usize },
    /// Verified explicitly through `depth`, tail not closed.
    HoldsUpTo { depth: usize },
}

impl Lemma2Verdict {
    pub fn report(&self) -> TpReport {
        match self {
            Lemma2Verdict::Holds => TpReport::new("sufficient-s-ge-t-plus-1", Verdict::True, None)
                .with_note("condition holds for all k (tail closed symbolically)"),
            Lemma2Verdict::Fails { index } => {
                TpReport::new("sufficient-s-ge-t-plus-1", Verdict::False, Some(*index)).with_note(
                    format!("condition fails at k = {index}; the matrix may still be TP"),
                )
            }
            Lemma2Verdict::HoldsUpTo { depth } => TpReport::new(
                "sufficient-s-ge-t-plus-1",
                Verdict::Inconclusive,
                Some(*depth),
            )
            .with_note(format!("condition holds up to depth {depth}")),
        }
    }
}

/// Coefficients of `p(x + shift)`, lowest degree first.
fn taylor_shift(coeffs: &[Rational], shift: &Rational) -> Vec<Rational> {
    let mut out = coeffs.to_vec();
    let n = out.len();
    // repeated synthetic division
    for i in 0..n {
        for j in (i..n.saturating_sub(1)).rev() {
            let carry = &out[j + 1] * shift;
            out[j] += carry;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect()
}

/// Ceiling of a nonnegative rational, as `usize` when it fits.
fn ceil_usize(r: &Rational) -> Option<usize> {
    use num_traits::ToPrimitive;
    r.ceil().to_integer().to_usize()
}

/// Decides `s_0 ≥ 1` and `s_k ≥ t_k + 1` for `k ≥ 1`.
///
/// Indices up to `max(probe_depth, LEMMA2_GUARD)` and the prefix region are
/// checked explicitly. Past both prefixes the tails are polynomials, so
/// `g(k) = s(k) - t(k) - 1` is closed either by nonnegative coefficients
/// after shifting to the tail start, or by a Cauchy root bound plus
/// explicit evaluation below it.
pub fn tp_sufficient_lemma2(
    sigma: &SequenceSpec,
    tau: &SequenceSpec,
    probe_depth: usize,
) -> Result<Lemma2Verdict> {
    let one = Rational::one();
    if sigma.eval(0)? < one {
        return Ok(Lemma2Verdict::Fails { index: 0 });
    }
    let holds = |k: usize| -> Result<bool> { Ok(sigma.eval(k)? >= tau.eval(k)? + &one) };

    let tail_from = sigma.tail_start().max(tau.tail_start()).max(1);
    let explicit_end = probe_depth.max(LEMMA2_GUARD).max(tail_from);
    for k in 1..=explicit_end {
        if !holds(k)? {
            return Ok(Lemma2Verdict::Fails { index: k });
        }
    }

    let g = poly_sub(
        &poly_sub(&sigma.tail().coefficients(), &tau.tail().coefficients()),
        std::slice::from_ref(&one),
    );
    let shifted = taylor_shift(&g, &int(tail_from as i64));
    if shifted.iter().all(|c| !c.is_negative()) {
        return Ok(Lemma2Verdict::Holds);
    }

    let Some(deg) = g.iter().rposition(|c| !c.is_zero()) else {
        return Ok(Lemma2Verdict::Holds);
    };
    // deg >= 1 here: a nonnegative constant was accepted above and a
    // negative one fails at tail_from, which the explicit scan covered.
    let lead = &g[deg];
    let bound = one.clone()
        + g[..deg]
            .iter()
            .map(|c| (c / lead).abs())
            .max()
            .unwrap_or_else(Rational::zero);
    let Some(bound) = ceil_usize(&bound) else {
        return Ok(Lemma2Verdict::HoldsUpTo {
            depth: explicit_end,
        });
    };
    if bound.saturating_sub(explicit_end) > LEMMA2_ROOT_SCAN_CAP {
        if lead.is_negative() {
            // g < 0 past every real root; not necessarily the first failure
            debug_assert!(eval_poly(&g, &int(bound as i64)).is_negative());
            return Ok(Lemma2Verdict::Fails {
                index: bound.max(explicit_end + 1),
            });
        }
        return Ok(Lemma2Verdict::HoldsUpTo {
            depth: explicit_end,
        });
    }
    // every real root lies below `bound`, so g(bound) has the sign of `lead`
    for k in explicit_end + 1..=bound {
        if !holds(k)? {
            return Ok(Lemma2Verdict::Fails { index: k });
        }
    }
    Ok(Lemma2Verdict::Holds)
}

/// Exact test of `s² ≥ 4t` and `p(s + √(s² − 4t))/2 ≥ q`, square root
/// eliminated: with `Δ = s² − 4t ≥ 0`, true iff `2q ≤ ps` or `p²Δ ≥ (2q − ps)²`.
pub fn tp_criterion_pqst(params: &JacobiParams) -> bool {
    let JacobiParams { p, q, s, t } = params;
    let delta = s * s - int(4) * t;
    if delta.is_negative() {
        return false;
    }
    let gap = int(2) * q - p * s;
    !gap.is_positive() || p * p * &delta >= &gap * &gap
}

pub fn pqst_report(params: &JacobiParams) -> TpReport {
    let verdict = if tp_criterion_pqst(params) {
        Verdict::True
    } else {
        Verdict::False
    };
    TpReport::new("pqst-exact", verdict, None)
        .with_note("exact criterion for the infinite matrix J(p,q;s,t)")
}

fn first_negative_entry(m: &DenseMatrix) -> Option<MinorWitness> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if m.get(i, j).is_negative() {
                return Some(MinorWitness {
                    rows: vec![i],
                    cols: vec![j],
                    value: m.get(i, j).clone(),
                });
            }
        }
    }
    None
}

/// Number of contiguous principal windows of sizes `1..=order_bound` in an `n`×`n` matrix.
pub fn window_count(n: usize, order_bound: usize) -> u64 {
    (1..=order_bound.min(n))
        .map(|size| (n + 1 - size) as u64)
        .sum()
}

/// First negative contiguous principal minor of size `≤ order_bound`,
/// by increasing size then start index.
fn first_negative_window(m: &DenseMatrix, order_bound: usize) -> Result<Option<MinorWitness>> {
    let n = m.rows();
    for size in 1..=order_bound.min(n) {
        for start in 0..=(n - size) {
            let idx: Vec<usize> = (start..start + size).collect();
            let value = det_bareiss(&m.submatrix(&idx, &idx)?)?;
            if value.is_negative() {
                return Ok(Some(MinorWitness {
                    rows: idx.clone(),
                    cols: idx,
                    value,
                }));
            }
        }
    }
    Ok(None)
}

/// Brute-force certificate on the `(depth+1)`-section: entries nonnegative
/// and every contiguous principal minor of order `≤ order_bound` nonnegative.
pub fn tp_check_sections(
    j: &JacobiMatrix,
    depth: usize,
    order_bound: usize,
    budget: u64,
) -> Result<TpReport> {
    let m = j.square_section(depth)?;
    let criterion = "contiguous-principal-minors";
    if let Some(w) = first_negative_entry(&m) {
        return Ok(TpReport::new(criterion, Verdict::False, Some(depth))
            .with_witness(w)
            .with_note("negative entry"));
    }
    let required = window_count(m.rows(), order_bound);
    if required > budget {
        return Ok(TpReport::new(criterion, Verdict::Inconclusive, Some(depth))
            .with_note(format!("{required} minors exceed budget {budget}")));
    }
    Ok(match first_negative_window(&m, order_bound)? {
        Some(w) => TpReport::new(criterion, Verdict::False, Some(depth)).with_witness(w),
        None => TpReport::new(criterion, Verdict::True, Some(depth)).with_note(format!(
            "section {}x{}, orders <= {}",
            depth + 1,
            depth + 1,
            order_bound.min(depth + 1)
        )),
    })
}

/// Irreducible shortcut: with every `t_k > 0` the section is TP iff every
/// leading minor is positive. Zero minors defer to [`tp_check_sections`];
/// reducible sections are refused.
pub fn tp_check_structured(j: &JacobiMatrix, depth: usize, budget: u64) -> Result<TpReport> {
    let criterion = "leading-minors-irreducible";
    let m = j.square_section(depth)?;
    if let Some(w) = first_negative_entry(&m) {
        return Ok(TpReport::new(criterion, Verdict::False, Some(depth))
            .with_witness(w)
            .with_note("negative entry"));
    }
    if let Some(k) = (1..=depth).find(|&k| m.get(k, k - 1).is_zero()) {
        let mut report = TpReport::new(criterion, Verdict::Inconclusive, Some(depth))
            .with_note(format!("t_{k} = 0: reducible, shortcut does not apply"));
        report.fallback = Some(Box::new(tp_check_sections(j, depth, depth + 1, budget)?));
        return Ok(report);
    }
    let chain = leading_minors(j, depth)?;
    if let Some(k) = chain.values.iter().position(|d| d.is_negative()) {
        return Ok(
            TpReport::new(criterion, Verdict::False, Some(depth)).with_witness(MinorWitness {
                rows: (0..=k).collect(),
                cols: (0..=k).collect(),
                value: chain.values[k].clone(),
            }),
        );
    }
    if let Some(k) = chain.values.iter().position(|d| d.is_zero()) {
        let mut report = TpReport::new(criterion, Verdict::Inconclusive, Some(depth))
            .with_note(format!("D_{k} = 0: falling back to contiguous minors"));
        report.fallback = Some(Box::new(tp_check_sections(j, depth, depth + 1, budget)?));
        return Ok(report);
    }
    Ok(TpReport::new(criterion, Verdict::True, Some(depth)))
}

/// Looks for a negative contiguous principal minor in sections up to
/// `max_depth`. `None` means "not refuted at this depth", nothing more.
pub fn refute_pqst(params: &JacobiParams, max_depth: usize) -> Result<Option<MinorWitness>> {
    let m = params.jacobi().square_section(max_depth)?;
    // every window of a smaller section is a window of this one
    first_negative_window(&m, max_depth + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{all_minors_nonneg, frac, DEFAULT_MINOR_BUDGET};
    use crate::seqspec::{catalog, catalog_lookup};
    use proptest::prelude::*;

    fn named(n: &str) -> JacobiMatrix {
        let e = catalog_lookup(n).unwrap();
        JacobiMatrix::new(e.sigma, e.tau)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn factorial_chain_is_factorials() {
        let chain = leading_minors(&named("factorial"), 5).unwrap();
        assert_eq!(chain.values, ints(&[1, 2, 6, 24, 120, 720]));
    }

    #[test]
    fn catalan_chain_is_ones() {
        assert_eq!(
            leading_minors(&named("catalan"), 6).unwrap().values,
            ints(&[1; 7])
        );
    }

    #[test]
    fn zero_diagonal_gives_negative_d1() {
        let j = JacobiMatrix::new(
            SequenceSpec::sigma_ints(&[], 0),
            SequenceSpec::tau_ints(&[], 1),
        );
        assert_eq!(leading_minors(&j, 1).unwrap().values[1], int(-1));
        let rep = tp_check_structured(&j, 3, DEFAULT_MINOR_BUDGET).unwrap();
        assert_eq!(rep.verdict, Verdict::False);
    }

    #[test]
    fn chain_matches_bareiss_for_catalog() {
        for e in catalog() {
            let j = JacobiMatrix::new(e.sigma, e.tau);
            let chain = leading_minors(&j, 10).unwrap();
            for n in 0..=10 {
                assert_eq!(
                    chain.values[n],
                    det_bareiss(&j.square_section(n).unwrap()).unwrap(),
                    "{} n={n}",
                    e.name
                );
            }
        }
    }

    #[test]
    fn lemma2_catalog_cases() {
        let e = catalog_lookup("schroder_little").unwrap();
        assert_eq!(
            tp_sufficient_lemma2(&e.sigma, &e.tau, 10).unwrap(),
            Lemma2Verdict::Holds
        );
        let e = catalog_lookup("delannoy").unwrap();
        assert_eq!(
            tp_sufficient_lemma2(&e.sigma, &e.tau, 10).unwrap(),
            Lemma2Verdict::Fails { index: 1 }
        );
        let e = catalog_lookup("bell").unwrap();
        assert_eq!(
            tp_sufficient_lemma2(&e.sigma, &e.tau, 10).unwrap(),
            Lemma2Verdict::Holds
        );
        // 2k+1 >= k^2 + 1 fails at k = 3
        let e = catalog_lookup("factorial").unwrap();
        assert_eq!(
            tp_sufficient_lemma2(&e.sigma, &e.tau, 10).unwrap(),
            Lemma2Verdict::Fails { index: 3 }
        );
        // s_1 = 2 < t_1 + 1 = 3, yet the chain is 2, 2, 2, … so J is still TP
        let e = catalog_lookup("central_binomial").unwrap();
        assert_eq!(
            tp_sufficient_lemma2(&e.sigma, &e.tau, 10).unwrap(),
            Lemma2Verdict::Fails { index: 1 }
        );
        assert_eq!(
            tp_check_structured(&JacobiMatrix::new(e.sigma, e.tau), 10, DEFAULT_MINOR_BUDGET)
                .unwrap()
                .verdict,
            Verdict::True
        );
        for name in ["catalan", "hexagonal", "schroder_large"] {
            let e = catalog_lookup(name).unwrap();
            assert_eq!(
                tp_sufficient_lemma2(&e.sigma, &e.tau, 10).unwrap(),
                Lemma2Verdict::Holds,
                "{name}"
            );
        }
    }

    #[test]
    fn lemma2_tail_beyond_guard() {
        // s_k = k^2 / 10000 + 2, t_k = k: g(k) = k^2/10000 - k + 1, negative
        // for k in roughly [2, 9998] — caught inside the guard range already.
        let sigma = SequenceSpec::polynomial(vec![int(2), int(0), frac(1, 10000)], 0).unwrap();
        let tau = SequenceSpec::polynomial(vec![int(0), int(1)], 1).unwrap();
        assert_eq!(
            tp_sufficient_lemma2(&sigma, &tau, 1).unwrap(),
            Lemma2Verdict::Fails { index: 2 }
        );

        // s_k = 200 + 2, t_k = k: fails only at k = 202
        let sigma = SequenceSpec::sigma_ints(&[], 202);
        assert_eq!(
            tp_sufficient_lemma2(&sigma, &tau, 1).unwrap(),
            Lemma2Verdict::Fails { index: 202 }
        );

        // s_k = k^2 - 100k + 2600, t_k = 1: g = (k-50)^2 + 98 > 0 but shifted coeffs mixed
        let sigma = SequenceSpec::polynomial(vec![int(2600), int(-100), int(1)], 0).unwrap();
        let tau = SequenceSpec::tau_ints(&[], 1);
        assert_eq!(
            tp_sufficient_lemma2(&sigma, &tau, 1).unwrap(),
            Lemma2Verdict::Holds
        );

        // g(k) = k^2 - 170k + 7200 = (k-80)(k-90): fails first at k = 81, past the guard
        let sigma = SequenceSpec::polynomial(vec![int(7202), int(-170), int(1)], 0).unwrap();
        assert_eq!(
            tp_sufficient_lemma2(&sigma, &tau, 1).unwrap(),
            Lemma2Verdict::Fails { index: 81 }
        );

        // g(k) = -k^2 + 100k - 1: fails first at k = 100, found by the root scan
        let sigma = SequenceSpec::polynomial(vec![int(1), int(100), int(-1)], 0).unwrap();
        assert_eq!(
            tp_sufficient_lemma2(&sigma, &tau, 1).unwrap(),
            Lemma2Verdict::Fails { index: 100 }
        );

        // g(k) = k^2 - 150k + 5624 = (k-74)(k-76): only k = 75 fails
        let sigma = SequenceSpec::polynomial(vec![int(5626), int(-150), int(1)], 0).unwrap();
        assert_eq!(
            tp_sufficient_lemma2(&sigma, &tau, 1).unwrap(),
            Lemma2Verdict::Fails { index: 75 }
        );
    }

    #[test]
    fn lemma2_huge_root_bound_is_bounded_verdict() {
        // g(k) = (k - 5e6)^2 >= 0, Cauchy root bound ~2.5e13
        let sigma =
            SequenceSpec::polynomial(vec![int(25_000_000_000_002), int(-10_000_000), int(1)], 0)
                .unwrap();
        let tau = SequenceSpec::tau_ints(&[], 1);
        assert_eq!(
            tp_sufficient_lemma2(&sigma, &tau, 3).unwrap(),
            Lemma2Verdict::HoldsUpTo {
                depth: LEMMA2_GUARD
            }
        );
    }

    #[test]
    fn lemma2_s0_below_one() {
        let sigma = SequenceSpec::sigma_ints(&[0], 5);
        let tau = SequenceSpec::tau_ints(&[], 1);
        assert_eq!(
            tp_sufficient_lemma2(&sigma, &tau, 4).unwrap(),
            Lemma2Verdict::Fails { index: 0 }
        );
    }

    #[test]
    fn taylor_shift_matches_evaluation() {
        let c = ints(&[3, -2, 5, 1]);
        let shifted = taylor_shift(&c, &int(4));
        for x in -3..4 {
            assert_eq!(eval_poly(&shifted, &int(x)), eval_poly(&c, &int(x + 4)));
        }
    }

    #[test]
    fn criterion_examples() {
        assert!(tp_criterion_pqst(
            &JacobiParams::from_ints(3, 4, 3, 2).unwrap()
        ));
        assert!(tp_criterion_pqst(
            &JacobiParams::from_ints(2, 2, 2, 1).unwrap()
        ));
        assert!(!tp_criterion_pqst(
            &JacobiParams::from_ints(1, 3, 2, 1).unwrap()
        ));
        // Δ < 0
        assert!(!tp_criterion_pqst(
            &JacobiParams::from_ints(5, 0, 1, 1).unwrap()
        ));
        assert!(matches!(
            JacobiParams::from_ints(1, -1, 2, 1),
            Err(Error::Domain(_))
        ));
        for e in catalog() {
            if let Some(params) = e.pqst {
                assert!(tp_criterion_pqst(&params), "{}", e.name);
            }
        }
    }

    #[test]
    fn sections_examples() {
        let rep = tp_check_sections(&named("catalan"), 6, 7, DEFAULT_MINOR_BUDGET).unwrap();
        assert_eq!(rep.verdict, Verdict::True);

        let j = JacobiParams::from_ints(1, 3, 2, 1).unwrap().jacobi();
        let rep = tp_check_sections(&j, 4, 5, DEFAULT_MINOR_BUDGET).unwrap();
        assert_eq!(rep.verdict, Verdict::False);
        assert_eq!(
            rep.witness.unwrap(),
            MinorWitness {
                rows: vec![0, 1],
                cols: vec![0, 1],
                value: int(-1)
            }
        );

        let single = JacobiMatrix::new(
            SequenceSpec::sigma_ints(&[], 0),
            SequenceSpec::tau_ints(&[], 0),
        );
        assert_eq!(
            tp_check_sections(&single, 0, 1, DEFAULT_MINOR_BUDGET)
                .unwrap()
                .verdict,
            Verdict::True
        );

        let rep = tp_check_sections(&named("catalan"), 6, 7, 3).unwrap();
        assert_eq!(rep.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn negative_subdiagonal_is_caught() {
        let j = JacobiMatrix::new(
            SequenceSpec::sigma_ints(&[], 3),
            SequenceSpec::tau_ints(&[-1], 1),
        );
        let rep = tp_check_sections(&j, 3, 4, DEFAULT_MINOR_BUDGET).unwrap();
        assert_eq!(rep.verdict, Verdict::False);
        assert_eq!(rep.witness.unwrap().rows, vec![1]);
    }

    #[test]
    fn structured_check_paths() {
        assert_eq!(
            tp_check_structured(&named("factorial"), 8, DEFAULT_MINOR_BUDGET)
                .unwrap()
                .verdict,
            Verdict::True
        );

        // reducible: t_2 = 0
        let j = JacobiMatrix::new(
            SequenceSpec::sigma_ints(&[], 2),
            SequenceSpec::tau_ints(&[1, 0], 1),
        );
        let rep = tp_check_structured(&j, 4, DEFAULT_MINOR_BUDGET).unwrap();
        assert_eq!(rep.verdict, Verdict::Inconclusive);
        assert_eq!(rep.fallback.unwrap().verdict, Verdict::True);

        // D_1 = 1*1 - 1 = 0, then D_2 = 1*0 - 1*1 < 0: negative wins
        let j = JacobiMatrix::new(
            SequenceSpec::sigma_ints(&[], 1),
            SequenceSpec::tau_ints(&[], 1),
        );
        assert_eq!(
            tp_check_structured(&j, 3, DEFAULT_MINOR_BUDGET)
                .unwrap()
                .verdict,
            Verdict::False
        );

        // D_1 = 0 and nothing negative up to depth 1
        let rep = tp_check_structured(&j, 1, DEFAULT_MINOR_BUDGET).unwrap();
        assert_eq!(rep.verdict, Verdict::Inconclusive);
        assert_eq!(rep.fallback.unwrap().verdict, Verdict::True);
    }

    #[test]
    fn sections_agree_with_all_minors() {
        for e in catalog() {
            let j = JacobiMatrix::new(e.sigma, e.tau);
            for depth in 0..=4 {
                let m = j.square_section(depth).unwrap();
                let brute = all_minors_nonneg(&m, depth + 1, DEFAULT_MINOR_BUDGET)
                    .unwrap()
                    .is_nonnegative();
                let windows = tp_check_sections(&j, depth, depth + 1, DEFAULT_MINOR_BUDGET)
                    .unwrap()
                    .verdict
                    == Verdict::True;
                assert_eq!(brute, windows, "{} depth {depth}", e.name);
            }
        }
        let j = JacobiParams::from_ints(1, 3, 2, 1).unwrap().jacobi();
        let m = j.square_section(3).unwrap();
        assert!(!all_minors_nonneg(&m, 4, DEFAULT_MINOR_BUDGET)
            .unwrap()
            .is_nonnegative());
    }

    #[test]
    fn report_json_shape() {
        let j = JacobiParams::from_ints(1, 3, 2, 1).unwrap().jacobi();
        let rep = tp_check_sections(&j, 2, 3, DEFAULT_MINOR_BUDGET).unwrap();
        let js = serde_json::to_value(&rep).unwrap();
        assert_eq!(js["criterion"], "contiguous-principal-minors");
        assert_eq!(js["verdict"], "FALSE");
        assert_eq!(js["depth"], 2);
        assert_eq!(js["witness"]["value"], "-1");
    }

    fn small_nonneg() -> impl Strategy<Value = Rational> {
        (0i64..=12, 1i64..=4).prop_map(|(n, d)| frac(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn lemma2_condition_gives_monotone_chain(
            s0_extra in small_nonneg(),
            pairs in proptest::collection::vec((small_nonneg(), small_nonneg()), 10),
        ) {
            let sigma_prefix: Vec<Rational> = std::iter::once(int(1) + s0_extra)
                .chain(pairs.iter().map(|(t, extra)| t + int(1) + extra))
                .collect();
            let tau_prefix: Vec<Rational> = pairs.iter().map(|(t, _)| t.clone()).collect();
            let sigma = SequenceSpec::new(sigma_prefix, TailRule::Constant { value: int(2) }, 0).unwrap();
            let tau = SequenceSpec::new(tau_prefix, TailRule::Constant { value: int(1) }, 1).unwrap();
            prop_assert_eq!(tp_sufficient_lemma2(&sigma, &tau, 10).unwrap(), Lemma2Verdict::Holds);
            let chain = leading_minors(&JacobiMatrix::new(sigma, tau), 10).unwrap();
            prop_assert!(chain.is_nondecreasing_from_one());
        }

        #[test]
        fn criterion_true_means_sections_tp(p in small_nonneg(), q in small_nonneg(), s in small_nonneg(), t in small_nonneg()) {
            let params = JacobiParams::new(p, q, s, t).unwrap();
            if tp_criterion_pqst(&params) {
                let rep = tp_check_sections(&params.jacobi(), 6, 7, DEFAULT_MINOR_BUDGET).unwrap();
                prop_assert_eq!(rep.verdict, Verdict::True);
            }
        }
    }
}
