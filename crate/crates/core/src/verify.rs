//! Cross-route checks for a catalog entry: recurrence, path enumeration,
//! generating function, matrix identities and determinant certificates.

use serde::Serialize;

use crate::error::Result;
use crate::exact::{det_bareiss, format_rational, int, Rational, DEFAULT_MINOR_BUDGET};
use crate::hankel::{
    build_hankel, hankel_det_product, stieltjes_check, verify_h_eq_rtrt, MomentSequence,
    StieltjesVerdict,
};
use crate::jacobi::{
    tp_check_sections, tp_criterion_pqst, tp_sufficient_lemma2, JacobiMatrix, Verdict,
};
use crate::recursive::{
    build_recursive, motzkin_oracle, verify_ln_factorization, verify_rj_identity,
};
use crate::seqspec::CatalogEntry;
use crate::series::{gf_expand, riordan_column_check};

/// Path enumeration gets slow past this length.
const MOTZKIN_CHECK_MAX: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Reported for context, never fails the bundle.
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub check: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckRow {
    fn gate(check: &'static str, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        Self {
            check,
            status,
            detail: detail.into(),
        }
    }
}

fn join(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

/// Runs every check that applies to `entry` at `depth` (at least 1).
pub fn verify_bundle(entry: &CatalogEntry, depth: usize) -> Result<Vec<CheckRow>> {
    let depth = depth.max(1);
    let (sigma, tau) = (&entry.sigma, &entry.tau);
    let last = 2 * depth + 1;
    let r = build_recursive(sigma, tau, last)?;
    let terms = r.column(0);
    let mut rows = Vec::new();

    let frozen: Vec<Rational> = entry
        .reference_terms
        .iter()
        .map(|&x| int(x as i64))
        .collect();
    let n = frozen.len().min(terms.len());
    rows.push(CheckRow::gate(
        "recurrence = reference terms",
        terms[..n] == frozen[..n],
        format!("n <= {}", n - 1),
    ));

    let paths_to = last.min(MOTZKIN_CHECK_MAX);
    let paths: Vec<Rational> = (0..=paths_to)
        .map(|n| motzkin_oracle(sigma, tau, n))
        .collect::<Result<_>>()?;
    rows.push(CheckRow::gate(
        "recurrence = weighted Motzkin paths",
        paths[..] == terms[..=paths_to],
        format!("n <= {paths_to}"),
    ));

    if let Some(gf) = &entry.gf {
        let series = gf_expand(gf, last)?;
        rows.push(CheckRow::gate(
            "recurrence = generating function",
            series.coeffs() == &terms[..],
            format!("n <= {last}"),
        ));
    }

    let j = JacobiMatrix::new(sigma.clone(), tau.clone());
    rows.push(CheckRow::gate(
        "Rbar = R J",
        verify_rj_identity(&r, &j, depth)?,
        format!("depth {depth}"),
    ));

    let ln_ok = (0..depth)
        .map(|k| verify_ln_factorization(sigma, tau, k))
        .collect::<Result<Vec<_>>>()?;
    rows.push(CheckRow::gate(
        "R_{n+1} = diag(1, R_n) L_n",
        ln_ok.iter().all(|&b| b),
        format!("n < {depth}"),
    ));

    rows.push(CheckRow::gate(
        "H = R T R^t",
        verify_h_eq_rtrt(sigma, tau, depth)?,
        format!("depth {depth}"),
    ));

    let seq = MomentSequence::from_recurrence(sigma, tau, last)?;
    let mut direct = Vec::with_capacity(depth + 1);
    let mut product = Vec::with_capacity(depth + 1);
    for k in 0..=depth {
        direct.push(det_bareiss(&build_hankel(&seq, k, 0)?)?);
        product.push(hankel_det_product(tau, k)?);
    }
    rows.push(CheckRow::gate(
        "det H_k = prod T_j",
        direct == product,
        format!("dets0 = {}", join(&direct)),
    ));

    let report = stieltjes_check(&seq, depth)?;
    let detail = match &report.verdict {
        StieltjesVerdict::Pass => format!("depth {depth}; dets1 = {}", join(&report.dets1)),
        StieltjesVerdict::Fail(w) => format!(
            "family {} k = {} det = {}",
            w.family,
            w.k,
            format_rational(&w.value)
        ),
    };
    rows.push(CheckRow::gate(
        "Hankel determinants >= 0",
        report.passed(),
        detail,
    ));

    let tp = tp_check_sections(&j, depth, depth + 1, DEFAULT_MINOR_BUDGET)?;
    rows.push(CheckRow::gate(
        "J section contiguous minors >= 0",
        tp.verdict == Verdict::True,
        format!("{} at depth {depth}", tp.verdict),
    ));

    if let Some(params) = &entry.pqst {
        rows.push(CheckRow::gate(
            "exact J(p,q;s,t) criterion",
            tp_criterion_pqst(params),
            format!(
                "(p,q,s,t) = ({},{},{},{})",
                params.p, params.q, params.s, params.t
            ),
        ));
        let cols = 5.min(last);
        rows.push(CheckRow::gate(
            "Riordan columns x^k h^k d",
            riordan_column_check(params, last, cols)?,
            format!("columns <= {cols}, order {last}"),
        ));
    }

    let lemma = tp_sufficient_lemma2(sigma, tau, depth)?.report();
    rows.push(CheckRow {
        check: "s_0 >= 1, s_k >= t_k + 1",
        status: CheckStatus::Info,
        detail: format!("{}: {}", lemma.verdict, lemma.note.unwrap_or_default()),
    });

    Ok(rows)
}

pub fn bundle_passed(rows: &[CheckRow]) -> bool {
    rows.iter().all(|r| r.status != CheckStatus::Fail)
}
