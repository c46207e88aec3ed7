//! Subcommand implementations. Each returns the full stdout text plus
//! whether the checked property held.

use serde::Serialize;
use serde_json::json;

use moments_core::exact::{all_minors_nonneg, format_rational, MinorVerdict, MinorWitness};
use moments_core::hankel::{
    build_hankel, hankel_det_product, stieltjes_check_with, MomentSequence, StieltjesVerdict,
};
use moments_core::jacobi::{
    leading_minors, pqst_report, refute_pqst, tp_check_sections, tp_check_structured,
    tp_sufficient_lemma2, JacobiMatrix, TpReport, Verdict,
};
use moments_core::series::series_report;
use moments_core::verify::{bundle_passed, verify_bundle, CheckStatus};
use moments_core::{
    build_recursive, catalan_like, catalog, catalog_lookup, det_bareiss, Error, Rational, Result,
};

use crate::source::{self, Role};
use crate::{Cli, Command, Format, WeightArgs};

pub struct Output {
    pub stdout: String,
    pub ok: bool,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, ok: true }
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn spaced(v: &[Rational]) -> String {
    strings(v).join(" ")
}

fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// `n,<column>` followed by one row per index.
fn indexed_csv(column: &str, v: &[Rational]) -> String {
    let mut out = format!("n,{column}\n");
    for (i, x) in v.iter().enumerate() {
        out.push_str(&format!("{i},{}\n", format_rational(x)));
    }
    out
}

fn weights(w: &WeightArgs) -> Result<(moments_core::SequenceSpec, moments_core::SequenceSpec)> {
    source::weights(w.name.as_deref(), w.sigma.as_deref(), w.tau.as_deref())
}

pub fn run(cli: &Cli) -> Result<Output> {
    let f = cli.format;
    match &cli.command {
        Command::Gen { weights: w, n } => gen(f, w, *n),
        Command::Matrix { weights: w, n } => matrix(f, w, *n),
        Command::Stieltjes {
            weights: w,
            terms,
            depth,
        } => stieltjes(f, w, terms.as_deref(), *depth, cli.parallel),
        Command::HankelDet { weights: w, depth } => hankel_det(f, w, *depth),
        Command::Tp {
            jacobi_name,
            pqst,
            sigma,
            tau,
            depth,
            all_minors,
        } => {
            let src = TpSource::from_args(
                jacobi_name.as_deref(),
                pqst.as_deref(),
                sigma.as_deref(),
                tau.as_deref(),
            )?;
            tp(f, src, *depth, *all_minors, cli.budget)
        }
        Command::Series { gf, n } => series(f, gf, *n),
        Command::Verify { name, depth } => verify(f, name, *depth),
        Command::Catalog => catalog_cmd(f),
    }
}

fn gen(f: Format, w: &WeightArgs, n: usize) -> Result<Output> {
    let (sigma, tau) = weights(w)?;
    let terms = catalan_like(&sigma, &tau, n)?;
    Ok(Output::ok(match f {
        Format::Text => format!("{}\n", spaced(&terms)),
        Format::Json => pretty(&json!({ "n": n, "terms": strings(&terms) })),
        Format::Csv => indexed_csv("term", &terms),
    }))
}

fn matrix(f: Format, w: &WeightArgs, n: usize) -> Result<Output> {
    let (sigma, tau) = weights(w)?;
    let r = build_recursive(&sigma, &tau, n)?;
    Ok(Output::ok(match f {
        Format::Text => r.rows().iter().map(|row| spaced(row) + "\n").collect(),
        Format::Json => pretty(&r.to_json()),
        Format::Csv => r.to_csv(),
    }))
}

fn stieltjes(
    f: Format,
    w: &WeightArgs,
    terms: Option<&str>,
    depth: usize,
    parallel: bool,
) -> Result<Output> {
    let seq = match terms {
        Some(raw) => MomentSequence::explicit(source::rational_list(raw)?)?,
        None => {
            let (sigma, tau) = weights(w)?;
            MomentSequence::from_recurrence(&sigma, &tau, 2 * depth + 1)?
        }
    };
    let report = stieltjes_check_with(&seq, depth, parallel)?;
    let stdout = match f {
        Format::Json => pretty(&report),
        Format::Csv => report.to_csv(),
        Format::Text => {
            let mut out = String::from("k det0 det1\n");
            for k in 0..=depth {
                out.push_str(&format!(
                    "{k} {} {}\n",
                    format_rational(&report.dets0[k]),
                    format_rational(&report.dets1[k])
                ));
            }
            match &report.verdict {
                StieltjesVerdict::Pass => out.push_str(&format!("PASS at depth {depth}\n")),
                StieltjesVerdict::Fail(wit) => out.push_str(&format!(
                    "FAIL: det{} at k = {} is {}\n",
                    wit.family,
                    wit.k,
                    format_rational(&wit.value)
                )),
            }
            out
        }
    };
    Ok(Output {
        stdout,
        ok: report.passed(),
    })
}

fn hankel_det(f: Format, w: &WeightArgs, depth: usize) -> Result<Output> {
    let (sigma, tau) = weights(w)?;
    let seq = MomentSequence::from_recurrence(&sigma, &tau, 2 * depth + 1)?;
    let mut rows = Vec::with_capacity(depth + 1);
    for k in 0..=depth {
        let det = det_bareiss(&build_hankel(&seq, k, 0)?)?;
        let product = hankel_det_product(&tau, k)?;
        rows.push((k, det, product));
    }
    let ok = rows.iter().all(|(_, d, p)| d == p);
    let stdout = match f {
        Format::Text => {
            let mut out = String::from("k det product\n");
            for (k, d, p) in &rows {
                out.push_str(&format!(
                    "{k} {} {}\n",
                    format_rational(d),
                    format_rational(p)
                ));
            }
            out.push_str(if ok { "MATCH\n" } else { "MISMATCH\n" });
            out
        }
        Format::Csv => {
            let mut out = String::from("k,det,product\n");
            for (k, d, p) in &rows {
                out.push_str(&format!(
                    "{k},{},{}\n",
                    format_rational(d),
                    format_rational(p)
                ));
            }
            out
        }
        Format::Json => pretty(&json!({
            "depth": depth,
            "match": ok,
            "rows": rows.iter().map(|(k, d, p)| json!({
                "k": k,
                "det": format_rational(d),
                "product": format_rational(p),
            })).collect::<Vec<_>>(),
        })),
    };
    Ok(Output { stdout, ok })
}

enum TpSource {
    Weights(JacobiMatrix),
    Pqst(moments_core::jacobi::JacobiParams),
}

impl TpSource {
    fn from_args(
        name: Option<&str>,
        pqst: Option<&str>,
        sigma: Option<&str>,
        tau: Option<&str>,
    ) -> Result<Self> {
        match (name, pqst, sigma, tau) {
            (Some(n), None, None, None) => {
                let e = catalog_lookup(n)?;
                Ok(TpSource::Weights(JacobiMatrix::new(e.sigma, e.tau)))
            }
            (None, Some(raw), None, None) => Ok(TpSource::Pqst(source::pqst(raw)?)),
            (None, None, Some(s), Some(t)) => Ok(TpSource::Weights(JacobiMatrix::new(
                source::sequence_spec(s, Role::Sigma)?,
                source::sequence_spec(t, Role::Tau)?,
            ))),
            _ => Err(Error::Parse(
                "give one of --jacobi-name, --pqst, or --sigma with --tau".into(),
            )),
        }
    }
}

#[derive(Serialize)]
struct TpOutput {
    verdict: Verdict,
    depth: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    leading_minors: Option<Vec<String>>,
    checks: Vec<TpReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    refutation: Option<String>,
    info: Vec<TpReport>,
}

fn all_minors_report(j: &JacobiMatrix, depth: usize, budget: u64) -> Result<TpReport> {
    let m = j.square_section(depth)?;
    let (verdict, witness, note) = match all_minors_nonneg(&m, depth + 1, budget)? {
        MinorVerdict::Nonnegative => (Verdict::True, None, None),
        MinorVerdict::Negative(w) => (Verdict::False, Some(w), None),
        MinorVerdict::Inconclusive { required, budget } => (
            Verdict::Inconclusive,
            None,
            Some(format!("{required} minors exceed budget {budget}")),
        ),
    };
    Ok(TpReport {
        criterion: "all-minors".into(),
        verdict,
        depth: Some(depth),
        witness,
        note,
        fallback: None,
    })
}

/// FALSE if any finite check found a negative minor, TRUE if one certified
/// the section, INCONCLUSIVE otherwise.
fn combine(checks: &[TpReport]) -> Verdict {
    let effective = |r: &TpReport| match (&r.verdict, &r.fallback) {
        (Verdict::Inconclusive, Some(fb)) => fb.verdict,
        (v, _) => *v,
    };
    if checks.iter().any(|r| effective(r) == Verdict::False) {
        Verdict::False
    } else if checks.iter().any(|r| effective(r) == Verdict::True) {
        Verdict::True
    } else {
        Verdict::Inconclusive
    }
}

fn witness_text(w: &MinorWitness) -> String {
    let idx = |v: &[usize]| {
        v.iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    format!(
        "rows [{}] cols [{}] = {}",
        idx(&w.rows),
        idx(&w.cols),
        format_rational(&w.value)
    )
}

fn report_line(r: &TpReport) -> String {
    let mut line = format!("{}: {}", r.criterion, r.verdict);
    if let Some(d) = r.depth {
        line.push_str(&format!(" (depth {d})"));
    }
    if let Some(w) = &r.witness {
        line.push_str(&format!("; witness {}", witness_text(w)));
    }
    if let Some(n) = &r.note {
        line.push_str(&format!("; {n}"));
    }
    if let Some(fb) = &r.fallback {
        line.push_str(&format!("\n  fallback {}", report_line(fb)));
    }
    line
}

fn tp(f: Format, src: TpSource, depth: usize, all_minors: bool, budget: u64) -> Result<Output> {
    let out = match src {
        TpSource::Weights(j) => {
            let mut checks = vec![
                tp_check_structured(&j, depth, budget)?,
                tp_check_sections(&j, depth, depth + 1, budget)?,
            ];
            if all_minors {
                checks.push(all_minors_report(&j, depth, budget)?);
            }
            let chain = leading_minors(&j, depth)?;
            let lemma = tp_sufficient_lemma2(j.sigma(), j.tau(), depth)?.report();
            TpOutput {
                verdict: combine(&checks),
                depth,
                leading_minors: Some(strings(&chain.values)),
                checks,
                refutation: None,
                info: vec![lemma],
            }
        }
        TpSource::Pqst(params) => {
            let headline = pqst_report(&params);
            let j = params.jacobi();
            let mut checks = vec![
                headline.clone(),
                tp_check_sections(&j, depth, depth + 1, budget)?,
            ];
            if all_minors {
                checks.push(all_minors_report(&j, depth, budget)?);
            }
            let refutation = if headline.verdict == Verdict::False {
                Some(match refute_pqst(&params, depth)? {
                    Some(w) => format!("refuted by {}", witness_text(&w)),
                    None => format!("not refuted at depth {depth}"),
                })
            } else {
                None
            };
            let lemma = tp_sufficient_lemma2(&params.sigma(), &params.tau(), depth)?.report();
            TpOutput {
                verdict: headline.verdict,
                depth,
                leading_minors: Some(strings(&leading_minors(&j, depth)?.values)),
                checks,
                refutation,
                info: vec![lemma],
            }
        }
    };
    let ok = out.verdict == Verdict::True;
    let stdout = match f {
        Format::Json => pretty(&out),
        Format::Text => {
            let mut s = format!("{}\n", out.verdict);
            if let Some(chain) = &out.leading_minors {
                s.push_str(&format!("leading minors: {}\n", chain.join(",")));
            }
            for r in &out.checks {
                s.push_str(&report_line(r));
                s.push('\n');
            }
            if let Some(r) = &out.refutation {
                s.push_str(&format!("{r}\n"));
            }
            for r in &out.info {
                s.push_str(&format!("info {}\n", report_line(r)));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("criterion,verdict,depth,witness,note\n");
            let rows = out.checks.iter().chain(&out.info);
            for r in rows {
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    csv_field(&r.criterion),
                    r.verdict,
                    r.depth.map(|d| d.to_string()).unwrap_or_default(),
                    csv_field(&r.witness.as_ref().map(witness_text).unwrap_or_default()),
                    csv_field(r.note.as_deref().unwrap_or_default()),
                ));
            }
            s
        }
    };
    Ok(Output { stdout, ok })
}

fn series(f: Format, raw: &str, n: usize) -> Result<Output> {
    let spec = source::gf_spec(raw)?;
    let report = series_report(&spec, n)?;
    Ok(Output::ok(match f {
        Format::Text => format!("{}\n", spaced(&report.coeffs)),
        Format::Json => pretty(&report),
        Format::Csv => indexed_csv("coeff", &report.coeffs),
    }))
}

fn verify(f: Format, name: &str, depth: usize) -> Result<Output> {
    let entry = catalog_lookup(name)?;
    let rows = verify_bundle(&entry, depth)?;
    let ok = bundle_passed(&rows);
    let first_failure = rows
        .iter()
        .find(|r| r.status == CheckStatus::Fail)
        .map(|r| r.check);
    let status = |s: CheckStatus| match s {
        CheckStatus::Pass => "PASS",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Info => "INFO",
    };
    let stdout = match f {
        Format::Json => pretty(&json!({
            "name": entry.name,
            "depth": depth,
            "passed": ok,
            "first_failure": first_failure,
            "checks": rows,
        })),
        Format::Csv => {
            let mut s = String::from("check,status,detail\n");
            for r in &rows {
                s.push_str(&format!(
                    "{},{},{}\n",
                    csv_field(r.check),
                    status(r.status),
                    csv_field(&r.detail)
                ));
            }
            s
        }
        Format::Text => {
            let width = rows.iter().map(|r| r.check.len()).max().unwrap_or(0);
            let mut s = format!("{} at depth {depth}\n", entry.name);
            for r in &rows {
                s.push_str(&format!(
                    "{:<4}  {:<width$}  {}\n",
                    status(r.status),
                    r.check,
                    r.detail
                ));
            }
            match first_failure {
                None => s.push_str("all checks PASS\n"),
                Some(c) => s.push_str(&format!("FAILED: {c}\n")),
            }
            s
        }
    };
    Ok(Output { stdout, ok })
}

fn catalog_cmd(f: Format) -> Result<Output> {
    let entries = catalog();
    Ok(Output::ok(match f {
        Format::Text => {
            let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
            entries
                .iter()
                .map(|e| {
                    let terms: Vec<String> = e.reference_terms.iter().map(u64::to_string).collect();
                    format!("{:<width$}  {}  [{}]\n", e.name, e.title, terms.join(" "))
                })
                .collect()
        }
        Format::Csv => {
            let mut s = String::from("name,title,terms\n");
            for e in &entries {
                let terms: Vec<String> = e.reference_terms.iter().map(u64::to_string).collect();
                s.push_str(&format!(
                    "{},{},{}\n",
                    e.name,
                    csv_field(e.title),
                    terms.join(" ")
                ));
            }
            s
        }
        Format::Json => pretty(
            &entries
                .iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "aliases": e.aliases,
                        "title": e.title,
                        "sigma": e.sigma,
                        "tau": e.tau,
                        "gf": e.gf,
                        "pqst": e.pqst,
                        "terms": e.reference_terms.iter().map(u64::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect::<Vec<_>>(),
        ),
    }))
}
