//! Turning command-line arguments into sequence specs, moment sequences and
//! generating-function specs.

use std::fs;

use moments_core::exact::parse_rational;
use moments_core::jacobi::JacobiParams;
use moments_core::series::GfSpec;
use moments_core::{catalog_lookup, Error, Rational, Result, SequenceSpec};

/// `@path` reads a file; anything else is returned as is.
fn inline_or_file(raw: &str) -> Result<String> {
    match raw.strip_prefix('@') {
        Some(path) => {
            fs::read_to_string(path).map_err(|e| Error::Parse(format!("reading {path}: {e}")))
        }
        None => Ok(raw.to_string()),
    }
}

#[derive(Clone, Copy)]
pub enum Role {
    Sigma,
    Tau,
}

/// A catalog name (taking that entry's σ or τ), inline JSON, or `@file.json`.
pub fn sequence_spec(raw: &str, role: Role) -> Result<SequenceSpec> {
    let text = inline_or_file(raw)?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        return SequenceSpec::from_json(trimmed);
    }
    let entry = catalog_lookup(trimmed)?;
    Ok(match role {
        Role::Sigma => entry.sigma,
        Role::Tau => entry.tau,
    })
}

/// `(σ, τ)` from either `--name` or the `--sigma`/`--tau` pair.
pub fn weights(
    name: Option<&str>,
    sigma: Option<&str>,
    tau: Option<&str>,
) -> Result<(SequenceSpec, SequenceSpec)> {
    match (name, sigma, tau) {
        (Some(n), None, None) => {
            let e = catalog_lookup(n)?;
            Ok((e.sigma, e.tau))
        }
        (None, Some(s), Some(t)) => {
            Ok((sequence_spec(s, Role::Sigma)?, sequence_spec(t, Role::Tau)?))
        }
        _ => Err(Error::Parse(
            "give either --name or both --sigma and --tau".into(),
        )),
    }
}

/// Comma- or whitespace-separated rationals.
pub fn rational_list(raw: &str) -> Result<Vec<Rational>> {
    let text = inline_or_file(raw)?;
    let items: Vec<&str> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    if items.is_empty() {
        return Err(Error::Parse("empty list".into()));
    }
    items.into_iter().map(parse_rational).collect()
}

pub fn pqst(raw: &str) -> Result<JacobiParams> {
    let v = rational_list(raw)?;
    let [p, q, s, t]: [Rational; 4] = v.try_into().map_err(|v: Vec<Rational>| {
        Error::Parse(format!("--pqst needs 4 values, got {}", v.len()))
    })?;
    JacobiParams::new(p, q, s, t)
}

/// A catalog name with a listed generating function, inline JSON, or `@file.json`.
pub fn gf_spec(raw: &str) -> Result<GfSpec> {
    let text = inline_or_file(raw)?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        return serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()));
    }
    let entry = catalog_lookup(trimmed)?;
    entry.gf.ok_or_else(|| {
        Error::UnknownName(format!(
            "{} has no closed-form generating function",
            entry.name
        ))
    })
}
