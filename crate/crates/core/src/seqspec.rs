//! Finite descriptions of infinite weight sequences, and the catalog of
//! named Catalan-like sequences.
//!
//! A [`SequenceSpec`] is an explicit prefix followed by a [`TailRule`]. The
//! diagonal weights `s_k` start at index 0, the subdiagonal weights `t_k`
//! at index 1; the prefix is stored starting at the first index, so a
//! τ prefix `[4]` means `t_1 = 4`.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{int, serde_rational, serde_rational_vec, Rational};
use crate::jacobi::JacobiParams;
use crate::series::GfSpec;

pub const MAX_TAIL_DEGREE: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TailRule {
    Constant {
        #[serde(with = "serde_rational")]
        value: Rational,
    },
    /// `coeffs[i]` multiplies `k^i`, evaluated at the absolute index `k`.
    Polynomial {
        #[serde(with = "serde_rational_vec")]
        coeffs: Vec<Rational>,
    },
}

impl TailRule {
    pub fn eval(&self, k: usize) -> Rational {
        match self {
            TailRule::Constant { value } => value.clone(),
            TailRule::Polynomial { coeffs } => eval_poly(coeffs, &int(k as i64)),
        }
    }

    /// Coefficients in `k`, lowest degree first.
    pub fn coefficients(&self) -> Vec<Rational> {
        match self {
            TailRule::Constant { value } => vec![value.clone()],
            TailRule::Polynomial { coeffs } => coeffs.clone(),
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients().iter().rposition(|c| !c.is_zero())
    }
}

pub(crate) fn eval_poly(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct SequenceSpec {
    prefix: Vec<Rational>,
    tail: TailRule,
    start: usize,
    nonnegative: bool,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    #[serde(with = "serde_rational_vec", default)]
    prefix: Vec<Rational>,
    tail: TailRule,
    #[serde(default)]
    start: usize,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    nonnegative: bool,
}

impl TryFrom<RawSpec> for SequenceSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        let spec = SequenceSpec::new(raw.prefix, raw.tail, raw.start)?;
        Ok(if raw.nonnegative {
            spec.require_nonnegative()
        } else {
            spec
        })
    }
}

impl From<SequenceSpec> for RawSpec {
    fn from(s: SequenceSpec) -> Self {
        RawSpec {
            prefix: s.prefix,
            tail: s.tail,
            start: s.start,
            nonnegative: s.nonnegative,
        }
    }
}

impl SequenceSpec {
    pub fn new(prefix: Vec<Rational>, tail: TailRule, start: usize) -> Result<Self> {
        if start > 1 {
            return Err(Error::Domain(format!(
                "start index must be 0 or 1, got {start}"
            )));
        }
        if let TailRule::Polynomial { coeffs } = &tail {
            if coeffs.is_empty() {
                return Err(Error::Domain(
                    "polynomial tail needs at least one coefficient".into(),
                ));
            }
            if let Some(d) = tail.degree() {
                if d > MAX_TAIL_DEGREE {
                    return Err(Error::Domain(format!(
                        "polynomial tail of degree {d} exceeds {MAX_TAIL_DEGREE}"
                    )));
                }
            }
        }
        Ok(Self {
            prefix,
            tail,
            start,
            nonnegative: false,
        })
    }

    pub fn constant(value: Rational, start: usize) -> Result<Self> {
        Self::new(Vec::new(), TailRule::Constant { value }, start)
    }

    pub fn polynomial(coeffs: Vec<Rational>, start: usize) -> Result<Self> {
        Self::new(Vec::new(), TailRule::Polynomial { coeffs }, start)
    }

    /// A diagonal sequence `s_0, s_1, …` with an integer prefix and constant tail.
    pub fn sigma_ints(prefix: &[i64], tail: i64) -> Self {
        Self::new(
            prefix.iter().map(|&x| int(x)).collect(),
            TailRule::Constant { value: int(tail) },
            0,
        )
        .expect("valid")
    }

    /// A subdiagonal sequence `t_1, t_2, …` with an integer prefix and constant tail.
    pub fn tau_ints(prefix: &[i64], tail: i64) -> Self {
        Self::new(
            prefix.iter().map(|&x| int(x)).collect(),
            TailRule::Constant { value: int(tail) },
            1,
        )
        .expect("valid")
    }

    /// Makes every evaluation check for negative values.
    pub fn require_nonnegative(mut self) -> Self {
        self.nonnegative = true;
        self
    }

    pub fn prefix(&self) -> &[Rational] {
        &self.prefix
    }

    pub fn tail(&self) -> &TailRule {
        &self.tail
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_nonnegative_checked(&self) -> bool {
        self.nonnegative
    }

    /// First index governed by the tail rule.
    pub fn tail_start(&self) -> usize {
        self.start + self.prefix.len()
    }

    pub fn eval(&self, k: usize) -> Result<Rational> {
        if k < self.start {
            return Err(Error::IndexBelowStart {
                index: k,
                start: self.start,
            });
        }
        let i = k - self.start;
        let value = match self.prefix.get(i) {
            Some(v) => v.clone(),
            None => self.tail.eval(k),
        };
        if self.nonnegative && value.is_negative() {
            return Err(Error::NegativeValue { index: k, value });
        }
        Ok(value)
    }

    /// Values at indices `start..=last`.
    pub fn values_through(&self, last: usize) -> Result<Vec<Rational>> {
        (self.start..=last).map(|k| self.eval(k)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub title: &'static str,
    pub sigma: SequenceSpec,
    pub tau: SequenceSpec,
    /// Closed-form generating function, where one is listed.
    pub gf: Option<GfSpec>,
    /// `(p, q, s, t)` when the pair has the shape `σ = (p, s, s, …)`, `τ = (q, t, t, …)`.
    pub pqst: Option<JacobiParams>,
    /// `r_{0,0}, …, r_{7,0}`, frozen from weighted Motzkin path enumeration.
    pub reference_terms: [u64; 8],
}

pub const CATALOG_NAMES: [&str; 8] = [
    "catalan",
    "central_binomial",
    "delannoy",
    "schroder_large",
    "schroder_little",
    "hexagonal",
    "bell",
    "factorial",
];

fn pqst(p: i64, q: i64, s: i64, t: i64) -> Option<JacobiParams> {
    Some(JacobiParams::new(int(p), int(q), int(s), int(t)).expect("nonnegative"))
}

pub fn catalog() -> Vec<CatalogEntry> {
    let poly = |c: &[i64], start| {
        SequenceSpec::polynomial(c.iter().map(|&x| int(x)).collect(), start).expect("valid")
    };
    let named = |n: &str| Some(GfSpec::named(n));
    let entries = vec![
        CatalogEntry {
            name: "catalan",
            aliases: &[],
            title: "Catalan numbers C_n",
            sigma: SequenceSpec::sigma_ints(&[1], 2),
            tau: SequenceSpec::tau_ints(&[], 1),
            gf: named("catalan"),
            pqst: pqst(1, 1, 2, 1),
            reference_terms: [1, 1, 2, 5, 14, 42, 132, 429],
        },
        CatalogEntry {
            name: "central_binomial",
            aliases: &[],
            title: "central binomial coefficients binom(2n, n)",
            sigma: SequenceSpec::sigma_ints(&[], 2),
            tau: SequenceSpec::tau_ints(&[2], 1),
            gf: named("central_binomial"),
            pqst: pqst(2, 2, 2, 1),
            reference_terms: [1, 2, 6, 20, 70, 252, 924, 3432],
        },
        CatalogEntry {
            name: "delannoy",
            aliases: &[],
            title: "central Delannoy numbers D_n",
            sigma: SequenceSpec::sigma_ints(&[], 3),
            tau: SequenceSpec::tau_ints(&[4], 2),
            gf: named("delannoy"),
            pqst: pqst(3, 4, 3, 2),
            reference_terms: [1, 3, 13, 63, 321, 1683, 8989, 48639],
        },
        CatalogEntry {
            name: "schroder_large",
            aliases: &[],
            title: "large Schroder numbers r_n",
            sigma: SequenceSpec::sigma_ints(&[2], 3),
            tau: SequenceSpec::tau_ints(&[], 2),
            gf: named("schroder_large"),
            pqst: pqst(2, 2, 3, 2),
            reference_terms: [1, 2, 6, 22, 90, 394, 1806, 8558],
        },
        CatalogEntry {
            name: "schroder_little",
            aliases: &[],
            title: "little Schroder numbers S_n",
            sigma: SequenceSpec::sigma_ints(&[1], 3),
            tau: SequenceSpec::tau_ints(&[], 2),
            gf: named("schroder_little"),
            pqst: pqst(1, 2, 3, 2),
            reference_terms: [1, 1, 3, 11, 45, 197, 903, 4279],
        },
        CatalogEntry {
            name: "hexagonal",
            // written both h_n and H_n in the literature
            aliases: &["restricted_hexagonal"],
            title: "restricted hexagonal numbers h_n",
            sigma: SequenceSpec::sigma_ints(&[], 3),
            tau: SequenceSpec::tau_ints(&[], 1),
            gf: None,
            pqst: pqst(3, 1, 3, 1),
            reference_terms: [1, 3, 10, 36, 137, 543, 2219, 9285],
        },
        CatalogEntry {
            name: "bell",
            aliases: &[],
            title: "Bell numbers B_n",
            // s_k = k + 1, t_k = k
            sigma: poly(&[1, 1], 0),
            tau: poly(&[0, 1], 1),
            gf: None,
            pqst: None,
            reference_terms: [1, 1, 2, 5, 15, 52, 203, 877],
        },
        CatalogEntry {
            name: "factorial",
            aliases: &[],
            title: "factorial numbers n!",
            // s_k = 2k + 1, t_k = k^2
            sigma: poly(&[1, 2], 0),
            tau: poly(&[0, 0, 1], 1),
            gf: None,
            pqst: None,
            reference_terms: [1, 1, 2, 6, 24, 120, 720, 5040],
        },
    ];
    entries
        .into_iter()
        .map(|mut e| {
            e.sigma = e.sigma.require_nonnegative();
            e.tau = e.tau.require_nonnegative();
            e
        })
        .collect()
}

pub fn catalog_lookup(name: &str) -> Result<CatalogEntry> {
    let key = name.trim().to_ascii_lowercase().replace('-', "_");
    catalog()
        .into_iter()
        .find(|e| e.name == key || e.aliases.contains(&key.as_str()))
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}
