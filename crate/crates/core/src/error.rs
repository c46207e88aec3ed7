use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("size limit exceeded: {what} is {got}, limit {limit}")]
    SizeLimit {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("index {index} is below the first index {start} of this sequence")]
    IndexBelowStart { index: usize, start: usize },

    #[error("sequence value at index {index} is negative ({value})")]
    NegativeValue { index: usize, value: Rational },

    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("need at least {needed} terms, got {got}")]
    InsufficientTerms { needed: usize, got: usize },

    #[error("series has an invalid constant term: {0}")]
    ConstantTerm(String),

    #[error("closed form divides by 2t; t = 0 must go through the fixed-point route")]
    ZeroT,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
