use thiserror::Error;

/// Errors raised by the series engine and the checkers built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent {exponent} lies above the truncation bound {bound}")]
    ExponentAboveBound { exponent: i64, bound: i64 },

    #[error("coefficient beyond truncation: q^{exponent} requested, series exact through q^{bound}")]
    BeyondTruncation { exponent: i64, bound: i64 },

    #[error("cannot invert the zero series")]
    ZeroInverse,

    #[error("non-unit leading coefficient {0}")]
    NonUnitLeading(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("term valuation decreases at summation index {index} ({from} -> {to})")]
    NonMonotone { index: i64, from: i64, to: i64 },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("malformed signed function: {0}")]
    MalformedSignedF(String),

    #[error("n = {n} is above the enumeration limit {limit}")]
    EnumerationLimit { n: u64, limit: u64 },

    #[error("invalid series encoding: {0}")]
    Encoding(String),
}

pub type Result<T> = std::result::Result<T, Error>;
