use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("n must be a positive integer, got {0}")]
    NonPositiveN(i64),
    #[error("diagram D(4n;{m1},{m2},{m3}) with n={n} is not alternating")]
    NotAlternating { n: i64, m1: i64, m2: i64, m3: i64 },
    #[error("diagram is not weakly alternating: {0}")]
    NotWeaklyAlternating(String),
    #[error("twist powers l, r must be zero here (got l={l}, r={r})")]
    TwistedInput { l: i64, r: i64 },
    #[error("traced system is uncolorable: {0}")]
    Uncolorable(String),
    #[error("fibre with zero multiplicity: {0}/0")]
    ZeroMultiplicity(i64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
