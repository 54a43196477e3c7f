use thiserror::Error;

/// Errors raised by ring, polynomial and sequence operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial {0} is not monic")]
    NotMonic(String),
    #[error("polynomial has degree zero")]
    DegreeZero,
    #[error("not invertible for the Newton product: binomial-transform value at index {index} is not a unit")]
    NotInvertible { index: usize },
    #[error("expected {expected} initial terms, found {found}")]
    InitLength { expected: usize, found: usize },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("requested {requested} terms but only {available} are available")]
    PrefixExhausted { requested: usize, available: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
