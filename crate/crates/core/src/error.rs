use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not a supported prime (must be prime and below 2^31)")]
    NotPrime(u64),
    #[error("operands live in different ring contexts")]
    RingMismatch,
    #[error("shape error: {0}")]
    Shape(String),
    #[error("index error: {0}")]
    Index(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("step budget of {limit} exceeded")]
    BudgetExceeded { limit: u64 },
    #[error("resolution stopped at length {0} before reaching projective dimension")]
    IncompleteResolution(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
