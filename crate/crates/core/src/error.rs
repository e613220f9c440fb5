use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal `{0}`")]
    ParseRational(String),
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("coefficient index {n} exceeds truncation order {order}")]
    OrderExceeded { n: usize, order: usize },
    #[error("r0 must be nonnegative, got {0}")]
    NegativeR0(i64),
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
