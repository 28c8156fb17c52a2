use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A caller broke an operation's precondition (bad index, length, shape).
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// Something a theorem guarantees did not happen. Always a bug.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("unsupported size: {what} has size {size}, limit is {limit}")]
    UnsupportedSize {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::ContractViolation(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }
}
