use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or inconsistent caller input.
    #[error("input error: {0}")]
    Input(String),

    #[error("syntax error on line {line}: {message}")]
    Syntax { line: usize, message: String },

    /// A group or search exceeded the configured order bound.
    #[error("capacity error: group order {order} exceeds the configured bound {bound}")]
    Capacity { order: usize, bound: usize },

    /// A named hypothesis of an operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// The theorem verifiers only cover odd primes.
    #[error("unsupported prime {0}: the lift-counting results require an odd prime")]
    UnsupportedPrime(u64),

    /// An internal consistency assertion failed; carries the witness.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
