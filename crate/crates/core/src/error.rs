use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("GF argument {0} is not a prime power")]
    NotPrimePower(u64),

    #[error("modulus {0} is smaller than 2")]
    ModulusTooSmall(u64),

    #[error("ring too large: {0}")]
    RingTooLarge(String),

    #[error("element does not match ring shape: {0}")]
    ShapeMismatch(String),

    #[error("vector mismatch: {0}")]
    DimensionMismatch(String),

    #[error("{what} of size {size} exceeds cap {cap}")]
    CapExceeded { what: &'static str, size: u64, cap: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal self-check failed: {0}")]
    SelfCheck(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("claim filter `{0}` matches no claim")]
    EmptyFilter(String),

    #[error("unknown invariant `{0}`")]
    UnknownInvariant(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, size: u64, cap: u64) -> Self {
        Error::CapExceeded { what, size, cap }
    }
}
