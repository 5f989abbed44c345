use thiserror::Error;

/// Errors raised by ring construction, arithmetic and the exhaustive checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An operand lies outside the domain of the operation (e.g. inverting zero).
    #[error("domain error: {0}")]
    Domain(String),

    /// A documented precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Invalid construction parameters (non-prime modulus, zero degree, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An exhaustive computation would exceed its configured cap.
    #[error("{what} too large: {size} exceeds cap {cap} (raise it with --max-enum / --max-dim)")]
    CapExceeded { what: String, size: String, cap: u64 },

    /// Text that does not follow the ring, polynomial or descriptor grammar.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn cap(what: impl Into<String>, size: impl ToString, cap: u64) -> Self {
        Error::CapExceeded {
            what: what.into(),
            size: size.to_string(),
            cap,
        }
    }
}
