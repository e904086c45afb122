use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Bad or inconsistent parameters (e.g. fixed points requested for a
    /// symmetry class that has none).
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Input data violates a structural invariant.
    #[error("invariant violated: {0}")]
    Invariant(String),

    /// An exhaustive computation would exceed its configured bound.
    #[error("size bound exceeded: {0}")]
    Size(String),

    /// Argument outside the supported domain of a numerical routine.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested combination is not implemented.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// The Painlevé integration left the admissible envelope.
    #[error("numerical instability at x = {x}: {reason}")]
    Instability { x: f64, reason: String },

    /// Other numerical failure (overflow, non-finite values).
    #[error("numerics: {0}")]
    Numerics(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
