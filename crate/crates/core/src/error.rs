use thiserror::Error;

/// Errors produced by the simulation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid dimension {0}: must be at least {1}")]
    InvalidDimension(usize, usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("vector is not normalized: squared norm {0}")]
    NotNormalized(f64),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),
    #[error("no convergence: {0}")]
    NoConvergence(String),
    #[error("no bound state: {0}")]
    NoBoundState(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("peaks not found: {0}")]
    PeaksNotFound(String),
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    /// Short machine-readable tag for the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidDimension(..) => "invalid-dimension",
            Error::DimensionMismatch(..) => "dimension-mismatch",
            Error::NotNormalized(_) => "not-normalized",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::InvalidParameter { .. } => "invalid-parameter",
            Error::DegenerateGeometry(_) => "degenerate-geometry",
            Error::NoConvergence(_) => "no-convergence",
            Error::NoBoundState(_) => "no-bound-state",
            Error::Unsupported(_) => "unsupported",
            Error::Overflow(_) => "overflow",
            Error::PeaksNotFound(_) => "peaks-not-found",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
