//! Error type shared by all modules.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },
    #[error("eigendecomposition did not converge")]
    NoConvergence,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension {dim} outside supported range {min}..={max}")]
    DimensionOutOfRange { dim: usize, min: usize, max: usize },
    #[error("vector is not normalized (deviation {deviation:.3e})")]
    NotNormalized { deviation: f64 },
    #[error("non-finite entry (NaN or Inf)")]
    NonFinite,
    #[error("invalid density operator: {0}")]
    InvalidDensity(String),
    #[error("invalid POVM: {0}")]
    InvalidPovm(String),
    #[error("operator is not an orthogonal projector (deviation {deviation:.3e})")]
    NotProjector { deviation: f64 },
    #[error("coefficient {index} out of range: {value} not in [0, 1]")]
    CoefficientOutOfRange { index: usize, value: f64 },
    #[error("theta {theta} outside [0, pi/4]")]
    ThetaOutOfRange { theta: f64 },
    #[error("theta = 0 makes the residual states identical; no unambiguous discrimination exists")]
    DegenerateTheta,
    #[error("optimizer did not converge within the iteration budget")]
    NotConverged,
}
