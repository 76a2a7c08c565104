use thiserror::Error;

/// Errors raised by the exact and numeric layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("no value assigned to generator t{0}")]
    MissingAssignment(u32),
    #[error("series is not invertible: constant term must be a nonzero rational")]
    NonInvertibleSeries,
    #[error("composition requires the inner series to have zero constant term")]
    CompositionDomain,
    #[error("series must start z + O(z^2) to be reverted")]
    NotNormalized,
    #[error("order {needed} exceeds truncation order {available}")]
    Truncation { needed: usize, available: usize },
    #[error("logarithm requires constant term 1, exponential requires constant term 0")]
    ExpLogDomain,
    #[error("Chern vector of weight {weight} is missing partition {missing}")]
    IncompleteVector { weight: u32, missing: String },
    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: u32, found: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unsupported series form: {0}")]
    UnsupportedSeries(String),
    #[error("degenerate lattice: Im(omega2/omega1) must be positive")]
    DegenerateLattice,
    #[error("no convergence: {0}")]
    NonConvergence(String),
    #[error("point is within {0:e} of a lattice pole")]
    Pole(f64),
    #[error("malformed coefficient table: {0}")]
    MalformedTable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
