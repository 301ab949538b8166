use thiserror::Error;

/// Errors raised by constructors and spectral routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("order {order} exceeds the limit of {limit}")]
    OrderTooLarge { order: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("element index {index} out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("operation requires an abelian group, got {0}")]
    NonAbelian(String),

    #[error("subset belongs to {found}, expected {expected}")]
    MismatchedGroup { expected: String, found: String },

    #[error("{divisor} does not divide {value}")]
    NotDivisor { divisor: u64, value: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{what} of size {size} exceeds the cap of {cap}")]
    SizeBound { what: &'static str, size: usize, cap: usize },

    #[error("ring is not a field: {0}")]
    NotField(String),

    #[error("malformed group axioms: {0}")]
    InvalidGroup(String),

    #[error("malformed ring: {0}")]
    InvalidRing(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("adjacency matrix is not symmetric")]
    NonSymmetric,

    #[error("bipartiteness is only defined here for undirected loopless graphs")]
    BipartiteUndefined,

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("multiplicities sum to {found}, expected {expected}")]
    MultiplicityMismatch { expected: usize, found: usize },

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("independent routes disagree: {0}")]
    OracleMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
