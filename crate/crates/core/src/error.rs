use thiserror::Error;

/// Errors raised by the numerical and scenario layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: |M[{row}][{col}] - conj(M[{col}][{row}])| = {deviation:e}")]
    NotHermitian {
        row: usize,
        col: usize,
        deviation: f64,
    },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix data of length {len} is not square")]
    NotSquare { len: usize },

    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("invalid probability vector: {0}")]
    InvalidProbabilities(String),

    #[error("logarithm base must be greater than 1, got {0}")]
    InvalidBase(f64),

    #[error("normalization dimension must be at least 2, got {0}")]
    InvalidNormalization(usize),

    #[error("operation requires a bipartite split")]
    MissingSplit,

    #[error("split {s}x{r} does not factor dimension {dim}")]
    InvalidSplit { s: usize, r: usize, dim: usize },

    #[error("invalid observable: {0}")]
    InvalidObservable(String),

    #[error("operator is not involutory: max |O^2 - 1| = {0:e}")]
    NotInvolutory(f64),

    #[error("state is not pure: tr(rho^2) = {0}")]
    NotPure(f64),

    #[error("angle {0} is outside [0, pi]")]
    ThetaOutOfRange(f64),

    #[error("chord at theta = {0} passes within the exclusion window of the flux line at the origin")]
    ChordThroughSingularity(f64),

    #[error("invalid phase profile: {0}")]
    InvalidProfile(String),

    #[error("invalid cylinder state: {0}")]
    InvalidCylinder(String),
}

pub type Result<T> = std::result::Result<T, Error>;
