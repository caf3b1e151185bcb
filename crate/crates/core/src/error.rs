use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not Hermitian (max |M - M†| = {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("not a valid density operator: {reason}")]
    InvalidState { reason: String },

    #[error("argument {name} = {value} outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("invalid detector configuration: {0}")]
    InvalidDetector(String),

    #[error("invalid correlator set: {0}")]
    InvalidCorrelators(String),

    #[error("quadrature did not converge: {detail}")]
    QuadratureNonConvergence { detail: String },

    #[error("detector coupling times out of order: t_A = {t_a} > t_B = {t_b}")]
    TimeOrderViolation { t_a: f64, t_b: f64 },

    #[error("channel construction is not completely positive (min Choi eigenvalue {min_eigenvalue:.3e})")]
    CpViolation { min_eigenvalue: f64 },

    #[error("channel construction is not trace preserving (deviation {deviation:.3e})")]
    TpViolation { deviation: f64 },

    #[error("tensor power 2^{n} exceeds the dimension cap 2^{cap}")]
    DimensionCap { n: usize, cap: usize },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:.3e})")]
    EigenNonConvergence { sweeps: usize, off_norm: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
