use thiserror::Error;

/// Errors raised by lattice construction and the numerical routines built on it.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension must be odd, got d = {0}")]
    EvenDimension(usize),

    #[error("dimension must be at least 5, got d = {0}")]
    DimensionTooSmall(usize),

    #[error("lattice mismatch: d = {left} vs d = {right}")]
    LatticeMismatch { left: usize, right: usize },

    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("index {index} outside the symmetric range -{s}..={s}")]
    IndexOutOfRange { index: i64, s: i64 },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("matrix is not real symmetric (deviation {deviation:.3e})")]
    NotSymmetric { deviation: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:.3e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("eigenvalues {index} and {next} are nearly degenerate (gap {gap:.3e})")]
    DegenerateSpectrum { index: usize, next: usize, gap: f64 },

    #[error("eigenvector {index}: <v, Fv> = {value} is not within 0.1 of a fourth root of unity")]
    AmbiguousFourierClass { index: usize, value: String },

    #[error("basis vector {m}: {reason}")]
    Ordering { m: usize, reason: String },

    #[error("basis is incomplete: {got} of {expected} vectors")]
    IncompleteBasis { expected: usize, got: usize },

    #[error("unknown signal specification `{0}` (expected `rect` or `gauss:<kappa>`)")]
    UnknownSignal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
