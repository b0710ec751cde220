use thiserror::Error;

/// Errors produced by constructors, projectors and checkers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("normal vector must be nonzero")]
    ZeroNormal,

    #[error("vector contains a non-finite entry")]
    NonFinite,

    #[error("generator matrix is singular; columns must form a basis")]
    SingularBasis,

    #[error("{op} does not support {variant} cones")]
    UnsupportedVariant {
        op: &'static str,
        variant: &'static str,
    },

    #[error("{what} failed to converge within {iterations} iterations")]
    NoConvergence {
        what: &'static str,
        iterations: usize,
    },

    #[error("polyhedron is empty or its projection subproblem is unbounded")]
    InfeasiblePolyhedron,

    #[error("cone is not subdual")]
    NotSubdual,

    #[error("projection paths disagree: residual {residual:.3e}")]
    DualPathMismatch { residual: f64 },

    #[error("conversion refused: {0}")]
    RefusedConversion(String),

    #[error("sampler cannot produce points in the requested set: {0}")]
    SamplerUnavailable(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
