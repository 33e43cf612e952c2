use thiserror::Error;

/// Errors raised by the numerical kernels, the mode assembly and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("gamma function pole at x = {0}")]
    GammaPole(f64),

    #[error("hypergeometric series diverges: |z| = {0} >= 1 and the series does not terminate")]
    Divergent(f64),

    #[error("hypergeometric lower parameter {0} is a non-positive integer reached before termination")]
    LowerParameterPole(f64),

    #[error("series did not converge within {0} terms")]
    NonConvergence(usize),

    #[error("argument outside the validated domain: {0}")]
    OutOfDomain(String),

    #[error("singular point: {0}")]
    Singular(String),

    #[error("parameters would be complex: radicand {0} < 0")]
    ComplexParameters(f64),

    #[error("unsupported combination: {0}")]
    Unsupported(String),

    #[error("invalid mode specification: {0}")]
    InvalidSpec(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
