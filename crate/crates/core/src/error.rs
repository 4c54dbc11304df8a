use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("sequence must contain at least one entry")]
    EmptySequence,

    #[error("entry {index} is negative ({value})")]
    NegativeEntry { index: usize, value: f64 },

    #[error("entry {index} is not finite")]
    NonFiniteEntry { index: usize },

    #[error("entries must be nonincreasing (violated at index {index})")]
    NotNonincreasing { index: usize },

    #[error("exponent must satisfy q > 1 or q = inf (got {q})")]
    InvalidExponent { q: f64 },

    #[error("{op}: exponent out of range ({detail})")]
    ExponentOutOfRange { op: &'static str, detail: String },

    #[error("{what} overflowed the representable range")]
    Overflow { what: &'static str },

    #[error("series diverges: p = {p} must exceed 1/(2q') = {threshold}")]
    DivergentSeries { p: f64, threshold: f64 },

    #[error(
        "auxiliary sequence must start at 0 and increase strictly (violated near index {index})"
    )]
    InvalidAuxSequence { index: u64 },

    #[error("no sign change on [{lo}, {hi}]; bracket or formula transcription is wrong")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("tolerance {tol:e} unreachable for q = {q}: would need more than {cap} terms")]
    ToleranceUnreachable { q: f64, tol: f64, cap: u64 },

    #[error("quadrature did not converge: achieved {achieved:e}, requested {requested:e}")]
    QuadratureNonConvergence { achieved: f64, requested: f64 },

    #[error("function integrates to zero; ratio undefined")]
    ZeroIntegral,

    #[error("step function breakpoints must be positive and strictly increasing (index {index})")]
    InvalidBreakpoints { index: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
