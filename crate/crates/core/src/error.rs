use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("invalid probability data: {0}")]
    InvalidProbability(String),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("argument outside the convergence domain: |z| = {abs_z} > {limit}")]
    ConvergenceDomain { abs_z: f64, limit: f64 },

    #[error("pole: {0}")]
    Pole(String),

    #[error("series did not converge within {terms} terms")]
    NonConvergence { terms: usize },

    #[error("unsupported branch: {0}")]
    UnsupportedBranch(String),

    #[error("invalid entropy parameter q = {0} (need q > 0 and q != 1)")]
    InvalidQ(f64),

    #[error("captured mass {captured} is below the required {required}")]
    InsufficientMass { captured: f64, required: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("non-finite value produced by {0}")]
    NonFinite(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
