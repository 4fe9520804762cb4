use thiserror::Error;

/// Errors raised by the evaluation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("pole at {0}")]
    Pole(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} did not converge: best estimate {estimate}, error bound {error_bound}")]
    NoConvergence {
        what: &'static str,
        estimate: String,
        error_bound: String,
    },

    #[error("convention mismatch: value computed under {found}, requested {requested}")]
    ConventionMismatch { found: String, requested: String },
}

pub type Result<T> = std::result::Result<T, Error>;
