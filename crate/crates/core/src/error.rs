use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("precision error: {what} (achieved {achieved:e}, requested {requested:e})")]
    Precision {
        what: String,
        achieved: f64,
        requested: f64,
    },
    #[error("search error: {0}")]
    Search(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("consistency error: {0}")]
    Consistency(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("optimization error: {0}")]
    Optimization(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for failures that the CLI reports with exit status 3.
    pub fn is_numerical_failure(&self) -> bool {
        !matches!(self, Error::Domain(_) | Error::Precondition(_))
    }
}
