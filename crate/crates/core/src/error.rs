use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("{what}: argument {value} is outside the admissible domain")]
    Domain { what: &'static str, value: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// The EPD parameter does not belong to the regime the caller asked for.
    #[error("k = {k} is not admissible for the {regime} regime")]
    Regime { regime: &'static str, k: f64 },

    #[error("t = {t} lies beyond the solution horizon {horizon}")]
    Horizon { t: f64, horizon: f64 },

    #[error("{what} did not converge after {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: usize },

    #[error("invalid input: {0}")]
    Invalid(&'static str),
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64) -> Self {
        Error::Domain { what, value }
    }
}
