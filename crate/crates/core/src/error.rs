use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes shared by every numerical routine in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain the routine supports.
    #[error("domain error: {0}")]
    Domain(String),

    /// A numerical procedure did not reach its tolerance. `estimate` carries
    /// the best value found so far, when there is one.
    #[error("numerical error: {message} (estimate {estimate:?}, error {error:?})")]
    Numerical {
        message: String,
        estimate: Option<f64>,
        error: Option<f64>,
    },

    /// Inputs are individually valid but inconsistent with each other.
    #[error("configuration error: {0}")]
    Config(String),

    /// A Fock-basis truncation is too small for the requested accuracy.
    #[error("truncation error: tail ratio {ratio:.3e} exceeds {limit:.1e}")]
    Truncation { ratio: f64, limit: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn numerical(message: impl Into<String>) -> Self {
        Error::Numerical {
            message: message.into(),
            estimate: None,
            error: None,
        }
    }

    pub(crate) fn not_converged(message: impl Into<String>, estimate: f64, error: f64) -> Self {
        Error::Numerical {
            message: message.into(),
            estimate: Some(estimate),
            error: Some(error),
        }
    }
}
