use thiserror::Error;

/// Failure modes shared by every numerical routine in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative or adaptive method ran out of budget before meeting its tolerance.
    #[error("{what} did not converge (value {value:e}, error estimate {error_estimate:e})")]
    NotConverged {
        what: String,
        value: f64,
        error_estimate: f64,
    },

    /// An integrand or intermediate quantity produced NaN or infinity.
    #[error("non-finite value encountered at {at:e}")]
    NonFinite { at: f64 },

    /// Two routes that must agree did not.
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
