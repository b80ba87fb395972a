use alloc::string::String;

/// Errors reported by the numerical routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Argument outside the domain of the function (pole, non-positive
    /// distance, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// Parameter combination not supported by the requested formula.
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// The result does not fit in an `f64`.
    #[error("overflow: {0}")]
    Overflow(String),
    /// An iterative method stopped before reaching its tolerance. The best
    /// estimate and its error estimate are carried along.
    #[error("accuracy target not reached: estimate {estimate:e}, error estimate {error:e}")]
    Accuracy {
        /// Best available estimate.
        estimate: f64,
        /// Absolute error estimate of `estimate`.
        error: f64,
    },
    /// A contour integrand grows instead of decaying along the line.
    #[error("contour integrand does not decay along the integration line")]
    Divergence,
}

/// Crate result alias.
pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn parameter(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}
