use thiserror::Error;

/// Errors produced by the potential, special-function and quadrature routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature exhausted its subdivision budget before meeting
    /// the requested tolerance.
    #[error(
        "quadrature did not converge: value {value:e}, error estimate {err_estimate:e} \
         after {subdivisions} subdivisions"
    )]
    NonConvergence {
        value: f64,
        err_estimate: f64,
        subdivisions: usize,
    },

    /// The integrand factor does not decay fast enough off the real axis for
    /// the contour identity to hold.
    #[error("decay condition violated: {0}")]
    DecayCondition(String),

    /// Invalid configuration (grids, tolerances, table construction).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_positive(name: &str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be positive and finite, got {value}")))
    }
}
