use thiserror::Error;

/// Errors raised by the evaluation, coefficient and zero-finding routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the routine.
    #[error("domain error in {routine}: {detail}")]
    Domain {
        routine: &'static str,
        detail: String,
    },

    /// An iteration or series failed to converge within its budget.
    #[error("{routine} did not converge after {iterations} iterations")]
    NonConvergence {
        routine: &'static str,
        iterations: usize,
    },

    /// A logarithmic denominator of the correction terms is not positive.
    #[error("degenerate correction denominator {denominator}")]
    Degenerate { denominator: f64 },

    /// The leading approximation is below the validity threshold of the expansion.
    #[error("asymptotics unreliable: xi = {xi} does not exceed threshold {threshold}")]
    Unreliable { xi: f64, threshold: f64 },

    /// No sign change could be isolated around the estimate.
    #[error("bracketing failed on [{lo}, {hi}]: {reason}")]
    Bracketing { lo: f64, hi: f64, reason: String },
}

impl Error {
    pub(crate) fn domain(routine: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            routine,
            detail: detail.into(),
        }
    }

    /// Process exit code associated with this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain { .. } | Error::Degenerate { .. } | Error::Unreliable { .. } => 2,
            Error::NonConvergence { .. } | Error::Bracketing { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
