use thiserror::Error;

use crate::graph::GraphError;
use crate::numeric::Rational;

/// Errors raised by the minor search pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MinorError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("insufficient density: average degree {actual} is below the required {required}")]
    InsufficientDensity { required: Rational, actual: Rational },
    #[error("strict mode: g(t) = {g} is below max(t, 2t/epsilon) = {needed}")]
    StrictPrecondition { g: Rational, needed: Rational },
    #[error("no K_t minor found: {0}")]
    NotFound(String),
    #[error("guard violated: {0}")]
    GuardViolation(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

/// Returns `InternalInvariantViolation` from the enclosing function when
/// the condition does not hold.
macro_rules! invariant {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::MinorError::InternalInvariantViolation(format!($($arg)+)));
        }
    };
}
pub(crate) use invariant;
