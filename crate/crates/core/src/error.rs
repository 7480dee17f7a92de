use alloc::vec::Vec;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Failures raised by the operators, projections, line search and solvers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A vector or matrix did not have the expected length.
    DimensionMismatch { expected: usize, found: usize },
    /// A precondition on an argument was violated.
    ContractViolation(&'static str),
    /// NaN or infinity appeared in a computed quantity.
    NonFinite(&'static str),
    /// Hildreth's method hit its sweep cap.
    ProjectionNotConverged {
        sweeps: usize,
        displacement: f64,
        last: Vec<f64>,
    },
    /// A constraint row is identically zero with a negative right-hand side.
    Infeasible,
    /// The Armijo inner loop exhausted `j_max` trials.
    LineSearchExhausted { j_max: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::ContractViolation(what) => write!(f, "contract violation: {what}"),
            Error::NonFinite(what) => write!(f, "non-finite value in {what}"),
            Error::ProjectionNotConverged {
                sweeps,
                displacement,
                ..
            } => write!(
                f,
                "projection did not converge after {sweeps} sweeps (last displacement {displacement:e})"
            ),
            Error::Infeasible => write!(f, "constraint set is empty"),
            Error::LineSearchExhausted { j_max } => {
                write!(f, "line search exhausted {j_max} trials without acceptance")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

pub(crate) fn check_finite(v: &[f64], what: &'static str) -> Result<()> {
    if v.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}
