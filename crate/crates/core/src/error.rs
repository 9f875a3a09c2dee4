use thiserror::Error;

use crate::hedging::DegeneracyReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("length mismatch for {what}: expected {expected}, found {found}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("singular denominator at atom {atom}: 1 + gamma = 0")]
    SingularDenominator { atom: usize },

    #[error("non-finite state at step {step}")]
    NonFinite { step: usize },

    #[error("degenerate hedging system: min eigenvalue {:.3e}, condition number {:.3e}", .0.min_eigenvalue, .0.condition_number)]
    Degenerate(DegeneracyReport),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
}

pub(crate) fn check_len(what: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            what,
            expected,
            found,
        })
    }
}
