use thiserror::Error;

use crate::enumerate::EnumerationError;
use crate::perm::PermError;
use crate::words::{ParseError, PresentationError, WordError};
use crate::zlin::ZlinError;

/// Errors from the high-level constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Zlin(#[from] ZlinError),
    #[error("group of order {order} exceeds the model budget of {budget}")]
    ModelTooLarge { order: usize, budget: usize },
    #[error("{what}: {needed} exceeds the budget of {budget}")]
    Budget {
        what: &'static str,
        needed: u128,
        budget: u128,
    },
    #[error("construction check failed: {0}")]
    Construction(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("models do not match")]
    ModelMismatch,
}
