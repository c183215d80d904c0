use thiserror::Error;

use crate::model::ValidationReport;
use crate::order::SpoViolation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid problem:\n{0}")]
    InvalidProblem(ValidationReport),

    #[error("value/domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("index {index} out of range for relation over {n} elements")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("relation is not a strict partial order: {0}")]
    NotStrictPartialOrder(SpoViolation),

    #[error("ranking is not a permutation: {0}")]
    NotPermutation(String),

    #[error("unknown alternative {0:?}")]
    UnknownAlternative(String),

    #[error("unknown attribute {0:?}")]
    UnknownAttribute(String),

    #[error("attribute {0:?} is interval-valued and has no canonical score")]
    IntervalAttribute(String),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error(transparent)]
    Parse(#[from] crate::io::ParseError),
}
