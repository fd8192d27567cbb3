use thiserror::Error;

/// Errors produced by the exact-arithmetic layer, group construction and the
/// generator pipeline. Variants are grouped by the stage that raises them so a
/// front end can map them onto exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("value is not an integer: {0}")]
    NonInteger(String),

    #[error("parse error at byte {pos}: expected {expected}")]
    Parse { pos: usize, expected: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("group not finite within bound {0}")]
    NotFiniteWithinBound(usize),

    #[error("sigma ill-defined: the same element was reached with two distinct grading values")]
    SigmaIllDefined,

    #[error("sigma not an epimorphism: not every residue class is attained")]
    SigmaNotEpimorphism,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("validation failure: {0}")]
    Validation(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
