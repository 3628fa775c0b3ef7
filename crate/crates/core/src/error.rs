use thiserror::Error;

use crate::arith::ArithError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),

    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("subspace is not a subalgebra")]
    NotSubalgebra,

    #[error("change-of-basis matrix is singular")]
    SingularTransform,

    #[error("Jacobi identity fails for basis triple ({i},{j},{k}): sum = {sum}")]
    Jacobi { i: usize, j: usize, k: usize, sum: String },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("unknown simple type {0}")]
    UnknownType(String),

    #[error("unknown algebra family `{0}`")]
    UnknownFamily(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("maximality violated: {0}")]
    MaximalityViolated(String),

    #[error("undecided: {0}")]
    Undecided(String),

    #[error("internal soundness violation: {0}")]
    Soundness(String),
}
