//! Exact arithmetic: scalar fields, polynomials and Gröbner bases.

pub mod field;
pub mod groebner;
pub mod poly;

use thiserror::Error;

pub use field::{rational_token, Field, FieldOp, FieldTag, GaussianRational, GridHeight, Scalar};
pub use groebner::{buchberger, consistent_over_closure, Budget, Consistency, GroebnerBasis, DEFAULT_BUDGET};
pub use poly::{Monomial, MultiPoly, PolySystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("invalid scalar: division by zero")]
    InvalidScalar,
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: FieldTag, found: FieldTag },
    #[error("reduction budget of {limit} steps exceeded")]
    BudgetExceeded { limit: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}
