//! Exact computation of the largest dimensions of abelian subalgebras (α) and
//! abelian ideals (β) of finite-dimensional Lie algebras over ℚ and ℚ(i).

pub mod arith;
pub mod construct;
pub mod corpus;
pub mod engine;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod selftest;

pub use arith::{Field, FieldTag, GaussianRational, Scalar};
pub use error::{Error, Result};
pub use lie::LieAlgebra;
pub use linalg::{Matrix, Subspace};

/// Rational numbers.
pub type Q = num_rational::BigRational;
/// Gaussian rationals `a + b i`.
pub type QI = GaussianRational;

pub type LieAlgebraQ = LieAlgebra<Q>;
pub type LieAlgebraQI = LieAlgebra<QI>;
