//! Exact computations in the algebra of Hodge classes on `A^e`, for `A` a very
//! general principally polarized abelian variety of dimension `n`.
//!
//! The core types are generic over the scalar ring; the aliases below fix
//! the exact rational field used throughout.

pub mod algebra;
pub mod cones;
pub mod error;
pub mod forms;
pub mod linalg;
pub mod rep2;
pub mod scalar;
pub mod schur;
pub mod serial;

pub use error::{Error, Result};
pub use scalar::Rational;

/// A class with rational coefficients.
pub type Class = algebra::ClassPoly<Rational>;
/// A rational symmetric matrix.
pub type RationalSymMatrix = linalg::SymMatrix<Rational>;
/// A rational invertible matrix acting on classes.
pub type RationalGL = algebra::GLMatrix<Rational>;
/// An exact differential form with Gaussian-rational coefficients.
pub type RationalForm = forms::Form<Rational>;

type Registry<K, V> = std::sync::OnceLock<std::sync::Mutex<std::collections::HashMap<K, std::sync::Arc<V>>>>;
