//! Exact scalar arithmetic and exact linear algebra.
//!
//! Scalars are arbitrary-precision rationals ([`Rat`]), Gaussian
//! rationals ([`GaussQ`], satisfying i^2 = -1), or elements of a
//! finite-dimensional commutative Q-algebra presented by a
//! multiplication table ([`AlgebraSpec`] / [`AlgebraElement`]).
//! Number fields are represented structurally by their tables rather
//! than by minimal polynomials, so composita like Q(i, sqrt 2) need no
//! algebraic-number machinery.
//!
//! Linear algebra ([`Matrix`]) is plain rational Gaussian elimination;
//! the contract is exactness, not pivoting strategy.

mod algebra;
pub mod algebras;
mod matrix;
mod scalar;

pub use algebra::{restrict_scalars, AlgebraElement, AlgebraError, AlgebraLinearForm, AlgebraSpec};
pub use matrix::{signature_of_symmetric, Field, Matrix, MatrixError, Signature};
pub use scalar::{parse_rat, rat, rat_int, rat_string, rat_to_f64, GaussQ, Rat};
