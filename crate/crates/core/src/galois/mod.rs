//! Finite fields GF(q) and GF(q^m), Frobenius powers, primitive elements and
//! dense linear algebra over either field.

mod arith;
mod base;
mod ext;
mod matrix;
pub(crate) mod poly;

pub use arith::FieldArith;
pub use base::{BaseField, PrimeField};
pub use ext::{Field, FieldDescriptor, FieldElement};
pub use matrix::{solve_affine, AffineSpace, Echelon, Matrix};
