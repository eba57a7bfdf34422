//! Exact rational scalars and dense linear algebra over the rationals.

mod echelon;
mod matrix;
pub mod rational;

pub use echelon::{solve, EchelonBasis};
pub use matrix::Matrix;
pub use rational::{format_rational, parse_rational, Rational};

use crate::error::Result;

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.mul(b)
}

pub fn mat_inverse(a: &Matrix) -> Result<Matrix> {
    a.inverse()
}

pub fn nullspace_basis(a: &Matrix) -> Vec<Vec<Rational>> {
    a.nullspace_basis()
}
