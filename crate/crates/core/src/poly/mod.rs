//! Sparse multivariate polynomials over the coordinates of
//! `(V*)^k x V^m`, with grading, evaluation and linear substitution.

mod basis;
mod monomial;
mod polynomial;
mod signature;

pub use basis::{
    checked_monomial_basis, dim_homogeneous, monomial_basis, MonomialIndex, DEFAULT_DIM_CAP,
};
pub use monomial::{count_monomials, exponent_vectors, Monomial};
pub use polynomial::Polynomial;
pub use signature::{SpaceSignature, VarKind, VariableId};

use std::collections::BTreeMap;

use crate::error::Result;
use crate::exact::Matrix;

pub fn poly_add(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.add(g)
}

pub fn poly_mul(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.mul(g)
}

pub fn homogeneous_components(f: &Polynomial) -> BTreeMap<u32, Polynomial> {
    f.homogeneous_components()
}

pub fn substitute_linear(f: &Polynomial, maps: &[Matrix]) -> Result<Polynomial> {
    f.substitute_linear(maps)
}
