//! Contraction generators of the first fundamental theorems for GL(n),
//! O(n) and Sp(n), graded invariant subspaces, and the exact certificate
//! that the contractions span them.
//!
//! At each degree `d` three spaces are nested:
//!
//! ```text
//! span(contraction products) ⊆ invariants ⊆ kernel of (g - id) over samples
//! ```
//!
//! The first inclusion holds because every contraction is invariant; the
//! second because sampled elements belong to the group. When the outer two
//! have equal dimension all three coincide, which certifies the degree with
//! no probabilistic argument.

mod certify;
mod contraction;
mod decompose;
mod degrees;
mod kernel;
mod products;

pub use certify::{fft_verify, fft_verify_with, CertReport};
pub use contraction::{check_setting, contraction, generators, ContractionFamily, GeneratorId};
pub use decompose::{decompose_in_generators, GeneratorExpansion, DECOMPOSE_SEED};
pub use degrees::{
    minimal_generator_degrees, minimal_generator_degrees_with, DegreeStep, GeneratorDegrees,
};
pub use kernel::{
    invariant_subspace_basis, invariant_subspace_basis_with, InvariantSubspace, KernelConfig,
};
pub use products::{generator_products, generator_products_basis, GeneratorProduct, ProductSpan};
