use std::time::Instant;

use super::contraction::check_setting;
use super::kernel::{invariant_subspace_basis_with, KernelConfig};
use super::products::generator_products_basis;
use crate::error::{Error, Result};
use crate::grp::GroupSpec;
use crate::poly::SpaceSignature;

/// Outcome of checking one degree of a first fundamental theorem.
///
/// `dim_span <= dim_kernel <= dim_space` always holds. Equality of the
/// first two certifies that the contraction products span every invariant
/// of that degree; inequality is inconclusive, not a counterexample.
#[derive(Debug, Clone, PartialEq)]
pub struct CertReport {
    pub group: GroupSpec,
    pub sig: SpaceSignature,
    pub degree: u32,
    pub dim_space: usize,
    pub dim_kernel: usize,
    pub dim_span: usize,
    /// Number of contraction products before removing relations.
    pub free_count: usize,
    pub certified: bool,
    pub samples_used: usize,
    pub stabilized: bool,
    pub seed: u64,
    pub elapsed_ms: u128,
}

pub fn fft_verify(spec: &GroupSpec, sig: SpaceSignature, d: u32, seed: u64) -> Result<CertReport> {
    fft_verify_with(spec, sig, d, seed, &KernelConfig::default())
}

pub fn fft_verify_with(
    spec: &GroupSpec,
    sig: SpaceSignature,
    d: u32,
    seed: u64,
    config: &KernelConfig,
) -> Result<CertReport> {
    let start = Instant::now();
    check_setting(spec, sig)?;
    let kernel = invariant_subspace_basis_with(spec, sig, d, seed, config)?;
    let span = generator_products_basis(spec, sig, d)?;
    // products of invariants are invariant, hence in every sampled kernel
    for p in &span.basis {
        if !kernel.contains(p)? {
            return Err(Error::ContainmentViolated { degree: d });
        }
    }
    Ok(CertReport {
        group: spec.clone(),
        sig,
        degree: d,
        dim_space: kernel.dim_space,
        dim_kernel: kernel.dim_kernel(),
        dim_span: span.dim_span(),
        free_count: span.free_count(),
        certified: span.dim_span() == kernel.dim_kernel(),
        samples_used: kernel.samples_used,
        stabilized: kernel.stabilized,
        seed,
        elapsed_ms: start.elapsed().as_millis(),
    })
}
