use super::contraction::check_setting;
use super::kernel::{invariant_subspace_basis_with, KernelConfig};
use super::products::{generator_products_basis, support_index};
use crate::error::{Error, Result};
use crate::exact::EchelonBasis;
use crate::grp::GroupSpec;
use crate::poly::{Polynomial, SpaceSignature};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStep {
    pub degree: u32,
    pub dim_kernel: usize,
    /// Dimension spanned by products of generators of lower degree.
    pub dim_products: usize,
    pub new_generators: usize,
}

/// Degrees of a minimal homogeneous generating set of the invariants, up
/// to a degree bound.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorDegrees {
    /// Sorted, with multiplicity.
    pub degrees: Vec<u32>,
    pub generators: Vec<Polynomial>,
    pub steps: Vec<DegreeStep>,
}

pub fn minimal_generator_degrees(
    spec: &GroupSpec,
    sig: SpaceSignature,
    max_degree: u32,
    seed: u64,
) -> Result<GeneratorDegrees> {
    minimal_generator_degrees_with(spec, sig, max_degree, seed, &KernelConfig::default())
}

/// Builds a minimal generating set degree by degree: at degree `d`, the
/// new generators complete the products of earlier generators to a basis
/// of the degree-`d` invariants.
///
/// For continuous groups every sampled kernel must be certified by the
/// contraction span; otherwise the count could be too large and the call
/// fails with [`Error::Inconclusive`].
pub fn minimal_generator_degrees_with(
    spec: &GroupSpec,
    sig: SpaceSignature,
    max_degree: u32,
    seed: u64,
    config: &KernelConfig,
) -> Result<GeneratorDegrees> {
    if max_degree == 0 {
        return Err(Error::InvalidSignature(
            "degree bound must be at least 1".into(),
        ));
    }
    let finite = spec.as_finite().is_some();
    if !finite {
        check_setting(spec, sig)?;
    }
    let mut found: Vec<(u32, Polynomial)> = Vec::new();
    let mut steps = Vec::new();
    for d in 1..=max_degree {
        let kernel = invariant_subspace_basis_with(spec, sig, d, seed, config)?;
        if !finite {
            let dim_span = generator_products_basis(spec, sig, d)?.dim_span();
            if !kernel.stabilized || dim_span != kernel.dim_kernel() {
                return Err(Error::Inconclusive {
                    degree: d,
                    dim_kernel: kernel.dim_kernel(),
                    dim_span,
                });
            }
        }
        let products = products_of_degree(&found, d, sig)?;
        let all: Vec<&Polynomial> = kernel.basis.iter().chain(&products).collect();
        let index = support_index(sig, &all);
        let mut echelon = EchelonBasis::new(index.len());
        for p in &products {
            let v = index.coords(p)?;
            if !kernel.contains(p)? {
                return Err(Error::ContainmentViolated { degree: d });
            }
            echelon.insert(&v);
        }
        let dim_products = echelon.rank();
        let mut new_generators = 0;
        for b in &kernel.basis {
            if echelon.insert(&index.coords(b)?) {
                found.push((d, b.clone()));
                new_generators += 1;
            }
        }
        steps.push(DegreeStep {
            degree: d,
            dim_kernel: kernel.dim_kernel(),
            dim_products,
            new_generators,
        });
    }
    Ok(GeneratorDegrees {
        degrees: found.iter().map(|(d, _)| *d).collect(),
        generators: found.into_iter().map(|(_, p)| p).collect(),
        steps,
    })
}

/// Products of at least two of the `found` generators with total degree `d`.
fn products_of_degree(
    found: &[(u32, Polynomial)],
    d: u32,
    sig: SpaceSignature,
) -> Result<Vec<Polynomial>> {
    fn go(
        found: &[(u32, Polynomial)],
        start: usize,
        left: u32,
        factors: usize,
        acc: &Polynomial,
        out: &mut Vec<Polynomial>,
    ) -> Result<()> {
        if left == 0 {
            if factors >= 2 {
                out.push(acc.clone());
            }
            return Ok(());
        }
        for i in start..found.len() {
            let (deg, g) = &found[i];
            if *deg <= left {
                go(found, i, left - deg, factors + 1, &acc.mul(g)?, out)?;
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    go(found, 0, d, 0, &Polynomial::one(sig), &mut out)?;
    Ok(out)
}
