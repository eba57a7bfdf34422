use std::collections::BTreeMap;

use num_traits::Zero;

use super::products::support_index;
use crate::act::ActionContext;
use crate::error::{Error, Result};
use crate::exact::{EchelonBasis, Matrix, Rational};
use crate::grp::{GroupElement, GroupSpec, Sampler};
use crate::poly::{
    checked_monomial_basis, dim_homogeneous, Monomial, MonomialIndex, Polynomial, SpaceSignature,
    DEFAULT_DIM_CAP,
};

/// Sampling policy for kernels of continuous groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelConfig {
    /// Never stop before this many samples.
    pub min_samples: usize,
    /// Stop once this many consecutive samples leave the kernel unchanged.
    pub patience: usize,
    /// Give up (reporting an unstable kernel) after this many samples.
    pub max_samples: usize,
    /// Largest allowed `dim P^d`.
    pub dim_cap: usize,
}

impl Default for KernelConfig {
    fn default() -> Self {
        Self {
            min_samples: 5,
            patience: 3,
            max_samples: 64,
            dim_cap: DEFAULT_DIM_CAP,
        }
    }
}

/// `P^d` intersected with the kernel of `g - id` over a set of elements.
///
/// For finite groups the elements are the group generators and the result
/// is exactly the space of invariants. For continuous groups it is an upper
/// bound that always contains the true invariants.
#[derive(Debug, Clone)]
pub struct InvariantSubspace {
    pub degree: u32,
    pub dim_space: usize,
    /// Reduced basis, sorted by leading monomial (largest first).
    pub basis: Vec<Polynomial>,
    pub samples_used: usize,
    /// Kernel dimension after each processed element.
    pub trace: Vec<usize>,
    /// Finite group, or the stopping rule fired before `max_samples`.
    pub stabilized: bool,
}

impl InvariantSubspace {
    pub fn dim_kernel(&self) -> usize {
        self.basis.len()
    }

    /// Exact membership test.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        let mut all: Vec<&Polynomial> = self.basis.iter().collect();
        all.push(f);
        let index = support_index(f.signature(), &all);
        let mut echelon = EchelonBasis::new(index.len());
        for b in &self.basis {
            echelon.insert(&index.coords(b)?);
        }
        Ok(echelon.contains(&index.coords(f)?))
    }
}

/// Monomials of one per-copy multidegree. The action preserves the degree in
/// each copy, so the kernel splits over these slices.
struct Slice {
    index: MonomialIndex,
    /// Rows of a reduced echelon basis of the current kernel; `None` while
    /// it is still the whole slice.
    kernel: Option<Vec<Vec<Rational>>>,
}

impl Slice {
    fn dim(&self) -> usize {
        self.kernel.as_ref().map_or(self.index.len(), Vec::len)
    }

    /// Column `j` of `g - id` restricted to this slice.
    fn moved(&self, ctx: &ActionContext, g: &GroupElement, j: usize) -> Result<Vec<Rational>> {
        let sig = ctx.signature();
        let m = Polynomial::monomial(
            sig,
            self.index.monomials()[j].clone(),
            crate::exact::rational::one(),
        );
        let image = ctx.act(g, &m)?;
        let mut col = self.index.coords(&image)?;
        col[j] -= crate::exact::rational::one();
        Ok(col)
    }

    fn restrict(&mut self, ctx: &ActionContext, g: &GroupElement) -> Result<()> {
        let d = self.index.len();
        if self.dim() == 0 {
            return Ok(());
        }
        let new_rows = match &self.kernel {
            None => {
                let mut w = Matrix::zeros(d, d);
                for j in 0..d {
                    for (i, e) in self.moved(ctx, g, j)?.into_iter().enumerate() {
                        w[(i, j)] = e;
                    }
                }
                w.nullspace_basis()
            }
            Some(rows) => {
                let r = rows.len();
                let mut columns: BTreeMap<usize, Vec<Rational>> = BTreeMap::new();
                for row in rows {
                    for (j, e) in row.iter().enumerate() {
                        if !e.is_zero() && !columns.contains_key(&j) {
                            columns.insert(j, self.moved(ctx, g, j)?);
                        }
                    }
                }
                // w[:, i] = (g - id) applied to kernel vector i
                let mut w = Matrix::zeros(d, r);
                for (i, row) in rows.iter().enumerate() {
                    for (j, col) in &columns {
                        let c = &row[*j];
                        if c.is_zero() {
                            continue;
                        }
                        for (k, e) in col.iter().enumerate() {
                            if !e.is_zero() {
                                w[(k, i)] += c * e;
                            }
                        }
                    }
                }
                w.nullspace_basis()
                    .into_iter()
                    .map(|coeffs| {
                        let mut v = vec![Rational::zero(); d];
                        for (c, row) in coeffs.iter().zip(rows) {
                            if c.is_zero() {
                                continue;
                            }
                            for (k, e) in row.iter().enumerate() {
                                if !e.is_zero() {
                                    v[k] += c * e;
                                }
                            }
                        }
                        v
                    })
                    .collect()
            }
        };
        let kernel = if new_rows.is_empty() {
            Vec::new()
        } else {
            let (rref, pivots) = Matrix::from_rows(new_rows)?.rref();
            (0..pivots.len()).map(|i| rref.row(i).to_vec()).collect()
        };
        self.kernel = Some(kernel);
        Ok(())
    }

    fn basis(&self) -> Vec<Polynomial> {
        match &self.kernel {
            None => self
                .index
                .monomials()
                .iter()
                .map(|m| {
                    Polynomial::monomial(
                        self.index.signature(),
                        m.clone(),
                        crate::exact::rational::one(),
                    )
                })
                .collect(),
            Some(rows) => rows.iter().map(|r| self.index.polynomial(r)).collect(),
        }
    }
}

fn slices(sig: SpaceSignature, d: u32, cap: usize) -> Result<Vec<Slice>> {
    let mut groups: BTreeMap<Vec<u32>, Vec<Monomial>> = BTreeMap::new();
    for m in checked_monomial_basis(sig, d, cap)? {
        groups
            .entry(m.block_degrees(sig.n(), sig.copies()))
            .or_default()
            .push(m);
    }
    Ok(groups
        .into_values()
        .map(|ms| Slice {
            index: MonomialIndex::new(sig, ms),
            kernel: None,
        })
        .collect())
}

pub fn invariant_subspace_basis(
    spec: &GroupSpec,
    sig: SpaceSignature,
    d: u32,
    seed: u64,
) -> Result<InvariantSubspace> {
    invariant_subspace_basis_with(spec, sig, d, seed, &KernelConfig::default())
}

/// Computes the invariant subspace of `P^d`. For a finite group the kernel
/// is exact; otherwise elements are drawn from the seeded sampler until the
/// kernel survives `patience` consecutive draws (and at least
/// `min_samples` were used).
pub fn invariant_subspace_basis_with(
    spec: &GroupSpec,
    sig: SpaceSignature,
    d: u32,
    seed: u64,
    config: &KernelConfig,
) -> Result<InvariantSubspace> {
    let ctx = ActionContext::new(spec.clone(), sig)?;
    let dim_space = dim_homogeneous(sig, d);
    if dim_space > config.dim_cap as u128 {
        return Err(Error::DimensionCapExceeded {
            dim: dim_space,
            cap: config.dim_cap,
        });
    }
    let mut slices = slices(sig, d, config.dim_cap)?;
    let total = |s: &[Slice]| s.iter().map(Slice::dim).sum::<usize>();

    let mut trace = Vec::new();
    let stabilized;
    match spec {
        GroupSpec::Finite(group) => {
            for gen in group.generators() {
                let g = GroupElement::new(gen.clone())?;
                for s in &mut slices {
                    s.restrict(&ctx, &g)?;
                }
                trace.push(total(&slices));
            }
            stabilized = true;
        }
        _ => {
            let mut sampler = Sampler::new(spec, seed);
            let mut unchanged = 0;
            let mut last = total(&slices);
            loop {
                if trace.len() >= config.max_samples {
                    stabilized = false;
                    break;
                }
                let g = sampler.draw()?;
                for s in &mut slices {
                    s.restrict(&ctx, &g)?;
                }
                let now = total(&slices);
                debug_assert!(now <= last);
                unchanged = if now == last { unchanged + 1 } else { 0 };
                last = now;
                trace.push(now);
                if now == 0 || (trace.len() >= config.min_samples && unchanged >= config.patience) {
                    stabilized = true;
                    break;
                }
            }
        }
    }

    let mut basis: Vec<Polynomial> = slices.iter().flat_map(Slice::basis).collect();
    basis.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    Ok(InvariantSubspace {
        degree: d,
        dim_space: dim_space as usize,
        basis,
        samples_used: trace.len(),
        trace,
        stabilized,
    })
}
