//! The action of a matrix group on polynomial functions, invariance tests
//! and the Reynolds projection for finite groups.
//!
//! For `g` in the group, `(g . f)(x, v) = f(x g, g^{-1} v)`: vector copies
//! are pulled back through `g^{-1}` and covector copies (rows `x`) through
//! right multiplication by `g`. This is a left action and fixes every
//! pairing `<x_i, v_j>`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational};
use crate::grp::{GroupElement, GroupSpec, Sampler};
use crate::poly::{Polynomial, SpaceSignature};

/// Number of sampled elements used by invariance checks unless told
/// otherwise.
pub const DEFAULT_SAMPLES: usize = 8;

#[derive(Debug, Clone)]
pub struct ActionContext {
    spec: GroupSpec,
    sig: SpaceSignature,
}

impl ActionContext {
    pub fn new(spec: GroupSpec, sig: SpaceSignature) -> Result<Self> {
        if spec.n() != sig.n() {
            return Err(Error::InvalidSignature(format!(
                "group acts on dimension {} but signature has n = {}",
                spec.n(),
                sig.n()
            )));
        }
        Ok(Self { spec, sig })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn signature(&self) -> SpaceSignature {
        self.sig
    }

    /// Per-copy substitution matrices realising `g . f`.
    pub fn substitution(&self, g: &GroupElement) -> Vec<Matrix> {
        let cov = g.matrix().transpose();
        let vec = g.inverse_matrix().clone();
        std::iter::repeat_n(cov, self.sig.covectors())
            .chain(std::iter::repeat_n(vec, self.sig.vectors()))
            .collect()
    }

    pub fn act(&self, g: &GroupElement, f: &Polynomial) -> Result<Polynomial> {
        if f.signature() != self.sig {
            return Err(Error::SignatureMismatch);
        }
        let n = self.sig.n();
        if g.matrix().rows() != n || g.matrix().cols() != n {
            return Err(Error::DimensionMismatch {
                op: "act",
                left_rows: g.matrix().rows(),
                left_cols: g.matrix().cols(),
                right_rows: n,
                right_cols: n,
            });
        }
        f.substitute_linear(&self.substitution(g))
    }

    /// Elements to test against: the whole group when finite, otherwise the
    /// first `samples` draws of the seeded stream.
    pub fn test_elements(&self, samples: usize, seed: u64) -> Result<Vec<GroupElement>> {
        match &self.spec {
            GroupSpec::Finite(g) => Ok(g.elements().to_vec()),
            spec => Sampler::new(spec, seed).take(samples.max(1)).collect(),
        }
    }

    /// `true` when no tested element moves `f`. Exact for finite groups;
    /// for continuous groups a `false` is definitive and a `true` means no
    /// counterexample among the sampled elements.
    pub fn is_invariant(&self, f: &Polynomial, samples: usize, seed: u64) -> Result<bool> {
        for g in self.test_elements(samples, seed)? {
            if &self.act(&g, f)? != f {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The group average `(1/|G|) sum_g g . f`.
    pub fn reynolds(&self, f: &Polynomial) -> Result<Polynomial> {
        let group = self.spec.as_finite().ok_or(Error::NotFinite)?;
        let mut sum = Polynomial::zero(self.sig);
        for g in group.elements() {
            sum = sum.add(&self.act(g, f)?)?;
        }
        let order = Rational::from_integer(BigInt::from(group.order()));
        Ok(sum.scale(&order.recip()))
    }
}

pub fn act(ctx: &ActionContext, g: &GroupElement, f: &Polynomial) -> Result<Polynomial> {
    ctx.act(g, f)
}

pub fn is_invariant(
    ctx: &ActionContext,
    f: &Polynomial,
    samples: usize,
    seed: u64,
) -> Result<bool> {
    ctx.is_invariant(f, samples, seed)
}

pub fn reynolds(ctx: &ActionContext, f: &Polynomial) -> Result<Polynomial> {
    ctx.reynolds(f)
}
