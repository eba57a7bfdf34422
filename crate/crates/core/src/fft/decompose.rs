use std::fmt;

use num_traits::{One, Signed, Zero};

use super::contraction::generators;
use super::products::{expand_products, generator_products, support_index, GeneratorProduct};
use crate::act::{ActionContext, DEFAULT_SAMPLES};
use crate::error::{Error, Result};
use crate::exact::{solve, EchelonBasis, Matrix, Rational};
use crate::grp::GroupSpec;
use crate::poly::{Polynomial, SpaceSignature};

/// Seed used for the invariance pre-check of [`decompose_in_generators`].
pub const DECOMPOSE_SEED: u64 = 0;

/// A polynomial in contraction symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorExpansion {
    pub terms: Vec<(GeneratorProduct, Rational)>,
}

impl GeneratorExpansion {
    /// Substitutes the contractions back in.
    pub fn expand(&self, sig: SpaceSignature) -> Result<Polynomial> {
        let mut out = Polynomial::zero(sig);
        for (p, c) in &self.terms {
            out = out.add(&p.expand(sig)?.scale(c))?;
        }
        Ok(out)
    }
}

impl fmt::Display for GeneratorExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            match (abs.is_one(), p.is_one()) {
                (true, _) => write!(f, "{p}")?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{p}")?,
            }
        }
        Ok(())
    }
}

/// Writes a homogeneous invariant as a polynomial in the contractions.
///
/// Among all solutions the one supported on the earliest independent
/// products (graded-lex order over the generators) is returned, so the
/// answer is unique even when the contractions satisfy relations.
pub fn decompose_in_generators(
    spec: &GroupSpec,
    sig: SpaceSignature,
    f: &Polynomial,
) -> Result<GeneratorExpansion> {
    let gens = generators(spec, sig)?;
    if f.signature() != sig {
        return Err(Error::SignatureMismatch);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let ctx = ActionContext::new(spec.clone(), sig)?;
    if !ctx.is_invariant(f, DEFAULT_SAMPLES, DECOMPOSE_SEED)? {
        return Err(Error::NotInvariant);
    }
    let Some(d) = f.degree() else {
        return Ok(GeneratorExpansion { terms: Vec::new() });
    };
    let products = generator_products(&gens, d);
    let expanded = expand_products(&products, sig)?;

    let mut all: Vec<&Polynomial> = expanded.iter().collect();
    all.push(f);
    let index = support_index(sig, &all);
    let target = index.coords(f)?;

    let mut columns = Matrix::zeros(index.len(), products.len());
    for (j, p) in expanded.iter().enumerate() {
        for (i, e) in index.coords(p)?.into_iter().enumerate() {
            columns[(i, j)] = e;
        }
    }
    match solve(&columns, &target) {
        Some(x) => Ok(GeneratorExpansion {
            terms: products
                .into_iter()
                .zip(x)
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }),
        None => {
            let mut span = EchelonBasis::new(index.len());
            for p in &expanded {
                span.insert(&index.coords(p)?);
            }
            let residual = span.reduce(&target).iter().filter(|e| !e.is_zero()).count();
            Err(Error::NotInSpan { residual })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;
    use crate::poly::VariableId;

    fn plane() -> (GroupSpec, SpaceSignature) {
        (
            GroupSpec::orthogonal(2).unwrap(),
            SpaceSignature::vectors_only(2, 1).unwrap(),
        )
    }

    fn norm(sig: SpaceSignature) -> Polynomial {
        let x = Polynomial::var(sig, VariableId::vector(1, 1)).unwrap();
        let y = Polynomial::var(sig, VariableId::vector(1, 2)).unwrap();
        x.pow(2).add(&y.pow(2)).unwrap()
    }

    #[test]
    fn generator_itself_and_its_square() {
        let (spec, sig) = plane();
        let e = decompose_in_generators(&spec, sig, &norm(sig)).unwrap();
        assert_eq!(e.to_string(), "s(1,1)");
        let e = decompose_in_generators(&spec, sig, &norm(sig).pow(2)).unwrap();
        assert_eq!(e.to_string(), "s(1,1)^2");
        assert_eq!(e.expand(sig).unwrap(), norm(sig).pow(2));
    }

    #[test]
    fn rejects_non_invariants_and_inhomogeneous_input() {
        let (spec, sig) = plane();
        let x = Polynomial::var(sig, VariableId::vector(1, 1)).unwrap();
        assert_eq!(
            decompose_in_generators(&spec, sig, &x),
            Err(Error::NotInvariant)
        );
        let mixed = norm(sig).add(&Polynomial::one(sig)).unwrap();
        assert_eq!(
            decompose_in_generators(&spec, sig, &mixed),
            Err(Error::NotHomogeneous)
        );
    }

    #[test]
    fn constants_and_zero() {
        let (spec, sig) = plane();
        let c = Polynomial::constant(sig, int(3));
        assert_eq!(
            decompose_in_generators(&spec, sig, &c).unwrap().to_string(),
            "3"
        );
        let z = Polynomial::zero(sig);
        assert!(decompose_in_generators(&spec, sig, &z)
            .unwrap()
            .terms
            .is_empty());
    }

    #[test]
    fn relation_heavy_case_reconstructs() {
        // 3 vectors in the plane: the Gram determinant is zero as a polynomial,
        // so solutions are not unique; the canonical one must still expand back
        let spec = GroupSpec::orthogonal(2).unwrap();
        let sig = SpaceSignature::vectors_only(2, 3).unwrap();
        let s = |i, j| {
            super::super::contraction::contraction(
                super::super::contraction::ContractionFamily::Orthogonal,
                i,
                j,
                sig,
            )
            .unwrap()
        };
        let f = s(1, 1)
            .mul(&s(2, 2))
            .unwrap()
            .mul(&s(3, 3))
            .unwrap()
            .sub(&s(1, 2).mul(&s(2, 3)).unwrap().mul(&s(1, 3)).unwrap())
            .unwrap();
        let e = decompose_in_generators(&spec, sig, &f).unwrap();
        assert_eq!(e.expand(sig).unwrap(), f);
        assert_eq!(decompose_in_generators(&spec, sig, &f).unwrap(), e);
    }
}
