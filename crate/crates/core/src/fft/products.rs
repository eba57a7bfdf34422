use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::contraction::{generators, GeneratorId};
use crate::error::Result;
use crate::exact::EchelonBasis;
use crate::grp::GroupSpec;
use crate::poly::{exponent_vectors, Monomial, MonomialIndex, Polynomial, SpaceSignature};

/// A monomial in contraction symbols, e.g. `s(1,1)^2*s(1,2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorProduct {
    factors: Vec<(GeneratorId, u32)>,
}

impl GeneratorProduct {
    pub fn one() -> Self {
        Self {
            factors: Vec::new(),
        }
    }

    pub fn new(factors: impl IntoIterator<Item = (GeneratorId, u32)>) -> Self {
        Self {
            factors: factors.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }

    pub fn factors(&self) -> &[(GeneratorId, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of contraction factors counted with multiplicity.
    pub fn len(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn expand(&self, sig: SpaceSignature) -> Result<Polynomial> {
        let mut out = Polynomial::one(sig);
        for (g, e) in &self.factors {
            out = out.mul(&g.polynomial(sig)?.pow(*e))?;
        }
        Ok(out)
    }
}

impl fmt::Display for GeneratorProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{g}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All products of `d / 2` generators, in graded-lex order over the
/// generator list (first generator largest). Empty for odd `d`.
pub fn generator_products(gens: &[GeneratorId], d: u32) -> Vec<GeneratorProduct> {
    if !d.is_multiple_of(2) {
        return Vec::new();
    }
    exponent_vectors(gens.len(), d / 2)
        .into_iter()
        .map(|exps| GeneratorProduct::new(gens.iter().copied().zip(exps)))
        .collect()
}

/// Expands products, caching generator powers.
pub(crate) fn expand_products(
    products: &[GeneratorProduct],
    sig: SpaceSignature,
) -> Result<Vec<Polynomial>> {
    let mut powers: HashMap<(GeneratorId, u32), Polynomial> = HashMap::new();
    products
        .iter()
        .map(|p| {
            let mut out = Polynomial::one(sig);
            for &(g, e) in p.factors() {
                let factor = match powers.get(&(g, e)) {
                    Some(f) => f.clone(),
                    None => {
                        let f = g.polynomial(sig)?.pow(e);
                        powers.insert((g, e), f.clone());
                        f
                    }
                };
                out = out.mul(&factor)?;
            }
            Ok(out)
        })
        .collect()
}

/// Index over the union of the supports, in descending graded-lex order.
pub(crate) fn support_index(sig: SpaceSignature, polys: &[&Polynomial]) -> MonomialIndex {
    let support: BTreeSet<Monomial> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect();
    MonomialIndex::new(sig, support.into_iter().rev().collect())
}

/// Span of the contraction products of one degree.
#[derive(Debug, Clone)]
pub struct ProductSpan {
    pub degree: u32,
    pub generators: Vec<GeneratorId>,
    /// Every product of the right degree, before removing dependencies.
    pub products: Vec<GeneratorProduct>,
    /// The products kept as a basis: each one is independent of those
    /// before it in `products`.
    pub basis_products: Vec<GeneratorProduct>,
    pub basis: Vec<Polynomial>,
}

impl ProductSpan {
    pub fn dim_span(&self) -> usize {
        self.basis.len()
    }

    /// Number of products if the generators satisfied no relations.
    pub fn free_count(&self) -> usize {
        self.products.len()
    }
}

/// Expands the degree-`d` products of the group's contractions and keeps a
/// linearly independent subset spanning the same space.
pub fn generator_products_basis(
    spec: &GroupSpec,
    sig: SpaceSignature,
    d: u32,
) -> Result<ProductSpan> {
    let gens = generators(spec, sig)?;
    let products = generator_products(&gens, d);
    let expanded = expand_products(&products, sig)?;
    let index = support_index(sig, &expanded.iter().collect::<Vec<_>>());
    let mut echelon = EchelonBasis::new(index.len());
    let mut basis_products = Vec::new();
    let mut basis = Vec::new();
    for (prod, poly) in products.iter().zip(expanded) {
        if echelon.insert(&index.coords(&poly)?) {
            basis_products.push(prod.clone());
            basis.push(poly);
        }
    }
    Ok(ProductSpan {
        degree: d,
        generators: gens,
        products,
        basis_products,
        basis,
    })
}
