use std::collections::HashMap;

use num_traits::Zero;

use super::monomial::{count_monomials, exponent_vectors, Monomial};
use super::polynomial::Polynomial;
use super::signature::SpaceSignature;
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Largest graded piece the library agrees to work with by default.
pub const DEFAULT_DIM_CAP: usize = 200_000;

/// `dim P^d` for the signature, saturating.
pub fn dim_homogeneous(sig: SpaceSignature, d: u32) -> u128 {
    count_monomials(sig.num_vars(), d)
}

/// All monomials of total degree `d`, in descending graded-lex order.
pub fn monomial_basis(sig: SpaceSignature, d: u32) -> Vec<Monomial> {
    exponent_vectors(sig.num_vars(), d)
        .iter()
        .map(|e| Monomial::from_exponents(e))
        .collect()
}

/// Like [`monomial_basis`] but refuses pieces larger than `cap`.
pub fn checked_monomial_basis(sig: SpaceSignature, d: u32, cap: usize) -> Result<Vec<Monomial>> {
    let dim = dim_homogeneous(sig, d);
    if dim > cap as u128 {
        return Err(Error::DimensionCapExceeded { dim, cap });
    }
    Ok(monomial_basis(sig, d))
}

/// Coordinates on a finite list of monomials (normally a graded piece or a
/// multidegree slice of one).
#[derive(Debug, Clone)]
pub struct MonomialIndex {
    sig: SpaceSignature,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialIndex {
    pub fn new(sig: SpaceSignature, monomials: Vec<Monomial>) -> Self {
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Self {
            sig,
            monomials,
            index,
        }
    }

    /// The whole piece `P^d`, subject to the dimension cap.
    pub fn degree(sig: SpaceSignature, d: u32, cap: usize) -> Result<Self> {
        Ok(Self::new(sig, checked_monomial_basis(sig, d, cap)?))
    }

    pub fn signature(&self) -> SpaceSignature {
        self.sig
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinate vector of `f`; fails if `f` has a term outside the index.
    pub fn coords(&self, f: &Polynomial) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.len()];
        for (m, c) in f.terms() {
            let i = self.position(m).ok_or(Error::NotHomogeneous)?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn polynomial(&self, coords: &[Rational]) -> Polynomial {
        Polynomial::from_terms(
            self.sig,
            self.monomials
                .iter()
                .zip(coords)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;
    use proptest::prelude::*;

    #[test]
    fn small_bases() {
        let two = SpaceSignature::new(2, 0, 1).unwrap();
        let b = monomial_basis(two, 2);
        assert_eq!(
            b,
            vec![
                Monomial::from_exponents(&[2, 0]),
                Monomial::from_exponents(&[1, 1]),
                Monomial::from_exponents(&[0, 2]),
            ]
        );
        let four = SpaceSignature::new(2, 0, 2).unwrap();
        assert_eq!(monomial_basis(four, 2).len(), 10);
        assert_eq!(monomial_basis(four, 0), vec![Monomial::one()]);
    }

    #[test]
    fn basis_is_strictly_descending() {
        let sig = SpaceSignature::new(3, 0, 1).unwrap();
        let b = monomial_basis(sig, 3);
        assert!(b.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn cap_guard() {
        let sig = SpaceSignature::new(4, 0, 5).unwrap();
        assert!(matches!(
            checked_monomial_basis(sig, 6, 1000),
            Err(Error::DimensionCapExceeded { .. })
        ));
        assert_eq!(checked_monomial_basis(sig, 1, 1000).unwrap().len(), 20);
    }

    #[test]
    fn coordinates_round_trip() {
        let sig = SpaceSignature::new(2, 0, 1).unwrap();
        let idx = MonomialIndex::degree(sig, 2, DEFAULT_DIM_CAP).unwrap();
        let v = vec![int(1), int(0), int(-2)];
        let f = idx.polynomial(&v);
        assert_eq!(idx.coords(&f).unwrap(), v);
        assert!(idx.coords(&Polynomial::one(sig)).is_err());
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]
        #[test]
        fn stars_and_bars((vars, d) in (1usize..=12, 0u32..=12).prop_filter("N*d <= 24", |(n, d)| n * (*d as usize) <= 24)) {
            let sig = SpaceSignature::new(vars, 0, 1).unwrap();
            let expected = binomial(vars as u64 + d as u64 - 1, d as u64);
            prop_assert_eq!(monomial_basis(sig, d).len() as u64, expected);
            prop_assert_eq!(dim_homogeneous(sig, d), expected as u128);
        }
    }
}
