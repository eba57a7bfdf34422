use std::fmt;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::grp::{make_j, GroupSpec};
use crate::poly::{Monomial, Polynomial, SpaceSignature, VariableId};

/// The three kinds of degree-two contraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ContractionFamily {
    /// `<u_i, x_j>`: covector copy `i` against vector copy `j`.
    Dual,
    /// `(x_i, x_j) = sum_a x_{i,a} x_{j,a}`.
    Orthogonal,
    /// `(x_i, J x_j)`.
    Symplectic,
}

impl ContractionFamily {
    pub fn for_group(spec: &GroupSpec) -> Result<Self> {
        match spec {
            GroupSpec::General { .. } => Ok(Self::Dual),
            GroupSpec::Orthogonal { .. } => Ok(Self::Orthogonal),
            GroupSpec::Symplectic { .. } => Ok(Self::Symplectic),
            GroupSpec::Finite(_) => Err(Error::InvalidGroup(
                "finite groups have no contraction generators".into(),
            )),
        }
    }

    /// Name of the expression shorthand.
    pub fn symbol(self) -> char {
        match self {
            Self::Dual => 'c',
            Self::Orthogonal => 's',
            Self::Symplectic => 'w',
        }
    }
}

/// One contraction in a generating set, with the index ranges of the
/// corresponding first fundamental theorem: `i <= k, j <= m` for the dual
/// pairing, `i <= j` for the orthogonal form, `i < j` for the symplectic one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorId {
    pub family: ContractionFamily,
    pub i: usize,
    pub j: usize,
}

impl GeneratorId {
    pub fn new(family: ContractionFamily, i: usize, j: usize, sig: SpaceSignature) -> Result<Self> {
        check_indices(family, i, j, sig)?;
        let ordered = match family {
            ContractionFamily::Dual => true,
            ContractionFamily::Orthogonal => i <= j,
            ContractionFamily::Symplectic => i < j,
        };
        if !ordered {
            return Err(Error::IndexOutOfRange(format!(
                "{}({i},{j}) is not a generator index",
                family.symbol()
            )));
        }
        Ok(Self { family, i, j })
    }

    pub fn polynomial(&self, sig: SpaceSignature) -> Result<Polynomial> {
        contraction(self.family, self.i, self.j, sig)
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.family.symbol(), self.i, self.j)
    }
}

fn check_indices(family: ContractionFamily, i: usize, j: usize, sig: SpaceSignature) -> Result<()> {
    let (left, right) = match family {
        ContractionFamily::Dual => (sig.covectors(), sig.vectors()),
        _ => (sig.vectors(), sig.vectors()),
    };
    if i == 0 || i > left || j == 0 || j > right {
        return Err(Error::IndexOutOfRange(format!(
            "{}({i},{j}) with {} covector and {} vector copies",
            family.symbol(),
            sig.covectors(),
            sig.vectors()
        )));
    }
    if family == ContractionFamily::Symplectic && !sig.n().is_multiple_of(2) {
        return Err(Error::OddSymplecticDimension(sig.n()));
    }
    Ok(())
}

/// Expands a contraction of two copies. Any index pair in range is
/// accepted, so `Symplectic` with `i >= j` gives the antisymmetric partner
/// (or zero) and `Orthogonal` is symmetric in `i, j`.
pub fn contraction(
    family: ContractionFamily,
    i: usize,
    j: usize,
    sig: SpaceSignature,
) -> Result<Polynomial> {
    check_indices(family, i, j, sig)?;
    let n = sig.n();
    let mut terms: Vec<(Monomial, Rational)> = Vec::new();
    let pair = |a: VariableId, b: VariableId| -> Result<Monomial> {
        Ok(Monomial::from_powers([
            (sig.index_of(a)?, 1),
            (sig.index_of(b)?, 1),
        ]))
    };
    match family {
        ContractionFamily::Dual => {
            for a in 1..=n {
                terms.push((
                    pair(VariableId::covector(i, a), VariableId::vector(j, a))?,
                    crate::exact::rational::one(),
                ));
            }
        }
        ContractionFamily::Orthogonal => {
            for a in 1..=n {
                terms.push((
                    pair(VariableId::vector(i, a), VariableId::vector(j, a))?,
                    crate::exact::rational::one(),
                ));
            }
        }
        ContractionFamily::Symplectic => {
            let jm = make_j(n)?;
            for a in 1..=n {
                for b in 1..=n {
                    let e = &jm[(a - 1, b - 1)];
                    if *e != crate::exact::rational::zero() {
                        terms.push((
                            pair(VariableId::vector(i, a), VariableId::vector(j, b))?,
                            e.clone(),
                        ));
                    }
                }
            }
        }
    }
    Ok(Polynomial::from_terms(sig, terms))
}

/// Checks that `sig` is a setting the first fundamental theorem of `spec`
/// talks about: matching `n`, and vector copies only for O(n) and Sp(n).
pub fn check_setting(spec: &GroupSpec, sig: SpaceSignature) -> Result<ContractionFamily> {
    let family = ContractionFamily::for_group(spec)?;
    if spec.n() != sig.n() {
        return Err(Error::InvalidSignature(format!(
            "group acts on dimension {} but signature has n = {}",
            spec.n(),
            sig.n()
        )));
    }
    if family != ContractionFamily::Dual && sig.covectors() != 0 {
        return Err(Error::InvalidSignature(format!(
            "{spec} is checked on vector copies only (got {} covector copies)",
            sig.covectors()
        )));
    }
    Ok(family)
}

/// The contraction generators of the group's first fundamental theorem, in
/// lexicographic `(i, j)` order.
pub fn generators(spec: &GroupSpec, sig: SpaceSignature) -> Result<Vec<GeneratorId>> {
    let family = check_setting(spec, sig)?;
    let m = sig.vectors();
    let pairs: Vec<(usize, usize)> = match family {
        ContractionFamily::Dual => (1..=sig.covectors())
            .flat_map(|i| (1..=m).map(move |j| (i, j)))
            .collect(),
        ContractionFamily::Orthogonal => {
            (1..=m).flat_map(|i| (i..=m).map(move |j| (i, j))).collect()
        }
        ContractionFamily::Symplectic => (1..=m)
            .flat_map(|i| (i + 1..=m).map(move |j| (i, j)))
            .collect(),
    };
    Ok(pairs
        .into_iter()
        .map(|(i, j)| GeneratorId { family, i, j })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn xv(sig: SpaceSignature, c: usize, a: usize) -> Polynomial {
        Polynomial::var(sig, VariableId::vector(c, a)).unwrap()
    }

    #[test]
    fn dual_pairing_in_one_dimension() {
        let sig = SpaceSignature::new(1, 1, 1).unwrap();
        let u = Polynomial::var(sig, VariableId::covector(1, 1)).unwrap();
        assert_eq!(
            contraction(ContractionFamily::Dual, 1, 1, sig).unwrap(),
            u.mul(&xv(sig, 1, 1)).unwrap()
        );
    }

    #[test]
    fn orthogonal_form() {
        let sig = SpaceSignature::vectors_only(2, 2).unwrap();
        let expected = xv(sig, 1, 1)
            .mul(&xv(sig, 2, 1))
            .unwrap()
            .add(&xv(sig, 1, 2).mul(&xv(sig, 2, 2)).unwrap())
            .unwrap();
        assert_eq!(
            contraction(ContractionFamily::Orthogonal, 1, 2, sig).unwrap(),
            expected
        );
        assert_eq!(
            contraction(ContractionFamily::Orthogonal, 2, 1, sig).unwrap(),
            expected
        );
    }

    #[test]
    fn symplectic_form() {
        let sig = SpaceSignature::vectors_only(2, 2).unwrap();
        let expected = xv(sig, 1, 1)
            .mul(&xv(sig, 2, 2))
            .unwrap()
            .sub(&xv(sig, 1, 2).mul(&xv(sig, 2, 1)).unwrap())
            .unwrap();
        let w12 = contraction(ContractionFamily::Symplectic, 1, 2, sig).unwrap();
        assert_eq!(w12, expected);
        assert_eq!(
            contraction(ContractionFamily::Symplectic, 2, 1, sig).unwrap(),
            w12.scale(&int(-1))
        );
        assert!(contraction(ContractionFamily::Symplectic, 1, 1, sig)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn index_and_parity_errors() {
        let sig = SpaceSignature::vectors_only(3, 2).unwrap();
        assert_eq!(
            contraction(ContractionFamily::Symplectic, 1, 2, sig),
            Err(Error::OddSymplecticDimension(3))
        );
        assert!(contraction(ContractionFamily::Orthogonal, 0, 1, sig).is_err());
        assert!(contraction(ContractionFamily::Orthogonal, 1, 3, sig).is_err());
        assert!(contraction(ContractionFamily::Dual, 1, 1, sig).is_err());
        let even = SpaceSignature::vectors_only(2, 2).unwrap();
        assert!(GeneratorId::new(ContractionFamily::Symplectic, 2, 1, even).is_err());
        assert!(GeneratorId::new(ContractionFamily::Orthogonal, 1, 1, even).is_ok());
    }

    #[test]
    fn generator_lists() {
        let sig = SpaceSignature::vectors_only(2, 3).unwrap();
        let o = generators(&GroupSpec::orthogonal(2).unwrap(), sig).unwrap();
        assert_eq!(o.len(), 6);
        let sp = generators(&GroupSpec::symplectic(2).unwrap(), sig).unwrap();
        assert_eq!(
            sp.iter().map(ToString::to_string).collect::<Vec<_>>(),
            ["w(1,2)", "w(1,3)", "w(2,3)"]
        );
        let gl_sig = SpaceSignature::new(2, 2, 1).unwrap();
        let gl = generators(&GroupSpec::general(2).unwrap(), gl_sig).unwrap();
        assert_eq!(
            gl.iter().map(ToString::to_string).collect::<Vec<_>>(),
            ["c(1,1)", "c(2,1)"]
        );
        assert!(generators(&GroupSpec::orthogonal(2).unwrap(), gl_sig).is_err());
    }

    #[test]
    fn every_contraction_is_homogeneous_of_degree_two() {
        let sig = SpaceSignature::vectors_only(4, 3).unwrap();
        for spec in [
            GroupSpec::orthogonal(4).unwrap(),
            GroupSpec::symplectic(4).unwrap(),
        ] {
            for g in generators(&spec, sig).unwrap() {
                let p = g.polynomial(sig).unwrap();
                assert!(p.is_homogeneous());
                assert_eq!(p.degree(), Some(2));
            }
        }
    }
}
