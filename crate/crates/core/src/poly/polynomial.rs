use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::signature::{SpaceSignature, VariableId};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational};

/// A polynomial over the variables of a [`SpaceSignature`], stored as a map
/// from monomial to nonzero coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    sig: SpaceSignature,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(sig: SpaceSignature) -> Self {
        Self {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(sig: SpaceSignature, c: Rational) -> Self {
        Self::monomial(sig, Monomial::one(), c)
    }

    pub fn one(sig: SpaceSignature) -> Self {
        Self::constant(sig, Rational::one())
    }

    pub fn monomial(sig: SpaceSignature, m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(sig);
        p.add_term(m, c);
        p
    }

    pub fn var(sig: SpaceSignature, v: VariableId) -> Result<Self> {
        let i = sig.index_of(v)?;
        Ok(Self::monomial(sig, Monomial::var(i), Rational::one()))
    }

    /// Collects `(monomial, coefficient)` pairs, summing repeats and pruning
    /// zeros.
    pub fn from_terms(
        sig: SpaceSignature,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero(sig);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn signature(&self) -> SpaceSignature {
        self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_sig(&self, other: &Polynomial) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_sig(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, s: &Rational) -> Polynomial {
        if s.is_zero() {
            return Self::zero(self.sig);
        }
        Polynomial {
            sig: self.sig,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_sig(other)?;
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Ok(Self::from_terms(self.sig, acc))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Self::one(self.sig);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base).expect("same signature");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same signature");
            }
        }
        out
    }

    /// Splits into homogeneous pieces keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Self::zero(self.sig))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// Evaluates with values indexed by flat variable index.
    pub fn evaluate_dense(&self, point: &[Rational]) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in m.powers() {
                let x = point
                    .get(v)
                    .ok_or_else(|| Error::MissingVariable(self.sig.variable(v)))?;
                term *= num_traits::pow(x.clone(), e as usize);
            }
            total += term;
        }
        Ok(total)
    }

    /// Evaluates at a point given per variable. Only the variables that
    /// actually occur in `self` need a value.
    pub fn evaluate(&self, point: &HashMap<VariableId, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in m.powers() {
                let id = self.sig.variable(v);
                let x = point.get(&id).ok_or(Error::MissingVariable(id))?;
                term *= num_traits::pow(x.clone(), e as usize);
            }
            total += term;
        }
        Ok(total)
    }

    /// Replaces the coordinates of every copy by linear combinations:
    /// coordinate `a` of copy `c` becomes `sum_b maps[c][a][b] * coord_b`.
    ///
    /// The result is `v -> f(A v)` with `A` applied copy by copy, so
    /// substituting `A` and then `B` equals substituting `A * B`.
    pub fn substitute_linear(&self, maps: &[Matrix]) -> Result<Polynomial> {
        let n = self.sig.n();
        if maps.len() != self.sig.copies() {
            return Err(Error::InvalidSignature(format!(
                "{} substitution matrices for {} copies",
                maps.len(),
                self.sig.copies()
            )));
        }
        for m in maps {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch {
                    op: "substitute_linear",
                    left_rows: m.rows(),
                    left_cols: m.cols(),
                    right_rows: n,
                    right_cols: n,
                });
            }
        }
        let images: Vec<Vec<(usize, Rational)>> = (0..self.sig.num_vars())
            .map(|v| {
                let (slot, a) = (v / n, v % n);
                (0..n)
                    .filter(|&b| !maps[slot][(a, b)].is_zero())
                    .map(|b| (slot * n + b, maps[slot][(a, b)].clone()))
                    .collect()
            })
            .collect();
        Ok(self.substitute_forms(&images))
    }

    /// Substitutes each variable `v` by the linear form `images[v]`.
    pub(crate) fn substitute_forms(&self, images: &[Vec<(usize, Rational)>]) -> Polynomial {
        let sig = self.sig;
        let mut powers: HashMap<(usize, u32), Vec<(Monomial, Rational)>> = HashMap::new();
        let mut power_of = |v: usize, e: u32| -> Vec<(Monomial, Rational)> {
            powers
                .entry((v, e))
                .or_insert_with(|| {
                    let form = Polynomial::from_terms(
                        sig,
                        images[v]
                            .iter()
                            .map(|(w, c)| (Monomial::var(*w), c.clone())),
                    );
                    form.pow(e).terms.into_iter().collect()
                })
                .clone()
        };
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut partial: Vec<(Monomial, Rational)> = vec![(Monomial::one(), c.clone())];
            for (v, e) in m.powers() {
                let factor = power_of(v, e);
                let mut next: HashMap<Monomial, Rational> = HashMap::new();
                for (pm, pc) in &partial {
                    for (fm, fc) in &factor {
                        *next.entry(pm.mul(fm)).or_insert_with(Rational::zero) += pc * fc;
                    }
                }
                partial = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            }
            for (pm, pc) in partial {
                *acc.entry(pm).or_insert_with(Rational::zero) += pc;
            }
        }
        Polynomial::from_terms(sig, acc)
    }
}

impl fmt::Display for Polynomial {
    /// Writes in the expression syntax accepted by the CLI parser, leading
    /// term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mut wrote = false;
            if m.is_one() || !abs.is_one() {
                write!(f, "{abs}")?;
                wrote = true;
            }
            for (v, e) in m.powers() {
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.sig.variable(v))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
