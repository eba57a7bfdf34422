use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Shape of the space `(V*)^k x V^m` with `n = dim V`.
///
/// Variables are numbered covector copies first, then vector copies, each
/// copy contributing `n` consecutive coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SpaceSignature {
    n: usize,
    covectors: usize,
    vectors: usize,
}

impl SpaceSignature {
    pub fn new(n: usize, covectors: usize, vectors: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSignature("n must be at least 1".into()));
        }
        if covectors + vectors == 0 {
            return Err(Error::InvalidSignature(
                "need at least one covector or vector copy".into(),
            ));
        }
        Ok(Self {
            n,
            covectors,
            vectors,
        })
    }

    /// `k` vector copies and no covectors, the setting of the orthogonal and
    /// symplectic groups.
    pub fn vectors_only(n: usize, k: usize) -> Result<Self> {
        Self::new(n, 0, k)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn covectors(&self) -> usize {
        self.covectors
    }

    pub fn vectors(&self) -> usize {
        self.vectors
    }

    pub fn copies(&self) -> usize {
        self.covectors + self.vectors
    }

    pub fn num_vars(&self) -> usize {
        self.n * self.copies()
    }

    pub fn index_of(&self, var: VariableId) -> Result<usize> {
        let count = match var.kind {
            VarKind::Covector => self.covectors,
            VarKind::Vector => self.vectors,
        };
        if var.copy == 0 || var.copy > count || var.coord == 0 || var.coord > self.n {
            return Err(Error::IndexOutOfRange(format!(
                "{var} (signature has n = {}, {} covector and {} vector copies)",
                self.n, self.covectors, self.vectors
            )));
        }
        let copy_slot = match var.kind {
            VarKind::Covector => var.copy - 1,
            VarKind::Vector => self.covectors + var.copy - 1,
        };
        Ok(copy_slot * self.n + var.coord - 1)
    }

    pub fn variable(&self, index: usize) -> VariableId {
        assert!(index < self.num_vars(), "variable index out of range");
        let slot = index / self.n;
        let coord = index % self.n + 1;
        if slot < self.covectors {
            VariableId::covector(slot + 1, coord)
        } else {
            VariableId::vector(slot - self.covectors + 1, coord)
        }
    }

    /// Zero-based copy slot (covectors first) of a flat variable index.
    pub fn copy_slot(&self, index: usize) -> usize {
        index / self.n
    }

    pub fn variables(&self) -> impl Iterator<Item = VariableId> + '_ {
        (0..self.num_vars()).map(|i| self.variable(i))
    }
}

impl fmt::Display for SpaceSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} covectors={} vectors={}",
            self.n, self.covectors, self.vectors
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKind {
    Covector,
    Vector,
}

/// A coordinate of one copy: `u[copy,coord]` for covectors, `x[copy,coord]`
/// for vectors. Both indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableId {
    pub kind: VarKind,
    pub copy: usize,
    pub coord: usize,
}

impl VariableId {
    pub fn covector(copy: usize, coord: usize) -> Self {
        Self {
            kind: VarKind::Covector,
            copy,
            coord,
        }
    }

    pub fn vector(copy: usize, coord: usize) -> Self {
        Self {
            kind: VarKind::Vector,
            copy,
            coord,
        }
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.kind {
            VarKind::Covector => 'u',
            VarKind::Vector => 'x',
        };
        write!(f, "{letter}[{},{}]", self.copy, self.coord)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_shapes() {
        assert!(SpaceSignature::new(0, 1, 1).is_err());
        assert!(SpaceSignature::new(2, 0, 0).is_err());
        assert!(SpaceSignature::new(1, 0, 1).is_ok());
    }

    #[test]
    fn covectors_come_first() {
        let sig = SpaceSignature::new(2, 1, 2).unwrap();
        assert_eq!(sig.num_vars(), 6);
        assert_eq!(sig.index_of(VariableId::covector(1, 2)).unwrap(), 1);
        assert_eq!(sig.index_of(VariableId::vector(1, 1)).unwrap(), 2);
        assert_eq!(sig.index_of(VariableId::vector(2, 2)).unwrap(), 5);
        for i in 0..sig.num_vars() {
            assert_eq!(sig.index_of(sig.variable(i)).unwrap(), i);
        }
        let order: Vec<_> = sig.variables().collect();
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(order, sorted);
    }

    #[test]
    fn out_of_range_variables() {
        let sig = SpaceSignature::new(2, 0, 1).unwrap();
        assert!(sig.index_of(VariableId::vector(0, 1)).is_err());
        assert!(sig.index_of(VariableId::vector(1, 3)).is_err());
        assert!(sig.index_of(VariableId::covector(1, 1)).is_err());
    }
}
