use num_traits::{One, Zero};

use super::matrix::{rref_in_place, Matrix};
use super::rational::Rational;

/// A subspace of `Q^dim` held as the rows of a reduced echelon form, sorted
/// by pivot column. Rows can be added one at a time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonBasis {
    dim: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the stored rows; the result is zero iff `v` is
    /// in the span.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (c, e) in row.iter().enumerate() {
                if !e.is_zero() {
                    v[c] -= &factor * e;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span. Returns `false` (and changes nothing) when it
    /// already lies in the span.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        if !inv.is_one() {
            for e in v.iter_mut().filter(|e| !e.is_zero()) {
                *e *= &inv;
            }
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (c, e) in v.iter().enumerate() {
                if !e.is_zero() {
                    row[c] -= &factor * e;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }
}

/// A particular solution of `A x = b` with every free variable set to zero,
/// or `None` when the system is inconsistent.
///
/// Pivots are taken left to right, so the solution only uses the earliest
/// linearly independent columns of `A`.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length");
    let cols = a.cols();
    let mut aug: Vec<Vec<Rational>> = (0..a.rows())
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref_in_place(&mut aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[r][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn insert_tracks_rank() {
        let mut e = EchelonBasis::new(3);
        assert!(e.insert(&v(&[0, 2, 2])));
        assert!(e.insert(&v(&[1, 1, 1])));
        assert!(!e.insert(&v(&[2, 5, 5])));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots(), &[0, 1]);
        assert!(e.contains(&v(&[3, 0, 0])));
        assert!(!e.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn rows_match_batch_rref() {
        let input = [v(&[0, 1, 2, 3]), v(&[1, 0, 1, 0]), v(&[1, 1, 3, 3])];
        let mut e = EchelonBasis::new(4);
        for r in &input {
            e.insert(r);
        }
        let (rref, pivots) = Matrix::from_rows(input.to_vec()).unwrap().rref();
        assert_eq!(e.pivots(), pivots.as_slice());
        for (i, row) in e.rows().iter().enumerate() {
            assert_eq!(row.as_slice(), rref.row(i));
        }
    }

    #[test]
    fn solve_prefers_earliest_columns() {
        // columns: c0 = (1,0), c1 = (1,0), c2 = (0,1)
        let a = Matrix::from_i64(&[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(solve(&a, &v(&[3, 4])), Some(v(&[3, 0, 4])));
        let b = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve(&b, &v(&[1, 2])), None);
    }
}
