use std::cmp::Ordering;

/// A monomial as a sparse exponent vector over flat variable indices.
///
/// Entries are sorted by variable and carry positive exponents only, so
/// structural equality is monomial equality. The ordering is graded
/// lexicographic with variable 0 the largest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    powers: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(index: usize) -> Self {
        Self {
            powers: vec![(index as u32, 1)],
        }
    }

    /// Builds from `(variable, exponent)` pairs in any order; zero exponents
    /// are dropped and repeated variables merged.
    pub fn from_powers(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut powers: Vec<(u32, u32)> = pairs
            .into_iter()
            .filter(|&(_, e)| e > 0)
            .map(|(v, e)| (v as u32, e))
            .collect();
        powers.sort_unstable();
        powers.dedup_by(|b, a| {
            if a.0 == b.0 {
                a.1 += b.1;
                true
            } else {
                false
            }
        });
        Self { powers }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Self::from_powers(exps.iter().copied().enumerate())
    }

    pub fn powers(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.powers.iter().map(|&(v, e)| (v as usize, e))
    }

    pub fn degree(&self) -> u32 {
        self.powers.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.powers
            .binary_search_by_key(&(var as u32), |&(v, _)| v)
            .map_or(0, |i| self.powers[i].1)
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn max_var(&self) -> Option<usize> {
        self.powers.last().map(|&(v, _)| v as usize)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.powers, &other.powers);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { powers: out }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial {
            powers: if e == 0 {
                Vec::new()
            } else {
                self.powers.iter().map(|&(v, x)| (v, x * e)).collect()
            },
        }
    }

    /// Degree carried by each block of `block` consecutive variables.
    pub fn block_degrees(&self, block: usize, blocks: usize) -> Vec<u32> {
        let mut out = vec![0; blocks];
        for (v, e) in self.powers() {
            out[v / block] += e;
        }
        out
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.powers, &other.powers);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    // the smaller variable index is the larger variable
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(&eb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of length `vars` with entries summing to `degree`,
/// in descending lexicographic order (first coordinate largest first).
pub fn exponent_vectors(vars: usize, degree: u32) -> Vec<Vec<u32>> {
    fn go(vars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == vars {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            go(vars, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if vars == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(vars, degree, &mut Vec::with_capacity(vars), &mut out);
    out
}

/// `C(vars + degree - 1, degree)`, saturating at `u128::MAX`.
pub fn count_monomials(vars: usize, degree: u32) -> u128 {
    if vars == 0 {
        return u128::from(degree == 0);
    }
    let mut acc: u128 = 1;
    for i in 1..=u128::from(degree) {
        // acc * (vars - 1 + i) / i stays integral at every step
        let Some(next) = acc.checked_mul(vars as u128 - 1 + i) else {
            return u128::MAX;
        };
        acc = next / i;
    }
    acc
}
