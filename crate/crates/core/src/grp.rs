//! Group specifications, exact membership tests, rational sampling of the
//! classical groups by Cayley transforms, and closure of finite groups.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::rational::int;
use crate::exact::{Matrix, Rational};

/// Integer entries of random sampler matrices are drawn from this range.
pub const ENTRY_RANGE: std::ops::RangeInclusive<i64> = -3..=3;

/// Attempts before a sampler gives up on drawing an invertible matrix.
pub const RESAMPLE_LIMIT: usize = 64;

/// Default cap on the order of a finite group.
pub const DEFAULT_MAX_ORDER: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    General,
    Orthogonal,
    Symplectic,
    Finite,
}

impl GroupFamily {
    pub fn name(self) -> &'static str {
        match self {
            GroupFamily::General => "gl",
            GroupFamily::Orthogonal => "o",
            GroupFamily::Symplectic => "sp",
            GroupFamily::Finite => "finite",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GroupSpec {
    General { n: usize },
    Orthogonal { n: usize },
    Symplectic { n: usize },
    Finite(Arc<FiniteGroup>),
}

impl GroupSpec {
    pub fn general(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(GroupSpec::General { n })
    }

    pub fn orthogonal(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(GroupSpec::Orthogonal { n })
    }

    pub fn symplectic(n: usize) -> Result<Self> {
        check_size(n)?;
        if !n.is_multiple_of(2) {
            return Err(Error::OddSymplecticDimension(n));
        }
        Ok(GroupSpec::Symplectic { n })
    }

    /// The finite group generated by `generators`; fails if its order
    /// exceeds `max_order`.
    pub fn finite(generators: Vec<Matrix>, max_order: usize) -> Result<Self> {
        Ok(GroupSpec::Finite(Arc::new(FiniteGroup::new(
            generators, max_order,
        )?)))
    }

    pub fn n(&self) -> usize {
        match self {
            GroupSpec::General { n }
            | GroupSpec::Orthogonal { n }
            | GroupSpec::Symplectic { n } => *n,
            GroupSpec::Finite(g) => g.n,
        }
    }

    pub fn family(&self) -> GroupFamily {
        match self {
            GroupSpec::General { .. } => GroupFamily::General,
            GroupSpec::Orthogonal { .. } => GroupFamily::Orthogonal,
            GroupSpec::Symplectic { .. } => GroupFamily::Symplectic,
            GroupSpec::Finite(_) => GroupFamily::Finite,
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteGroup> {
        match self {
            GroupSpec::Finite(g) => Some(g),
            _ => None,
        }
    }

    /// Exact membership; a matrix of the wrong shape is never a member.
    pub fn contains(&self, g: &Matrix) -> bool {
        let n = self.n();
        if g.rows() != n || g.cols() != n {
            return false;
        }
        match self {
            GroupSpec::General { .. } => !g.determinant().expect("square").is_zero(),
            GroupSpec::Orthogonal { .. } => g.transpose().mul(g).expect("square").is_identity(),
            GroupSpec::Symplectic { n } => {
                let j = make_j(*n).expect("validated even size");
                let lhs = g
                    .transpose()
                    .mul(&j)
                    .and_then(|t| t.mul(g))
                    .expect("square");
                lhs == j
            }
            GroupSpec::Finite(fg) => fg.position(g).is_some(),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::General { n } => write!(f, "GL({n})"),
            GroupSpec::Orthogonal { n } => write!(f, "O({n})"),
            GroupSpec::Symplectic { n } => write!(f, "Sp({n})"),
            GroupSpec::Finite(g) => write!(f, "Finite(order {}, n = {})", g.order(), g.n),
        }
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidGroup("matrix size must be at least 1".into()))
    } else {
        Ok(())
    }
}

pub fn membership(spec: &GroupSpec, g: &Matrix) -> bool {
    spec.contains(g)
}

/// A group element together with its exact inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    g: Matrix,
    g_inv: Matrix,
}

impl GroupElement {
    pub fn new(g: Matrix) -> Result<Self> {
        let g_inv = g.inverse()?;
        Ok(Self { g, g_inv })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            g: Matrix::identity(n),
            g_inv: Matrix::identity(n),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.g
    }

    pub fn inverse_matrix(&self) -> &Matrix {
        &self.g_inv
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            g: self.g_inv.clone(),
            g_inv: self.g.clone(),
        }
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            g: self.g.mul(&other.g).expect("same size"),
            g_inv: other.g_inv.mul(&self.g_inv).expect("same size"),
        }
    }
}

/// Block-diagonal `n x n` matrix with blocks `[[0, 1], [-1, 0]]`.
pub fn make_j(n: usize) -> Result<Matrix> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::OddSymplecticDimension(n));
    }
    let mut j = Matrix::zeros(n, n);
    for b in (0..n).step_by(2) {
        j[(b, b + 1)] = int(1);
        j[(b + 1, b)] = int(-1);
    }
    Ok(j)
}

/// `(I - S)(I + S)^{-1}`.
pub fn cayley(s: &Matrix) -> Result<Matrix> {
    let id = Matrix::identity(s.rows());
    let plus = id.add(s)?.inverse()?;
    id.sub(s)?.mul(&plus)
}

/// `diag(-1, 1, ..., 1)`.
pub fn reflection(n: usize) -> Matrix {
    let mut r = Matrix::identity(n);
    r[(0, 0)] = int(-1);
    r
}

fn random_skew(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut s = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let v = rng.gen_range(ENTRY_RANGE);
            s[(i, j)] = int(v);
            s[(j, i)] = int(-v);
        }
    }
    s
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut h = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = int(rng.gen_range(ENTRY_RANGE));
            h[(i, j)] = v.clone();
            h[(j, i)] = v;
        }
    }
    h
}

fn random_integer(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let entries = (0..n * n)
        .map(|_| int(rng.gen_range(ENTRY_RANGE)))
        .collect();
    Matrix::from_entries(n, n, entries).expect("n*n entries")
}

/// Draws one element of the group, as a pure function of `(spec, seed)`.
///
/// * GL: integer entries in [-3, 3], redrawn until invertible.
/// * O(n): Cayley transform of a random integer skew matrix, composed with
///   the reflection `diag(-1, 1, ..., 1)` when `seed` is odd.
/// * Sp(n): Cayley transform of `J H` with `H` random integer symmetric,
///   redrawn while `I + J H` is singular.
/// * Finite: uniform over the enumerated elements.
pub fn sample_element(spec: &GroupSpec, seed: u64) -> Result<GroupElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = spec.n();
    match spec {
        GroupSpec::General { .. } => {
            for _ in 0..RESAMPLE_LIMIT {
                if let Ok(e) = GroupElement::new(random_integer(&mut rng, n)) {
                    return Ok(e);
                }
            }
            Err(Error::ResampleLimit {
                attempts: RESAMPLE_LIMIT,
            })
        }
        GroupSpec::Orthogonal { .. } => {
            // I + S is invertible for every real skew S
            let g = cayley(&random_skew(&mut rng, n))?;
            let g = if seed & 1 == 1 {
                reflection(n).mul(&g)?
            } else {
                g
            };
            // g^{-1} = g^T on O(n)
            let g_inv = g.transpose();
            Ok(GroupElement { g, g_inv })
        }
        GroupSpec::Symplectic { .. } => {
            let j = make_j(n)?;
            for _ in 0..RESAMPLE_LIMIT {
                let s = j.mul(&random_symmetric(&mut rng, n))?;
                if let Ok(g) = cayley(&s) {
                    // g^{-1} = -J g^T J on Sp(n)
                    let g_inv = j.mul(&g.transpose())?.mul(&j)?.scale(&-Rational::one());
                    return Ok(GroupElement { g, g_inv });
                }
            }
            Err(Error::ResampleLimit {
                attempts: RESAMPLE_LIMIT,
            })
        }
        GroupSpec::Finite(fg) => {
            let i = rng.gen_range(0..fg.order());
            Ok(fg.elements[i].clone())
        }
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of the `index`-th draw of a stream. Its parity equals the parity of
/// `index`, so every second O(n) draw carries the reflection.
pub fn stream_seed(seed: u64, index: u64) -> u64 {
    (splitmix64(seed ^ splitmix64(index)) & !1) | (index & 1)
}

/// Deterministic stream of group elements derived from one seed.
#[derive(Debug, Clone)]
pub struct Sampler {
    spec: GroupSpec,
    seed: u64,
    next: u64,
}

impl Sampler {
    pub fn new(spec: &GroupSpec, seed: u64) -> Self {
        Self {
            spec: spec.clone(),
            seed,
            next: 0,
        }
    }

    pub fn draw(&mut self) -> Result<GroupElement> {
        let e = sample_element(&self.spec, stream_seed(self.seed, self.next))?;
        self.next += 1;
        Ok(e)
    }

    pub fn drawn(&self) -> u64 {
        self.next
    }
}

impl Iterator for Sampler {
    type Item = Result<GroupElement>;

    fn next(&mut self) -> Option<Self::Item> {
        Some(self.draw())
    }
}

/// A finite matrix group with all of its elements enumerated.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    n: usize,
    generators: Vec<Matrix>,
    elements: Vec<GroupElement>,
    lookup: HashMap<Matrix, usize>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.elements == other.elements
    }
}

impl FiniteGroup {
    pub fn new(generators: Vec<Matrix>, max_order: usize) -> Result<Self> {
        let n = match generators.first() {
            Some(g) => g.rows(),
            None => return Err(Error::InvalidGroup("no generators given".into())),
        };
        check_size(n)?;
        let elements = finite_closure(&generators, max_order)?;
        let lookup = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.matrix().clone(), i))
            .collect();
        Ok(Self {
            n,
            generators,
            elements,
            lookup,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn position(&self, g: &Matrix) -> Option<usize> {
        self.lookup.get(g).copied()
    }
}

/// Enumerates the group generated by `generators`, identity first, by
/// breadth-first multiplication. Fails once more than `cap` elements appear.
pub fn finite_closure(generators: &[Matrix], cap: usize) -> Result<Vec<GroupElement>> {
    let Some(first) = generators.first() else {
        return Err(Error::InvalidGroup("no generators given".into()));
    };
    let n = first.rows();
    let gens: Vec<GroupElement> = generators
        .iter()
        .map(|g| {
            if g.rows() != n || g.cols() != n {
                return Err(Error::InvalidGroup(format!(
                    "generator is {}x{}, expected {n}x{n}",
                    g.rows(),
                    g.cols()
                )));
            }
            GroupElement::new(g.clone())
        })
        .collect::<Result<_>>()?;

    let mut seen: HashMap<Matrix, usize> = HashMap::new();
    let mut elements = vec![GroupElement::identity(n)];
    seen.insert(Matrix::identity(n), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for s in &gens {
            let h = elements[i].compose(s);
            if seen.contains_key(h.matrix()) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::ClosureCapExceeded { cap });
            }
            seen.insert(h.matrix().clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(h);
        }
    }
    Ok(elements)
}
