//! Shared helpers for the integration tests: a brute-force invariant
//! dimension oracle that shares no code with the library's kernel routine,
//! random polynomials, and evaluation points.

#![allow(dead_code)]

use std::collections::BTreeMap;

use classinv::exact::{rational::int, Matrix, Rational};
use classinv::grp::{GroupElement, GroupSpec, Sampler};
use classinv::poly::{Monomial, Polynomial, SpaceSignature, VarKind};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

type Dense = BTreeMap<Vec<u32>, Rational>;

fn all_exponents(vars: usize, d: u32) -> Vec<Vec<u32>> {
    if vars == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in all_exponents(vars - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let mut out = Dense::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Image of variable `v` under the substitution `(x, v) -> (x g, g^-1 v)`.
fn image_of_variable(sig: SpaceSignature, g: &Matrix, g_inv: &Matrix, v: usize) -> Dense {
    let nv = sig.num_vars();
    let n = sig.n();
    let id = sig.variable(v);
    let mut out = Dense::new();
    for b in 1..=n {
        let coeff = match id.kind {
            VarKind::Covector => g[(b - 1, id.coord - 1)].clone(),
            VarKind::Vector => g_inv[(id.coord - 1, b - 1)].clone(),
        };
        if coeff.is_zero() {
            continue;
        }
        let target = v + b - id.coord;
        let mut e = vec![0; nv];
        e[target] = 1;
        out.insert(e, coeff);
    }
    out
}

/// Rank by plain rational Gaussian elimination.
fn naive_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for j in c..cols {
                    row[j] -= &f * &pivot[j];
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim P^d - rank` of the stacked matrices `g - id` over the given
/// elements, built from scratch over all monomials of degree `d`.
pub fn naive_kernel_dim(sig: SpaceSignature, d: u32, elements: &[GroupElement]) -> usize {
    let nv = sig.num_vars();
    let monos = all_exponents(nv, d);
    let pos: BTreeMap<&Vec<u32>, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in elements {
        let images: Vec<Dense> = (0..nv)
            .map(|v| image_of_variable(sig, g.matrix(), g.inverse_matrix(), v))
            .collect();
        // column j = image of monomial j minus monomial j
        let mut block = vec![vec![Rational::zero(); monos.len()]; monos.len()];
        for (j, m) in monos.iter().enumerate() {
            let mut img: Dense = [(vec![0; nv], Rational::one())].into_iter().collect();
            for (v, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    img = dense_mul(&img, &images[v]);
                }
            }
            for (e, c) in img {
                block[pos[&e]][j] += c;
            }
            block[j][j] -= Rational::one();
        }
        rows.extend(block);
    }
    monos.len() - naive_rank(rows)
}

/// Sampled elements for continuous groups, all elements for finite ones.
pub fn oracle_elements(spec: &GroupSpec, count: usize, seed: u64) -> Vec<GroupElement> {
    match spec.as_finite() {
        Some(fg) => fg.elements().to_vec(),
        None => Sampler::new(spec, seed)
            .take(count)
            .collect::<classinv::Result<_>>()
            .expect("sampler"),
    }
}

/// Rank of a list of polynomials, computed over their joint support.
pub fn naive_poly_rank(polys: &[Polynomial]) -> usize {
    let mut support: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            let next = support.len();
            support.entry(m.clone()).or_insert(next);
        }
    }
    let rows = polys
        .iter()
        .map(|p| {
            let mut row = vec![Rational::zero(); support.len()];
            for (m, c) in p.terms() {
                row[support[m]] = c.clone();
            }
            row
        })
        .collect();
    naive_rank(rows)
}

/// A random polynomial with up to `terms` terms of total degree at most
/// `max_degree` and small integer or half-integer coefficients.
pub fn random_poly(
    rng: &mut ChaCha8Rng,
    sig: SpaceSignature,
    max_degree: u32,
    terms: usize,
) -> Polynomial {
    let nv = sig.num_vars();
    let mut out = Vec::new();
    for _ in 0..rng.gen_range(1..=terms) {
        let d = rng.gen_range(0..=max_degree);
        let mut exps = vec![0u32; nv];
        for _ in 0..d {
            exps[rng.gen_range(0..nv)] += 1;
        }
        let c = Rational::new(
            rng.gen_range(-5i64..=5).into(),
            rng.gen_range(1i64..=2).into(),
        );
        out.push((Monomial::from_exponents(&exps), c));
    }
    Polynomial::from_terms(sig, out)
}

/// A random homogeneous polynomial of degree exactly `d`.
pub fn random_homogeneous(
    rng: &mut ChaCha8Rng,
    sig: SpaceSignature,
    d: u32,
    terms: usize,
) -> Polynomial {
    let nv = sig.num_vars();
    let out = (0..terms).map(|_| {
        let mut exps = vec![0u32; nv];
        for _ in 0..d {
            exps[rng.gen_range(0..nv)] += 1;
        }
        (Monomial::from_exponents(&exps), int(rng.gen_range(-4..=4)))
    });
    Polynomial::from_terms(sig, out)
}

pub fn random_point(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len)
        .map(|_| {
            Rational::new(
                rng.gen_range(-6i64..=6).into(),
                rng.gen_range(1i64..=3).into(),
            )
        })
        .collect()
}

/// Moves a dense point by `(x, v) -> (x g, g^-1 v)`: covector blocks are
/// row vectors, vector blocks columns.
pub fn transform_point(sig: SpaceSignature, g: &GroupElement, point: &[Rational]) -> Vec<Rational> {
    let (right, left) = (g.matrix(), g.inverse_matrix());
    let n = sig.n();
    let mut out = point.to_vec();
    for copy in 0..sig.copies() {
        let base = copy * n;
        let covector = copy < sig.covectors();
        for a in 0..n {
            let mut s = Rational::zero();
            for b in 0..n {
                s += if covector {
                    &point[base + b] * &right[(b, a)]
                } else {
                    &left[(a, b)] * &point[base + b]
                };
            }
            out[base + a] = s;
        }
    }
    out
}

pub fn sign_group(n: usize) -> GroupSpec {
    let gens = (0..n)
        .map(|i| {
            let mut m = Matrix::identity(n);
            m[(i, i)] = int(-1);
            m
        })
        .collect();
    GroupSpec::finite(gens, 1 << n).expect("sign group")
}

pub fn s3() -> GroupSpec {
    let swap = Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    let cycle = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
    GroupSpec::finite(vec![swap, cycle], 6).expect("S3")
}

/// Thirty expressions used for parse/format round trips over O(2) with
/// two vector copies.
pub const ROUND_TRIP_CORPUS: [&str; 30] = [
    "0",
    "1",
    "-1",
    "7/3",
    "-22/7",
    "x[1,1]",
    "-x[1,2]",
    "x[1,1]^2",
    "x[2,2]^5",
    "x[1,1]*x[2,2]",
    "3*x[1,1] - 4*x[1,2]",
    "1/2*x[1,1]^2 + 1/3*x[1,2]^2",
    "s(1,1)",
    "s(1,2)",
    "s(2,2)",
    "s(1,2) + 3/4 * x[1,1]^2",
    "s(1,1)*s(2,2) - s(1,2)^2",
    "(x[1,1] + x[1,2])^3",
    "(x[1,1] - x[2,1])*(x[1,2] + x[2,2])",
    "s(1,1)^2 - 2*s(1,2) + 5",
    "x[1,1]^2*x[1,2]^3*x[2,1]*x[2,2]^4",
    "-(x[1,1] + 1)^2",
    "((x[1,1]))",
    "2*3*x[1,2]",
    "x[1,1] - x[1,1]",
    "100000000000000000000*x[2,1]",
    "-1/100000000000000000000",
    "(s(1,1) + s(2,2))^2 - (s(1,1) - s(2,2))^2",
    "x[2,1]^0 + x[2,2]^1",
    " s( 1 , 2 )  *  x[ 2 , 1 ] ",
];
