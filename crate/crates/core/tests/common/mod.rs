//! Shared generators and independent oracles for the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use std::sync::Arc;

use chowkit_core::grammar::parse;
use chowkit_core::ring::enumerate_exponents;
use chowkit_core::{GroupDecl, GroupKind, Monomial, Poly, Rational, Ring};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn q(c: i64) -> Rational {
    Rational::from_integer(c.into())
}

pub fn qs(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&c| q(c)).collect()
}

/// A single point group `X` of dimension `n`.
pub fn pring(n: usize) -> Arc<Ring> {
    Arc::new(Ring::new(vec![GroupDecl::single("X", GroupKind::Point, n)]).unwrap())
}

/// A point group `X` of dimension `n` after the given coefficient groups.
pub fn coeff_pring(n: usize, coeffs: &[(&str, u32)]) -> Arc<Ring> {
    let mut groups: Vec<GroupDecl> = coeffs
        .iter()
        .map(|&(id, d)| GroupDecl::indexed(id, GroupKind::Coeff, n, d))
        .collect();
    groups.push(GroupDecl::single("X", GroupKind::Point, n));
    Arc::new(Ring::new(groups).unwrap())
}

pub fn p(s: &str, ring: &Arc<Ring>) -> Poly {
    parse(s, ring).unwrap()
}

pub fn rand_int(rng: &mut ChaCha8Rng, r: i64) -> Rational {
    q(rng.gen_range(-r..=r))
}

pub fn rand_vec(rng: &mut ChaCha8Rng, len: usize, r: i64) -> Vec<Rational> {
    loop {
        let v: Vec<Rational> = (0..len).map(|_| rand_int(rng, r)).collect();
        if v.iter().any(|c| !c.is_zero()) {
            return v;
        }
    }
}

fn monomial(ring: &Ring, block: usize, e: &[u32]) -> Monomial {
    Monomial::from_blocks(ring, &[(block, e)])
}

/// A nonzero homogeneous form of degree `d` in `block` with integer
/// coefficients in `[-r, r]`.
pub fn rand_form(rng: &mut ChaCha8Rng, ring: &Arc<Ring>, block: usize, d: u32, r: i64) -> Poly {
    let n = ring.block_len(block) - 1;
    loop {
        let f = Poly::from_terms(
            ring,
            enumerate_exponents(n, d)
                .into_iter()
                .map(|a| (monomial(ring, block, &a.0), rand_int(rng, r))),
        );
        if !f.is_zero() {
            return f;
        }
    }
}

/// `Σ_α C_α X^α` over the coefficient group at block `cb`.
pub fn generic_form(ring: &Arc<Ring>, cb: usize, block: usize, d: u32) -> Poly {
    let n = ring.block_len(block) - 1;
    enumerate_exponents(n, d)
        .into_iter()
        .enumerate()
        .fold(Poly::zero(ring), |acc, (i, a)| {
            &acc + &(&Poly::var(ring, cb, i) * &Poly::term(ring, monomial(ring, block, &a.0), Rational::one()))
        })
}

/// Evaluate `f` at a rational point of `block`, as a rational.
pub fn eval_at(f: &Poly, block: usize, x: &[Rational]) -> Rational {
    f.eval_blocks(&[(block, x)]).unwrap().as_constant().unwrap_or_else(Rational::zero)
}

/// Dot product.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Determinant by Gaussian elimination, written independently of the
/// library.
pub fn gauss_det(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rational::zero();
        };
        if r != c {
            a.swap(r, c);
            det = -det;
        }
        det *= a[c][c].clone();
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let v = &a[c][k] * &f;
                a[r][k] -= v;
            }
        }
    }
    det
}

/// Rank by Gaussian elimination.
pub fn rank(mut a: Vec<Vec<Rational>>) -> usize {
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(r, rank);
        for r in 0..a.len() {
            if r != rank && !a[r][c].is_zero() {
                let f = &a[r][c] / &a[rank][c];
                for k in c..cols {
                    let v = &a[rank][k] * &f;
                    a[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Coefficients `a_k` of a binary form `Σ a_k X0^{d-k} X1^k` in `block`.
pub fn binary_coeffs(f: &Poly, block: usize, d: u32) -> Vec<Rational> {
    let ring = f.ring();
    (0..=d).map(|k| f.coeff(&monomial(ring, block, &[d - k, k]))).collect()
}

/// The Sylvester resultant of two binary forms given by coefficients.
pub fn sylvester(a: &[Rational], b: &[Rational]) -> Rational {
    let (d, e) = (a.len() - 1, b.len() - 1);
    let size = d + e;
    if size == 0 {
        return Rational::one();
    }
    let mut m = vec![vec![Rational::zero(); size]; size];
    for i in 0..e {
        for (k, c) in a.iter().enumerate() {
            m[i][i + k] = c.clone();
        }
    }
    for i in 0..d {
        for (k, c) in b.iter().enumerate() {
            m[e + i][i + k] = c.clone();
        }
    }
    gauss_det(m)
}

/// All permutations of `0..k`.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    permutations(k - 1)
        .into_iter()
        .flat_map(|p| {
            (0..k).map(move |i| {
                let mut q = p.clone();
                q.insert(i, k - 1);
                q
            })
        })
        .collect()
}
