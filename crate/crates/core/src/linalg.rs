//! Dense rational linear algebra for small matrices.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Determinant by Gaussian elimination.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut d = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            a.swap(piv, col);
            d = -d;
        }
        let p = a[col][col].clone();
        d *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            let (top, bottom) = a.split_at_mut(r);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= y * &f;
            }
        }
    }
    d
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

/// Incrementally maintained row-echelon basis of a subspace of ℚ^n.
#[derive(Debug, Clone, Default)]
pub struct EchelonBasis {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x -= &f * r;
            }
        }
        v
    }

    /// Insert `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                *x -= &f * y;
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }
}

/// A solution of `M c = b` over ℚ (free variables set to zero), if one exists.
pub fn solve_rational(m: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..cols {
        let Some(p) = (pr..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(pr, p);
        let inv = a[pr][c].recip();
        for x in a[pr].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[pr].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != pr && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x -= y * &f;
                }
            }
        }
        pivots.push(c);
        pr += 1;
    }
    if a[pr..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = a[r][cols].clone();
    }
    Some(x)
}

/// Integer solutions of `M c = b` through a column Hermite form `M U = H`
/// with `U` unimodular.
#[derive(Debug, Clone)]
pub struct IntegerSolver {
    rows: usize,
    h: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl IntegerSolver {
    /// `m` is given by rows; all rows have the same length.
    pub fn new(m: &[Vec<BigInt>]) -> Self {
        let rows = m.len();
        let cols = m.first().map_or(0, |r| r.len());
        let mut h: Vec<Vec<BigInt>> = m.to_vec();
        let mut u: Vec<Vec<BigInt>> = (0..cols)
            .map(|i| (0..cols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        let col_op = |a: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, q: &BigInt| {
            for row in a.iter_mut() {
                let v = &row[src] * q;
                row[dst] -= v;
            }
        };
        let swap = |a: &mut Vec<Vec<BigInt>>, x: usize, y: usize| {
            for row in a.iter_mut() {
                row.swap(x, y);
            }
        };
        let mut pivots = Vec::new();
        let mut pc = 0;
        for r in 0..rows {
            if pc == cols {
                break;
            }
            loop {
                let best = (pc..cols)
                    .filter(|&c| !h[r][c].is_zero())
                    .min_by(|&a, &b| h[r][a].abs().cmp(&h[r][b].abs()));
                let Some(best) = best else { break };
                swap(&mut h, pc, best);
                swap(&mut u, pc, best);
                let mut done = true;
                for c in pc + 1..cols {
                    if h[r][c].is_zero() {
                        continue;
                    }
                    let q = h[r][c].div_floor(&h[r][pc]);
                    col_op(&mut h, c, pc, &q);
                    col_op(&mut u, c, pc, &q);
                    if !h[r][c].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if h[r][pc].is_zero() {
                continue;
            }
            if h[r][pc].is_negative() {
                for a in [&mut h, &mut u] {
                    for row in a.iter_mut() {
                        row[pc] = -&row[pc];
                    }
                }
            }
            pivots.push(r);
            pc += 1;
        }
        IntegerSolver { rows, h, u, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// An integer solution of `M c = b`, if one exists.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        if b.len() != self.rows {
            return None;
        }
        let cols = self.u.len();
        let mut y = vec![BigInt::zero(); cols];
        for (k, &r) in self.pivots.iter().enumerate() {
            let mut acc = b[r].clone();
            for (j, yj) in y.iter().enumerate().take(k) {
                acc -= &self.h[r][j] * yj;
            }
            let (q, rem) = acc.div_rem(&self.h[r][k]);
            if !rem.is_zero() {
                return None;
            }
            y[k] = q;
        }
        for (row, br) in self.h.iter().zip(b) {
            let v: BigInt = (0..self.pivots.len()).map(|j| &row[j] * &y[j]).sum();
            if v != *br {
                return None;
            }
        }
        Some(
            (0..cols)
                .map(|i| (0..self.pivots.len()).map(|j| &self.u[i][j] * &y[j]).sum())
                .collect(),
        )
    }
}
