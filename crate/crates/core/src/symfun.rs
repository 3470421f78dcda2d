//! Multi-homogeneous symmetric polynomials in `D` copies `X_0..X_{D-1}` of a
//! point group of dimension `n`.
//!
//! A monomial in the copies is handled as a list of rows, row `i` being the
//! exponent vector of `X_i`. Its orbit under permutation of the copies is
//! represented by the rows sorted in decreasing order.
//!
//! The decomposition into the elementary polynomials `σ_α` follows the usual
//! double induction: for an orbit `m` of degree `d + 1`, split off the
//! degree-one divisor `m_0` with lexicographically largest `δ(m_0)`; then
//! `P_m = σ_{δ(m_0)} P_{m_1} - Σ c_r P_r` where every correction orbit `r`
//! has `δ(r) < δ(m)`. Representations in the `σ_α` are not unique; this
//! choice makes the output deterministic. The coefficients are integers.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use alloc::format;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::context::Context;
use crate::error::{Error, Result};
use crate::linalg::{solve_rational, IntegerSolver};
use crate::poly::{Homogeneity, Monomial, Poly};
use crate::rational::Rational;
use crate::ring::{GroupDecl, GroupKind, MultiIndex, Ring};

pub use crate::ring::enumerate_exponents;

/// Exponent rows of a monomial in several copies of one group.
pub type Rows = Vec<Vec<u32>>;

/// Group id of the point copies `X_0..X_{D-1}`.
pub const POINT_FAMILY: &str = "X";
/// Group id of the elementary symbols `σ_α`, printed `s[α]`.
pub const SIGMA_GROUP: &str = "s";
/// Group id of the coefficient symbols `T*_α` of the generic form.
pub const COEFF_GROUP: &str = "T";

/// `D` copies of a point group of dimension `n`.
pub fn point_family_ring(n: usize, count: usize) -> Arc<Ring> {
    Arc::new(Ring::new(vec![GroupDecl::family(POINT_FAMILY, GroupKind::Point, n, count)]).unwrap())
}

/// The symbols `σ_α`, `α ∈ ℕ_D`.
pub fn sigma_ring(n: usize, count: usize) -> Arc<Ring> {
    Arc::new(Ring::new(vec![sigma_decl(n, count)]).unwrap())
}

fn sigma_decl(n: usize, count: usize) -> GroupDecl {
    GroupDecl::indexed(SIGMA_GROUP, GroupKind::Coeff, n, count as u32)
}

/// The symbols `T*_α`, `α ∈ ℕ_d`, together with `σ_β`, `β ∈ ℕ_D`.
pub fn table_ring(n: usize, d: u32, count: usize) -> Arc<Ring> {
    Arc::new(
        Ring::new(vec![
            GroupDecl::indexed(COEFF_GROUP, GroupKind::Coeff, n, d),
            sigma_decl(n, count),
        ])
        .unwrap(),
    )
}

/// `δ(m)`: the exponent obtained by identifying all copies.
pub fn delta(rows: &[Vec<u32>]) -> MultiIndex {
    let len = rows.first().map_or(0, |r| r.len());
    let mut out = vec![0; len];
    for r in rows {
        for (o, e) in out.iter_mut().zip(r) {
            *o += e;
        }
    }
    MultiIndex(out)
}

fn sorted_desc(mut rows: Rows) -> Rows {
    rows.sort_unstable_by(|a, b| b.cmp(a));
    rows
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All distinct rearrangements of the rows.
fn distinct_arrangements(rows: &[Vec<u32>]) -> Vec<Rows> {
    let mut cur: Rows = rows.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

fn monomial_of_rows(ring: &Ring, rows: &[Vec<u32>]) -> Monomial {
    let exps: Vec<(usize, &[u32])> = rows.iter().enumerate().map(|(i, r)| (i, r.as_slice())).collect();
    Monomial::from_blocks(ring, &exps)
}

/// The orbit sum `P_m` of the monomial with the given rows: every distinct
/// monomial of the orbit once, with coefficient 1.
pub fn orbit_sum(n: usize, rows: &[Vec<u32>]) -> Result<Poly> {
    for r in rows {
        if r.len() != n + 1 {
            return Err(Error::DimensionMismatch {
                expected: n + 1,
                got: r.len(),
            });
        }
    }
    if let Some(first) = rows.first() {
        let d: u32 = first.iter().sum();
        for (i, r) in rows.iter().enumerate() {
            if r.iter().sum::<u32>() != d {
                return Err(Error::UnequalDegrees {
                    first: alloc::format!("{POINT_FAMILY}0"),
                    second: alloc::format!("{POINT_FAMILY}{i}"),
                });
            }
        }
    }
    let ring = point_family_ring(n, rows.len());
    Ok(Poly::from_terms(
        &ring,
        distinct_arrangements(rows)
            .iter()
            .map(|a| (monomial_of_rows(&ring, a), Rational::one())),
    ))
}

/// The elementary polynomials: `σ_α` is the coefficient of `X*^α` in
/// `G_D = ∏_{i<D} (X*·X_i)`. Listed in the order of `enumerate_exponents(n, D)`.
pub fn sigma_table(n: usize, count: usize) -> Vec<(MultiIndex, Poly)> {
    let full = Arc::new(
        Ring::new(vec![
            GroupDecl::family(POINT_FAMILY, GroupKind::Point, n, count),
            GroupDecl::single("L", GroupKind::Dual, n),
        ])
        .unwrap(),
    );
    let dual = count;
    let mut g = Poly::one(&full);
    for i in 0..count {
        let mut lin = Poly::zero(&full);
        for s in 0..=n {
            lin = &lin + &(&Poly::var(&full, dual, s) * &Poly::var(&full, i, s));
        }
        g = &g * &lin;
    }
    let xs = point_family_ring(n, count);
    let coeffs = g.block_coefficients(dual, &xs).unwrap();
    enumerate_exponents(n, count as u32)
        .into_iter()
        .map(|alpha| {
            let p = coeffs.get(&alpha.0).cloned().unwrap_or_else(|| Poly::zero(&xs));
            (alpha, p)
        })
        .collect()
}

/// Non-decreasing index sequences of length `size` over `0..k`.
pub(crate) fn multisets(k: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 {
        if size == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut idx = vec![0usize; size];
    loop {
        out.push(idx.clone());
        let Some(pos) = (0..size).rev().find(|&p| idx[p] + 1 < k) else {
            return out;
        };
        let v = idx[pos] + 1;
        for x in idx[pos..].iter_mut() {
            *x = v;
        }
    }
}

/// Degree-one divisor taking, in each row, the first coordinate with a
/// nonzero exponent. Among all degree-one divisors it has the unique
/// lexicographically largest `δ`.
fn greedy_split(m: &[Vec<u32>]) -> (Rows, Rows) {
    let m0: Rows = m
        .iter()
        .map(|r| {
            let k = r.iter().position(|&e| e > 0).unwrap();
            let mut e = vec![0; r.len()];
            e[k] = 1;
            e
        })
        .collect();
    let m1 = m
        .iter()
        .zip(&m0)
        .map(|(r, e)| r.iter().zip(e).map(|(a, b)| a - b).collect())
        .collect();
    (m0, m1)
}

/// The linear system between the orbit sums and the `σ`-monomials sharing a
/// degree and a value of `δ`.
#[derive(Debug, Clone)]
struct ClassSystem {
    orbits: BTreeMap<Rows, usize>,
    monos: Vec<Vec<usize>>,
    matrix: Vec<Vec<BigInt>>,
    solver: IntegerSolver,
}

/// Memoised decomposition of orbit sums for fixed `(n, D)`.
///
/// Not every orbit sum lies in `ℤ[σ]`: for `n = 2, D = 3` the 56 orbit sums of
/// degree 2 span a space that the 55 products `σ_α σ_β` cannot fill. Such
/// orbits are memoised as `None`.
#[derive(Debug, Clone)]
pub struct Decomposer {
    n: usize,
    count: usize,
    ring: Arc<Ring>,
    index: BTreeMap<Vec<u32>, usize>,
    memo: BTreeMap<Rows, Option<Poly>>,
    classes: BTreeMap<(u32, Vec<u32>), ClassSystem>,
    sigmas: Option<Vec<Poly>>,
}

impl Decomposer {
    pub fn new(n: usize, count: usize) -> Self {
        let index = enumerate_exponents(n, count as u32)
            .into_iter()
            .enumerate()
            .map(|(i, a)| (a.0, i))
            .collect();
        Decomposer {
            n,
            count,
            ring: sigma_ring(n, count),
            index,
            memo: BTreeMap::new(),
            classes: BTreeMap::new(),
            sigmas: None,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    fn sigma(&self, alpha: &MultiIndex) -> Poly {
        Poly::var(&self.ring, 0, self.index[&alpha.0])
    }

    /// `σ_{D e_0} = ∏_i X_{i,0}`.
    pub fn sigma_first(&self) -> Poly {
        let mut a = vec![0u32; self.n + 1];
        a[0] = self.count as u32;
        self.sigma(&MultiIndex(a))
    }

    /// `P_m` as a polynomial in the `σ_α`, for `m` given by its rows, or
    /// `None` when `P_m` is not such a polynomial.
    pub fn orbit(&mut self, rows: &[Vec<u32>]) -> Option<Poly> {
        debug_assert_eq!(rows.len(), self.count);
        debug_assert!(rows.iter().all(|r| r.len() == self.n + 1));
        let m = sorted_desc(rows.to_vec());
        self.orbit_sorted(m)
    }

    /// `P_m σ_{D e_0}^j`, which is the orbit sum of `m` with `j` added to the
    /// first exponent of every row.
    pub fn shifted_orbit(&mut self, rows: &[Vec<u32>], j: u32) -> Option<Poly> {
        let shifted: Rows = rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r[0] += j;
                r
            })
            .collect();
        self.orbit(&shifted)
    }

    fn orbit_sorted(&mut self, m: Rows) -> Option<Poly> {
        if let Some(p) = self.memo.get(&m) {
            return p.clone();
        }
        let d: u32 = m.first().map_or(0, |r| r.iter().sum());
        let result = if d == 0 {
            Some(Poly::one(&self.ring))
        } else if d == 1 {
            Some(self.sigma(&delta(&m)))
        } else {
            match self.reduce(&m) {
                Some(p) if p.is_integral() => Some(p),
                greedy => {
                    let (key, a) = self.class_of(&m);
                    let size = self.classes[&key].orbits.len();
                    let mut rhs = vec![Rational::zero(); size];
                    rhs[a] = Rational::one();
                    match self.solve(&key, &rhs) {
                        Some(p) if p.is_integral() => Some(p),
                        other => greedy.or(other),
                    }
                }
            }
        };
        self.memo.insert(m, result.clone());
        result
    }

    /// One induction step: `P_m = σ_{δ(m_0)} P_{m_1} - Σ c_r P_r`.
    ///
    /// Every correction orbit `r` has a greedy divisor `r_0` with
    /// `δ(r_0) ≥ δ(m_0)`, and equality forces `r = u·m_1` with `u` a
    /// rearrangement of `m_0`. Such ties give the same equation for `m` and
    /// `r`, so the step cannot separate them and `None` is returned. Otherwise
    /// `δ(r_0)` strictly grows, which bounds the recursion. `None` is also
    /// returned when a term of the step has no decomposition.
    fn reduce(&mut self, m: &Rows) -> Option<Poly> {
        let (m0, m1) = greedy_split(m);
        let m1_sorted = sorted_desc(m1.clone());
        let d0 = delta(&m0);

        let arrangements = distinct_arrangements(&m0);
        let mut candidates: BTreeSet<Rows> = BTreeSet::new();
        for a in &arrangements {
            let r: Rows = a
                .iter()
                .zip(&m1)
                .map(|(u, v)| u.iter().zip(v).map(|(x, y)| x + y).collect())
                .collect();
            candidates.insert(sorted_desc(r));
        }
        let mut corrections = Vec::new();
        for r in candidates {
            if r == *m {
                continue;
            }
            let (r0, r1) = greedy_split(&r);
            if delta(&r0) == d0 && sorted_desc(r1) == m1_sorted {
                return None;
            }
            // Number of ways to write r = u·v with u in the orbit of m_0 and v in that of m_1.
            let c = arrangements
                .iter()
                .filter(|u| {
                    u.iter()
                        .zip(&r)
                        .all(|(ur, rr)| ur.iter().zip(rr).all(|(a, b)| a <= b))
                })
                .filter(|u| {
                    let rest: Rows = r
                        .iter()
                        .zip(u.iter())
                        .map(|(rr, ur)| rr.iter().zip(ur).map(|(a, b)| a - b).collect())
                        .collect();
                    sorted_desc(rest) == m1_sorted
                })
                .count();
            corrections.push((r, c));
        }
        let mut result = &self.sigma(&d0) * &self.orbit_sorted(m1_sorted)?;
        for (r, c) in corrections {
            let corr = self.orbit_sorted(r)?;
            result = &result - &corr.scale(&Rational::from_integer(BigInt::from(c)));
        }
        Some(result)
    }

    /// The class key of `m` and the position of `m` within it.
    fn class_of(&mut self, m: &Rows) -> ((u32, Vec<u32>), usize) {
        let d: u32 = m[0].iter().sum();
        let key = (d, delta(m).0);
        if !self.classes.contains_key(&key) {
            let sys = self.build_class(d, &delta(m));
            self.classes.insert(key.clone(), sys);
        }
        let a = self.classes[&key].orbits[m];
        (key, a)
    }

    fn build_class(&mut self, d: u32, target: &MultiIndex) -> ClassSystem {
        let xring = point_family_ring(self.n, self.count);
        if self.sigmas.is_none() {
            self.sigmas = Some(sigma_table(self.n, self.count).into_iter().map(|(_, p)| p).collect());
        }
        let sigmas = self.sigmas.as_ref().unwrap();
        let labels = enumerate_exponents(self.n, d);
        let orbits: Vec<Rows> = multisets(labels.len(), self.count)
            .into_iter()
            .map(|idx| sorted_desc(idx.iter().map(|&i| labels[i].0.clone()).collect()))
            .filter(|r| delta(r) == *target)
            .collect();
        let alphas = enumerate_exponents(self.n, self.count as u32);
        let monos: Vec<Vec<usize>> = multisets(alphas.len(), d as usize)
            .into_iter()
            .filter(|idx| {
                let rows: Rows = idx.iter().map(|&i| alphas[i].0.clone()).collect();
                delta(&rows) == *target
            })
            .collect();
        let expansions: Vec<Poly> = monos
            .iter()
            .map(|idx| idx.iter().fold(Poly::one(&xring), |acc, &i| &acc * &sigmas[i]))
            .collect();
        let matrix: Vec<Vec<BigInt>> = orbits
            .iter()
            .map(|o| {
                let mono = monomial_of_rows(&xring, o);
                expansions.iter().map(|e| e.coeff(&mono).to_integer()).collect()
            })
            .collect();
        let solver = IntegerSolver::new(&matrix);
        ClassSystem {
            orbits: orbits.into_iter().enumerate().map(|(i, o)| (o, i)).collect(),
            monos,
            matrix,
            solver,
        }
    }

    /// Solve `Σ_a rhs_a P_a` (orbits of one class) in the `σ`-monomials,
    /// preferring integer coefficients.
    fn solve(&self, key: &(u32, Vec<u32>), rhs: &[Rational]) -> Option<Poly> {
        let sys = &self.classes[key];
        let l = rhs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let scaled: Vec<BigInt> = rhs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let coeffs: Vec<Rational> = match sys.solver.solve(&scaled) {
            Some(c) => c
                .into_iter()
                .map(|x| Rational::new(x, l.clone()))
                .collect(),
            None => {
                let m: Vec<Vec<Rational>> = sys
                    .matrix
                    .iter()
                    .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
                    .collect();
                solve_rational(&m, rhs)?
            }
        };
        let alphas = self.index.len();
        let mut terms = Vec::new();
        for (idx, c) in sys.monos.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            let mut e = vec![0u32; alphas];
            for &i in idx {
                e[i] += 1;
            }
            terms.push((Monomial::from_blocks(&self.ring, &[(0, &e)]), c));
        }
        Some(Poly::from_terms(&self.ring, terms))
    }

    /// `Σ c_m P_m` in the `σ_α`, for orbit representatives `m` of a common
    /// degree. Orbits without a decomposition of their own may still combine
    /// into a decomposable sum; each `δ`-class is then solved as a whole.
    pub fn combination(&mut self, terms: &[(Rows, Rational)]) -> Result<Poly> {
        let mut classes: BTreeMap<Vec<u32>, Vec<(Rows, Rational)>> = BTreeMap::new();
        for (rows, c) in terms {
            let m = sorted_desc(rows.clone());
            classes.entry(delta(&m).0).or_default().push((m, c.clone()));
        }
        let mut out = Poly::zero(&self.ring);
        for (dl, members) in classes {
            let single: Option<Vec<Poly>> = members
                .iter()
                .map(|(m, c)| self.orbit_sorted(m.clone()).map(|p| p.scale(c)))
                .collect();
            let part = match single {
                Some(ps) => ps.iter().fold(Poly::zero(&self.ring), |a, p| &a + p),
                None => {
                    let (key, _) = self.class_of(&members[0].0);
                    let mut rhs = vec![Rational::zero(); self.classes[&key].orbits.len()];
                    for (m, c) in &members {
                        rhs[self.classes[&key].orbits[m]] += c;
                    }
                    self.solve(&key, &rhs).ok_or_else(|| Error::NotDecomposable {
                        class: format!("{:?}", dl),
                    })?
                }
            };
            out = &out + &part;
        }
        Ok(out)
    }

    /// Whether the orbit sums of degree `d` are spanned by the
    /// `σ`-monomials over ℚ, checked class by class.
    pub fn spans(&mut self, d: u32) -> bool {
        let labels = enumerate_exponents(self.n, d);
        let mut seen = BTreeSet::new();
        for idx in multisets(labels.len(), self.count) {
            let m: Rows = sorted_desc(idx.iter().map(|&i| labels[i].0.clone()).collect());
            let dl = delta(&m).0;
            if !seen.insert(dl) {
                continue;
            }
            let (key, _) = self.class_of(&m);
            let sys = &self.classes[&key];
            if sys.solver.rank() < sys.orbits.len() {
                return false;
            }
        }
        true
    }
}

/// A polynomial in the symbols `σ_α` (group `s`), possibly together with the
/// coefficient symbols `T*_α` (group `T`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaExpr {
    poly: Poly,
    n: usize,
    count: usize,
}

impl SigmaExpr {
    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The number `D` of copies.
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn is_integral(&self) -> bool {
        self.poly.is_integral()
    }

    /// Substitute the elementary polynomials for the `σ_α`.
    pub fn expand(&self) -> Result<Poly> {
        let ring = self.poly.ring();
        let sblock = ring.block_index(&crate::ring::BlockRef::new(SIGMA_GROUP, 0))?;
        let target = Arc::new(ring.without_block(sblock).union(&point_family_ring(self.n, self.count))?);
        let images: Vec<Poly> = sigma_table(self.n, self.count)
            .into_iter()
            .map(|(_, p)| p.embed(&target))
            .collect::<Result<_>>()?;
        self.poly.substitute_blocks(&[(sblock, &images)], &target)
    }
}

impl fmt::Display for SigmaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Write a symmetric polynomial in the copies of the family `family` as a
/// polynomial in the `σ_α`.
pub fn decompose_symmetric(ctx: &mut Context, p: &Poly, family: &str) -> Result<SigmaExpr> {
    let ring = p.ring().clone();
    let blocks = ring.family_blocks(family)?;
    let count = blocks.len();
    let n = ring.group(family).unwrap().dim;
    let used = p.blocks_used();
    if let Some(b) = (0..ring.num_blocks()).find(|b| used[*b] && !blocks.contains(b)) {
        return Err(Error::ForeignVariables {
            group: ring.block_name(b),
        });
    }
    let sring = ctx.decomposer(n, count).ring().clone();
    if p.is_zero() {
        return Ok(SigmaExpr {
            poly: Poly::zero(&sring),
            n,
            count,
        });
    }
    let mut d = None;
    for &b in &blocks {
        match p.block_degree(b) {
            Homogeneity::Degree(e) => match d {
                None => d = Some((b, e)),
                Some((b0, e0)) if e0 != e => {
                    return Err(Error::UnequalDegrees {
                        first: ring.block_name(b0),
                        second: ring.block_name(b),
                    })
                }
                _ => {}
            },
            _ => {
                return Err(Error::NotHomogeneous {
                    group: ring.block_name(b),
                })
            }
        }
    }
    for i in 1..count {
        if p.swap_blocks(blocks[i - 1], blocks[i]) != *p {
            return Err(Error::NotSymmetric { i: i - 1, j: i });
        }
    }
    let terms: Vec<(Rows, Rational)> = p
        .terms()
        .filter_map(|(m, c)| {
            let rows: Rows = blocks.iter().map(|&b| m.block_exponents(&ring, b).to_vec()).collect();
            rows.windows(2).all(|w| w[0] >= w[1]).then(|| (rows, c.clone()))
        })
        .collect();
    let out = ctx.decomposer(n, count).combination(&terms)?;
    Ok(SigmaExpr { poly: out, n, count })
}

/// Largest power of `σ_{D e_0}` tried as a denominator of a wedge table.
const MAX_SHIFT: u32 = 4;

/// `F ∧ G_D = ∏_{i<D} F(X_i)` for the generic form `F = Σ T*_α X^α` of
/// degree `d`, written as `N / σ_{D e_0}^j` with `N` a polynomial in the
/// `T*_α` and `σ_β`.
///
/// When every coefficient of `F ∧ G_D` lies in `ℤ[σ]` then `j = 0`. This fails
/// for some `(n, d, D)`, for instance `(2, 2, 3)`. Dehomogenising at the first
/// coordinate shows that multiplying by a power of `σ_{D e_0}` lands in
/// `ℚ[σ]`, and `j` is the least power that does so. `N` need not be integral
/// then: for `(2, 2, 3)` the quotient lattice has order 3 at every shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeTable {
    numerator: SigmaExpr,
    shift: u32,
}

impl WedgeTable {
    pub fn numerator(&self) -> &SigmaExpr {
        &self.numerator
    }

    /// The power `j` of `σ_{D e_0}` in the denominator.
    pub fn shift(&self) -> u32 {
        self.shift
    }

    pub fn is_polynomial(&self) -> bool {
        self.shift == 0
    }

    /// `σ_{D e_0}` as a polynomial in the table ring.
    pub fn denominator_base(&self) -> Poly {
        let ring = self.numerator.poly.ring();
        let mut a = vec![0u32; self.numerator.n + 1];
        a[0] = self.numerator.count as u32;
        let idx = enumerate_exponents(self.numerator.n, self.numerator.count as u32)
            .iter()
            .position(|b| b.0 == a)
            .unwrap();
        Poly::var(ring, 1, idx)
    }
}

impl fmt::Display for WedgeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shift == 0 {
            return self.numerator.fmt(f);
        }
        let mut a = vec![0u32; self.numerator.n + 1];
        a[0] = self.numerator.count as u32;
        let idx: Vec<alloc::string::String> = a.iter().map(|x| format!("{x}")).collect();
        write!(f, "({}) / s[{}]", self.numerator, idx.join(","))?;
        if self.shift > 1 {
            write!(f, "^{}", self.shift)?;
        }
        Ok(())
    }
}

/// The wedge table of `(n, d, D)`. The coefficient of `T*^M` for a multiset
/// `M ⊆ ℕ_d` of size `D` is the orbit sum of any `∏ X_i^{α_i}` with
/// `{α_i} = M`.
pub fn wedge_table(ctx: &mut Context, n: usize, d: u32, count: usize) -> Result<WedgeTable> {
    ctx.limits().check_table(n, d, count)?;
    let key = (n, d, count);
    if let Some(t) = ctx.cached_table(key) {
        return Ok(t.clone());
    }
    let ring = table_ring(n, d, count);
    let labels = enumerate_exponents(n, d);
    let dec = ctx.decomposer(n, count);
    let entries: Vec<(Vec<u32>, Rows)> = multisets(labels.len(), count)
        .into_iter()
        .map(|idx| {
            let mut texp = vec![0u32; labels.len()];
            for &i in &idx {
                texp[i] += 1;
            }
            (texp, idx.iter().map(|&i| labels[i].0.clone()).collect())
        })
        .collect();
    let mut found = None;
    for shift in 0..=MAX_SHIFT {
        let c: Option<Vec<Poly>> = entries.iter().map(|(_, rows)| dec.shifted_orbit(rows, shift)).collect();
        if let Some(c) = c {
            found = Some((shift, c));
            break;
        }
    }
    let Some((shift, coeffs)) = found else {
        return Err(Error::NotDecomposable {
            class: format!("wedge table ({n}, {d}, {count})"),
        });
    };
    let mut out = Poly::zero(&ring);
    for ((texp, _), c) in entries.iter().zip(coeffs) {
        let t = Poly::term(&ring, Monomial::from_blocks(&ring, &[(0, texp)]), Rational::one());
        out = &out + &(&t * &c.embed(&ring)?);
    }
    let t = WedgeTable {
        numerator: SigmaExpr { poly: out, n, count },
        shift,
    };
    ctx.store_table(key, t.clone());
    Ok(t)
}
