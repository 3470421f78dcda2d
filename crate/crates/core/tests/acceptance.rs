//! Acceptance criteria 1-11, one line each.
//!
//! Every comparison is exact over ℚ, so the pinned tolerance is zero for all
//! criteria. A criterion can end in three ways:
//!
//! * `PASS`: the stated property held on every generated case.
//! * `FAIL (known)`: the property is false as stated. The line carries a
//!   counterexample, and the checks that do hold are still asserted.
//! * `FAIL`: a regression. The process exits nonzero.

#![allow(clippy::needless_range_loop)]

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use chowkit_core::alternating::{
    det_transform_check, dual_family_ring, elementary_alternating, exchanged, is_alternating_family,
    minor_representation, sharp, DUAL_FAMILY,
};
use chowkit_core::chow::{
    chow_ambient, chow_hypersurface, chow_points, intersects_system, meets, membership, projection, FinitePointSet,
};
use chowkit_core::numfield::NumberField;
use chowkit_core::numres::{normalized_point_resultant, point_resultant, segre, veronese, AlgebraicPoint};
use chowkit_core::ring::enumerate_exponents;
use chowkit_core::symfun::{decompose_symmetric, point_family_ring, POINT_FAMILY};
use chowkit_core::univariate::UniPoly;
use chowkit_core::wedge::{expand_split, iterated_wedge, macaulay, wedge_coeff, wedge_split, SplitForm};
use chowkit_core::{BlockRef, Context, Error, GroupDecl, GroupKind, Limits, Monomial, Poly, Rational, Ring};
use common::*;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const TOLERANCE: &str = "exact";

/// Sign `s` with `wedge_coeff(f, g) = s · Sylvester(f, h)` for binary forms,
/// indexed by `[d][D]`; equal to `(-1)^{dD}`.
const SYLVESTER_SIGN: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, 1, 1], [1, -1, 1, -1]];

/// Sign `s` with `macaulay(F) = s · det(coefficients)` for `n + 1` linear
/// forms, indexed by `n`.
const MACAULAY_SIGN: [i64; 4] = [1, 1, 1, 1];

struct Outcome {
    pass: bool,
    known: bool,
    detail: String,
}

impl Outcome {
    fn pass(detail: String) -> Self {
        Outcome { pass: true, known: false, detail }
    }

    fn known_failure(detail: String) -> Self {
        Outcome { pass: false, known: true, detail }
    }
}

fn dual(n: usize) -> Arc<Ring> {
    dual_family_ring(DUAL_FAMILY, n, 1)
}

fn l0() -> BlockRef {
    BlockRef::new(DUAL_FAMILY, 0)
}

fn rand_point(r: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    rand_vec(r, n + 1, 4)
}

/// A random form of degree `d` vanishing at `x`, by correcting the
/// coefficient of `X_k^d` for some `x_k ≠ 0`.
fn form_through(r: &mut ChaCha8Rng, ring: &Arc<Ring>, d: u32, x: &[Rational]) -> Poly {
    let f = rand_form(r, ring, 0, d, 4);
    let k = x.iter().position(|c| !c.is_zero()).unwrap();
    let mut e = vec![0u32; x.len()];
    e[k] = d;
    let mono = Poly::term(ring, Monomial::from_blocks(ring, &[(0, &e)]), Rational::one());
    let fix = eval_at(&f, 0, x) / num_traits::pow(x[k].clone(), d as usize);
    let g = &f - &mono.scale(&fix);
    if g.is_zero() {
        form_through(r, ring, d, x)
    } else {
        g
    }
}

// ---------------------------------------------------------------- 1

fn permute_copies(p: &Poly, perm: &[usize]) -> Poly {
    let ring = p.ring().clone();
    let subs: Vec<(usize, Vec<Poly>)> = perm
        .iter()
        .enumerate()
        .map(|(i, &j)| (i, (0..ring.block_len(j)).map(|s| Poly::var(&ring, j, s)).collect()))
        .collect();
    let refs: Vec<(usize, &[Poly])> = subs.iter().map(|(b, v)| (*b, v.as_slice())).collect();
    p.substitute_blocks(&refs, &ring).unwrap()
}

fn symmetrize(p: &Poly, count: usize) -> Poly {
    permutations(count).iter().fold(Poly::zero(p.ring()), |acc, perm| &acc + &permute_copies(p, perm))
}

fn rows_monomial(ring: &Ring, rows: &[Vec<u32>]) -> Monomial {
    let e: Vec<(usize, &[u32])> = rows.iter().enumerate().map(|(i, r)| (i, r.as_slice())).collect();
    Monomial::from_blocks(ring, &e)
}

/// Orbit representatives: non-increasing sequences of `count` exponents.
fn orbit_reps(n: usize, count: usize, d: u32) -> Vec<Vec<Vec<u32>>> {
    let exps: Vec<Vec<u32>> = enumerate_exponents(n, d).into_iter().map(|a| a.0).collect();
    let mut out = vec![vec![]];
    for _ in 0..count {
        out = out
            .into_iter()
            .flat_map(|rows: Vec<Vec<u32>>| {
                exps.iter()
                    .filter(|e| rows.last().is_none_or(|l| *e <= l))
                    .map(|e| {
                        let mut r = rows.clone();
                        r.push(e.clone());
                        r
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

fn orbit(ring: &Arc<Ring>, rows: &[Vec<u32>]) -> Poly {
    let mono: BTreeSet<Vec<Vec<u32>>> = permutations(rows.len())
        .into_iter()
        .map(|p| p.iter().map(|&i| rows[i].clone()).collect())
        .collect();
    mono.iter()
        .fold(Poly::zero(ring), |acc, r| &acc + &Poly::term(ring, rows_monomial(ring, r), Rational::one()))
}

/// `σ_α` as the coefficients of `∏_i (L·X_i)`, expanded directly.
fn sigmas(n: usize, count: usize) -> Vec<Poly> {
    let xr = point_family_ring(n, count);
    let ring = Arc::new(Ring::new(vec![GroupDecl::single("L", GroupKind::Dual, n), xr.groups()[0].clone()]).unwrap());
    let g = (0..count).fold(Poly::one(&ring), |acc, i| {
        let lin = (0..=n).fold(Poly::zero(&ring), |s, k| &s + &(&Poly::var(&ring, 0, k) * &Poly::var(&ring, i + 1, k)));
        &acc * &lin
    });
    let coeffs = g.block_coefficients(0, &xr).unwrap();
    enumerate_exponents(n, count as u32).into_iter().map(|a| coeffs[&a.0].clone()).collect()
}

fn rank_mod_p(mut a: Vec<Vec<i64>>) -> usize {
    const P: i64 = 1_000_000_007;
    let inv = |x: i64| {
        let (mut b, mut e, mut r) = (x.rem_euclid(P), P - 2, 1i64);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % P;
            }
            b = b * b % P;
            e >>= 1;
        }
        r
    };
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..a.len()).find(|&r| a[r][c].rem_euclid(P) != 0) else {
            continue;
        };
        a.swap(r, rank);
        let iv = inv(a[rank][c]);
        for r in 0..a.len() {
            if r != rank {
                let f = a[r][c].rem_euclid(P) * iv % P;
                if f != 0 {
                    for k in c..cols {
                        a[r][k] = (a[r][k] - f * a[rank][k] % P).rem_euclid(P);
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

fn criterion_1() -> Outcome {
    let mut ctx = Context::new();
    let mut r = rng(1);
    let shapes: Vec<(usize, usize, u32)> =
        (1..=2).flat_map(|n| (1..=3).flat_map(move |c| (1..=3).map(move |d| (n, c, d)))).collect();
    let (mut total, mut round_trips, mut integral) = (0, 0, 0);
    let mut outside: BTreeSet<(usize, usize, u32)> = BTreeSet::new();
    let mut fractional: BTreeSet<(usize, usize, u32)> = BTreeSet::new();
    for k in 0..216 {
        let (n, count, d) = shapes[k % shapes.len()];
        let ring = point_family_ring(n, count);
        let exps: Vec<Vec<u32>> = enumerate_exponents(n, d).into_iter().map(|a| a.0).collect();
        let seed = (0..r.gen_range(1..=3)).fold(Poly::zero(&ring), |acc, _| {
            let rows: Vec<Vec<u32>> = (0..count).map(|_| exps.choose(&mut r).unwrap().clone()).collect();
            let c = loop {
                let c = rand_int(&mut r, 5);
                if !c.is_zero() {
                    break c;
                }
            };
            &acc + &Poly::term(&ring, rows_monomial(&ring, &rows), c)
        });
        let sym = symmetrize(&seed, count);
        if sym.is_zero() {
            continue;
        }
        total += 1;
        match decompose_symmetric(&mut ctx, &sym, POINT_FAMILY) {
            Ok(e) => {
                assert_eq!(e.expand().unwrap(), sym, "round trip at {:?}", (n, count, d));
                round_trips += 1;
                if e.is_integral() {
                    integral += 1;
                } else {
                    fractional.insert((n, count, d));
                }
            }
            Err(Error::NotDecomposable { .. }) => {
                outside.insert((n, count, d));
            }
            Err(e) => panic!("{e}"),
        }
    }

    // Certificate over ℚ at n = 2, D = 3, d = 2: degree-2 monomials in the ten
    // σ_α number 55, while the orbit sums, being linearly independent, number 56.
    let reps = orbit_reps(2, 3, 2);
    let products = 10 * 11 / 2;
    assert_eq!((reps.len(), products), (56, 55));
    let ring = point_family_ring(2, 3);
    let missing = reps
        .iter()
        .filter(|rows| matches!(decompose_symmetric(&mut ctx, &orbit(&ring, rows), POINT_FAMILY), Err(Error::NotDecomposable { .. })))
        .count();
    assert!(missing > 0);

    // Certificate over ℤ at n = 2, D = 3, d = 3: the 220 products of three σ_α
    // are a basis of the 220-dimensional space, so coefficients are unique and
    // a fractional one rules out any integral expression.
    let reps = orbit_reps(2, 3, 3);
    let s = sigmas(2, 3);
    let mut matrix = Vec::new();
    for i in 0..s.len() {
        for j in i..s.len() {
            for k in j..s.len() {
                let prod = &(&s[i] * &s[j]) * &s[k];
                matrix.push(
                    reps.iter()
                        .map(|rows| i64::try_from(prod.coeff(&rows_monomial(&ring, rows)).to_integer()).unwrap())
                        .collect::<Vec<_>>(),
                );
            }
        }
    }
    assert_eq!((matrix.len(), rank_mod_p(matrix)), (220, 220));
    let (witness, expr) = reps
        .iter()
        .find_map(|rows| {
            let o = orbit(&ring, rows);
            let e = decompose_symmetric(&mut ctx, &o, POINT_FAMILY).unwrap();
            assert_eq!(e.expand().unwrap(), o);
            (!e.is_integral()).then_some((o, e))
        })
        .expect("a fractional decomposition");
    let denominators: BTreeSet<String> = expr.poly().terms().map(|(_, c)| c.denom().to_string()).collect();

    let detail = format!(
        "{round_trips}/{total} decomposed inputs round-trip exactly; {integral} with integer coefficients; \
         outside ℤ[σ]⊗ℚ at (n,D,d) ∈ {outside:?} (55 σ-products < 56 orbits at (2,3,2)); \
         fractional at {fractional:?} (products form a basis at (2,3,3), {witness} needs denominators {denominators:?})"
    );
    if round_trips == total && integral == total {
        Outcome::pass(detail)
    } else {
        Outcome::known_failure(detail)
    }
}

// ---------------------------------------------------------------- 2

fn criterion_2() -> Outcome {
    let mut ctx = Context::new();
    let mut r = rng(2);
    let mut cases = 0;
    for k in 0..216 {
        let n = 1 + k % 2;
        let d = (k / 2 % 4) as u32;
        let big_d = 1 + k / 8 % 3;
        let points: Vec<Vec<Rational>> = (0..big_d).map(|_| rand_point(&mut r, n)).collect();
        let g = SplitForm::new(rand_vec(&mut r, 1, 3)[0].clone(), points).unwrap();
        let x = pring(n);
        let f = rand_form(&mut r, &x, 0, d, 4);
        let coeff = expand_split(&g, &dual(n), &l0()).unwrap();
        let lhs = wedge_coeff(&mut ctx, &f, &coeff, &l0()).unwrap();
        let rhs = wedge_split(&f, &BlockRef::new("X", 0), &g).unwrap();
        assert_eq!(lhs.as_constant(), rhs.as_constant(), "n={n} d={d} D={big_d}");
        cases += 1;
    }
    Outcome::pass(format!("{cases} random split forms, n ≤ 2, d ≤ 3, D ≤ 3"))
}

// ---------------------------------------------------------------- 3

fn criterion_3() -> Outcome {
    let mut ctx = Context::new();
    let mut r = rng(3);
    let x = pring(1);
    let lr = dual(1);
    let mut cases = 0;
    for k in 0..160 {
        let (d, big_d) = ((k % 4) as u32, (k / 4 % 4) as u32);
        let f = rand_form(&mut r, &x, 0, d, 6);
        let g = rand_form(&mut r, &lr, 0, big_d, 6);
        let w = wedge_coeff(&mut ctx, &f, &g, &l0()).unwrap().as_constant().unwrap();
        // h(X) = g(-X1, X0) vanishes at the points of the split of g.
        let h = g
            .substitute_blocks(&[(0, &[-&Poly::var(&x, 0, 1), Poly::var(&x, 0, 0)])], &x)
            .unwrap();
        let s = sylvester(&binary_coeffs(&f, 0, d), &binary_coeffs(&h, 0, big_d));
        assert_eq!(w, s * q(SYLVESTER_SIGN[d as usize][big_d as usize]), "d={d} D={big_d}");
        cases += 1;
    }
    Outcome::pass(format!("{cases} random pairs, d, D ≤ 3; sign table (-1)^(dD) frozen"))
}

// ---------------------------------------------------------------- 4

fn linear_matrix(fs: &[Poly]) -> Vec<Vec<Rational>> {
    let ring = fs[0].ring();
    let len = ring.block_len(0);
    fs.iter()
        .map(|f| {
            (0..len)
                .map(|s| {
                    let mut e = vec![0u32; len];
                    e[s] = 1;
                    f.coeff(&Monomial::from_blocks(ring, &[(0, &e)]))
                })
                .collect()
        })
        .collect()
}

fn criterion_4() -> Outcome {
    let mut ctx = Context::new();
    let mut r = rng(4);
    let mut generic = 0;
    for k in 0..60 {
        let n = 1 + k % 3;
        let x = pring(n);
        let fs: Vec<Poly> = (0..=n).map(|_| rand_form(&mut r, &x, 0, 1, 5)).collect();
        let m = macaulay(&mut ctx, &fs).unwrap().as_constant().unwrap_or_else(Rational::zero);
        assert_eq!(m, gauss_det(linear_matrix(&fs)) * q(MACAULAY_SIGN[n]));
        generic += 1;
    }
    let mut zeros = 0;
    for k in 0..60 {
        let n = 1 + k % 3;
        let x = pring(n);
        let p = rand_point(&mut r, n);
        let degrees: Vec<u32> = (0..=n)
            .map(|_| if n == 3 || k % 2 == 0 { 1 } else { r.gen_range(1..=2) })
            .collect();
        let fs: Vec<Poly> = degrees.iter().map(|&d| form_through(&mut r, &x, d, &p)).collect();
        assert!(macaulay(&mut ctx, &fs).unwrap().is_zero(), "common zero {p:?}");
        zeros += 1;
    }
    Outcome::pass(format!(
        "{generic} linear systems of size 2-4 match det with frozen sign +1; {zeros} systems with a common rational zero give 0"
    ))
}

// ---------------------------------------------------------------- 5

fn split_coeff(r: &mut ChaCha8Rng, n: usize, big_d: usize) -> (SplitForm, Poly) {
    let points: Vec<Vec<Rational>> = (0..big_d).map(|_| rand_point(r, n)).collect();
    let g = SplitForm::new(rand_vec(r, 1, 3)[0].clone(), points).unwrap();
    let c = expand_split(&g, &dual(n), &l0()).unwrap();
    (g, c)
}

fn criterion_5() -> Outcome {
    let mut ctx = Context::new();
    let mut r = rng(5);
    let wedge = |ctx: &mut Context, f: &Poly, g: &Poly| wedge_coeff(ctx, f, g, &l0()).unwrap();
    for k in 0..100 {
        let n = 1 + k % 2;
        let x = pring(n);
        let (d1, d2) = [(1, 1), (1, 2), (2, 1), (0, 2)][k / 2 % 4];
        let (_, g) = split_coeff(&mut r, n, 1 + k / 8 % 3);
        let f1 = rand_form(&mut r, &x, 0, d1, 4);
        let f2 = rand_form(&mut r, &x, 0, d2, 4);
        assert_eq!(wedge(&mut ctx, &(&f1 * &f2), &g), &wedge(&mut ctx, &f1, &g) * &wedge(&mut ctx, &f2, &g));
    }
    for k in 0..100 {
        let n = 1 + k % 2;
        let x = pring(n);
        let (a, b) = [(1, 1), (1, 2), (2, 1)][k / 2 % 3];
        let (_, g1) = split_coeff(&mut r, n, a);
        let (_, g2) = split_coeff(&mut r, n, b);
        let f = rand_form(&mut r, &x, 0, 1 + (k / 6 % 3) as u32, 4);
        assert_eq!(wedge(&mut ctx, &f, &(&g1 * &g2)), &wedge(&mut ctx, &f, &g1) * &wedge(&mut ctx, &f, &g2));
    }
    let (mut shifts, mut converse) = (0, 0);
    for k in 0..200 {
        if shifts == 100 {
            break;
        }
        let n = 1 + k % 2;
        let d = 1 + (k / 2 % 3) as u32;
        let big_d = 1 + k / 6 % 3;
        let (split, g) = split_coeff(&mut r, n, big_d);
        let x = pring(n);
        let Some(f) = form_through_all(&mut r, &x, d, split.points()) else {
            continue;
        };
        let ring = coeff_pring(n, &[("T", d)]);
        let h = generic_form(&ring, 0, 1, d);
        let base = wedge(&mut ctx, &h, &g);
        let fr = f.embed(&ring).unwrap();
        assert_eq!(wedge(&mut ctx, &(&fr + &h), &g), base, "shift law, n={n} d={d} D={big_d}");
        // A form missing one of the (distinct) points moves the wedge.
        let miss = loop {
            let e = rand_form(&mut r, &x, 0, d, 4);
            if split.points().iter().any(|p| !eval_at(&e, 0, p).is_zero()) {
                break e.embed(&ring).unwrap();
            }
        };
        let distinct = split.points().iter().enumerate().all(|(i, a)| {
            split.points()[..i].iter().all(|b| !chowkit_core::chow::proportional(a, b))
        });
        if distinct {
            assert_ne!(wedge(&mut ctx, &(&(&fr + &miss) + &h), &g), base);
            converse += 1;
        }
        shifts += 1;
    }
    assert_eq!(shifts, 100);
    Outcome::pass(format!(
        "100 cases each of (f1 f2)∧g and f∧(g1 g2); (f+h)∧g = h∧g with h generic on {shifts}, converse on {converse}"
    ))
}

/// A random nonzero form of degree `d` vanishing at every point, from the
/// kernel of the evaluation matrix; `None` when only zero does.
fn form_through_all(r: &mut ChaCha8Rng, x: &Arc<Ring>, d: u32, pts: &[Vec<Rational>]) -> Option<Poly> {
    let n = x.block_len(0) - 1;
    let monos: Vec<Monomial> =
        enumerate_exponents(n, d).iter().map(|a| Monomial::from_blocks(x, &[(0, a.as_slice())])).collect();
    let mut rows: Vec<Vec<Rational>> = pts
        .iter()
        .map(|p| monos.iter().map(|m| eval_at(&Poly::term(x, m.clone(), Rational::one()), 0, p)).collect())
        .collect();
    // Reduced row echelon form, then one kernel vector per free column.
    let cols = monos.len();
    let mut pivots = Vec::new();
    for c in 0..cols {
        let Some(i) = (pivots.len()..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(i, pivots.len());
        let row = pivots.len();
        let inv = Rational::one() / rows[row][c].clone();
        rows[row] = rows[row].iter().map(|v| v * &inv).collect();
        for i in 0..rows.len() {
            if i != row && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                rows[i] = rows[i].iter().zip(&rows[row]).map(|(a, b)| a - &(&f * b)).collect();
            }
        }
        pivots.push(c);
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        return None;
    }
    let mut v = vec![Rational::zero(); cols];
    for &c in &free {
        v[c] = rand_int(r, 3);
    }
    if v.iter().all(Zero::is_zero) {
        v[free[0]] = Rational::one();
    }
    for (row, &c) in pivots.iter().enumerate() {
        v[c] = -free.iter().fold(Rational::zero(), |acc, &fc| acc + &rows[row][fc] * &v[fc]);
    }
    let f = Poly::from_terms(x, monos.into_iter().zip(v));
    assert!(pts.iter().all(|p| eval_at(&f, 0, p).is_zero()));
    Some(f)
}

// ---------------------------------------------------------------- 6

fn random_alternating(r: &mut ChaCha8Rng, n: usize, m: usize, degree: usize, terms: usize) -> Poly {
    let minors: Vec<Poly> = elementary_alternating(n, m).unwrap().into_values().collect();
    let ring = minors[0].ring().clone();
    (0..terms).fold(Poly::zero(&ring), |acc, _| {
        let prod = (0..degree).fold(Poly::constant(&ring, rand_int(r, 4)), |p, _| &p * minors.choose(r).unwrap());
        &acc + &prod
    })
}

fn criterion_6() -> Outcome {
    let mut r = rng(6);
    for k in 0..60 {
        let n = 1 + k % 3;
        let m = k / 3 % (n + 1);
        let deg = if m == 3 { 1 } else { 1 + k % 2 };
        let g = random_alternating(&mut r, n, m, deg, 1);
        let mat: Vec<Vec<Rational>> = (0..=m).map(|_| rand_vec(&mut r, m + 1, 3)).collect();
        assert!(det_transform_check(&g, DUAL_FAMILY, deg as u32, &mat).unwrap());
    }
    let non = Poly::var(&dual_family_ring(DUAL_FAMILY, 1, 2), 0, 0) * Poly::var(&dual_family_ring(DUAL_FAMILY, 1, 2), 1, 1);
    assert!(!det_transform_check(&non, DUAL_FAMILY, 1, &[qs(&[1, 1]), qs(&[0, 1])]).unwrap());

    let mut sharps = 0;
    for k in 0..60 {
        let n = 1 + k % 2;
        let top = k / 2 % n;
        let d = 1 + (k / 4 % 2) as u32;
        let g = random_alternating(&mut r, n, top, d as usize, 2);
        if g.is_zero() {
            continue;
        }
        // g lives in the copies L_0..L_top.
        let copies = g.ring().family_blocks(DUAL_FAMILY).unwrap().len();
        let s = sharp(&g, DUAL_FAMILY).unwrap();
        let sring = s.ring().clone();
        let yb = sring.num_blocks() - 1;
        let rest = Arc::new(sring.without_block(yb));
        let coeffs = s.block_coefficients(yb, &rest).unwrap();
        for i in 0..=copies {
            let mut e = vec![0u32; copies + 1];
            e[i] = d;
            let got = coeffs.get(&e).cloned().unwrap_or_else(|| Poly::zero(&rest));
            let shifted: Vec<(usize, Vec<Poly>)> = (0..copies)
                .map(|j| {
                    let t = if j < i { j } else { j + 1 };
                    (j, (0..=n).map(|c| Poly::var(&rest, t, c)).collect())
                })
                .collect();
            let refs: Vec<(usize, &[Poly])> = shifted.iter().map(|(b, v)| (*b, v.as_slice())).collect();
            let mut want = g.substitute_blocks(&refs, &rest).unwrap();
            if ((copies - i) as u32 * d) % 2 == 1 {
                want = -&want;
            }
            assert_eq!(got, want, "Y_{i}^{d} coefficient of sharp({g})");
        }
        sharps += 1;
    }

    for k in 0..30 {
        let n = 1 + k % 3;
        let g = random_alternating(&mut r, n, 1, 1 + k % 2, 2);
        assert_eq!(exchanged(&g, 0, 1), g);
        let g3 = random_alternating(&mut r, 2, 2, 1, 1);
        assert_eq!(exchanged(&g3, 0, 2), g3);
    }

    let x = pring(2);
    for k in 0..20 {
        let f = rand_form(&mut r, &x, 0, 2 + (k % 2) as u32, 4);
        let c = chow_hypersurface(&f).unwrap();
        assert!(is_alternating_family(c.poly(), DUAL_FAMILY).unwrap());
        let h = minor_representation(c.poly(), DUAL_FAMILY).unwrap();
        assert_eq!(h.normalized(), f.normalized());
    }
    Outcome::pass(format!(
        "det law on 60 random matrices; sharp Y_i^d coefficients on {sharps} forms; exchange law on 60; minor representation on 10 conics and 10 cubics"
    ))
}

// ---------------------------------------------------------------- 7

fn criterion_7() -> Outcome {
    let mut r = rng(7);
    let (mut sets, mut lambdas, mut members) = (0, 0, 0);
    for k in 0..12 {
        let n = 1 + k % 2;
        let size = 1 + k / 2 % 4;
        let pts: Vec<Vec<Rational>> = (0..size).map(|_| rand_point(&mut r, n)).collect();
        let w = FinitePointSet::rational(n, &pts).unwrap();
        let c = chow_points(&w).unwrap();
        for j in 0..300 {
            let lambda = if j % 2 == 0 {
                rand_vec(&mut r, n + 1, 5)
            } else {
                let x = pring(n);
                let through = pts.choose(&mut r).unwrap().clone();
                let f = form_through(&mut r, &x, 1, &through);
                linear_matrix(&[f]).remove(0)
            };
            let direct = pts.iter().any(|x| dot(&lambda, x).is_zero());
            assert_eq!(meets(&c, std::slice::from_ref(&lambda)).unwrap(), direct);
            lambdas += 1;
        }
        let mut tested: Vec<Vec<Rational>> = pts
            .iter()
            .map(|x| x.iter().map(|c| c * q(r.gen_range(1..=3))).collect())
            .collect();
        tested.extend((0..20).map(|_| rand_point(&mut r, n)));
        for x in &tested {
            assert_eq!(membership(&c, x).unwrap(), w.contains(x));
            members += 1;
        }
        sets += 1;
    }
    Outcome::pass(format!("{sets} point sets in ℙ¹ and ℙ² of size ≤ 4; {lambdas} λ checks; {members} membership checks"))
}

// ---------------------------------------------------------------- 8

/// A smooth conic through `p` together with a parametrization `φ` of it by
/// binary quadrics: `φ(q) = -Q(q) p + B(p, q) q` for `q = s a + t b`.
fn parametrized_conic(r: &mut ChaCha8Rng, p: &[Rational]) -> (Poly, Vec<Poly>) {
    let x = pring(2);
    let s = pring(1);
    loop {
        let conic = form_through(r, &x, 2, p);
        let gram: Vec<Vec<Rational>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        let mut e = vec![0u32; 3];
                        e[i] += 1;
                        e[j] += 1;
                        let c = conic.coeff(&Monomial::from_blocks(&x, &[(0, &e)]));
                        if i == j {
                            c
                        } else {
                            c / q(2)
                        }
                    })
                    .collect()
            })
            .collect();
        if gauss_det(gram).is_zero() {
            continue;
        }
        let k = p.iter().position(|c| !c.is_zero()).unwrap();
        let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
        let qv: Vec<Poly> = (0..3)
            .map(|i| {
                if i == others[0] {
                    Poly::var(&s, 0, 0)
                } else if i == others[1] {
                    Poly::var(&s, 0, 1)
                } else {
                    Poly::zero(&s)
                }
            })
            .collect();
        let qq = conic.substitute_blocks(&[(0, &qv)], &s).unwrap();
        let shifted: Vec<Poly> = (0..3).map(|i| &qv[i] + &Poly::constant(&s, p[i].clone())).collect();
        let b = &conic.substitute_blocks(&[(0, &shifted)], &s).unwrap() - &qq;
        let phi: Vec<Poly> = (0..3).map(|i| &(-&qq).scale(&p[i]) + &(&b * &qv[i])).collect();
        assert!(conic.substitute_blocks(&[(0, &phi)], &s).unwrap().is_zero());
        return (conic, phi);
    }
}

fn criterion_8() -> Outcome {
    let mut ctx = Context::new();
    let mut r = rng(8);
    let x = pring(2);
    let s = pring(1);
    let oracle = |q2: &Poly, l: &Poly, phi: &[Poly]| {
        let a = q2.substitute_blocks(&[(0, phi)], &s).unwrap();
        let b = l.substitute_blocks(&[(0, phi)], &s).unwrap();
        sylvester(&binary_coeffs(&a, 0, 4), &binary_coeffs(&b, 0, 2))
    };
    let (mut common, mut disjoint) = (0, 0);
    while common < 24 {
        let p = rand_point(&mut r, 2);
        let (q1, phi) = parametrized_conic(&mut r, &p);
        let q2 = form_through(&mut r, &x, 2, &p);
        let l = form_through(&mut r, &x, 1, &p);
        assert!(oracle(&q2, &l, &phi).is_zero());
        let c = chow_hypersurface(&q1).unwrap();
        assert!(intersects_system(&mut ctx, &c, &[q2, l]).unwrap());
        common += 1;
    }
    while disjoint < 24 {
        let p = rand_point(&mut r, 2);
        let (q1, phi) = parametrized_conic(&mut r, &p);
        let q2 = rand_form(&mut r, &x, 0, 2, 4);
        let l = rand_form(&mut r, &x, 0, 1, 4);
        if oracle(&q2, &l, &phi).is_zero() {
            continue;
        }
        let c = chow_hypersurface(&q1).unwrap();
        assert!(!intersects_system(&mut ctx, &c, &[q2, l]).unwrap());
        disjoint += 1;
    }
    Outcome::pass(format!(
        "conic ∩ conic ∩ line: {common} cases through a common rational point, {disjoint} certified empty by Sylvester after parametrizing"
    ))
}

// ---------------------------------------------------------------- 9

fn sign(perm: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                s = -s;
            }
        }
    }
    s
}

fn criterion_9() -> Outcome {
    let mut ctx = Context::new();
    let mut identities = 0;
    const NAMES: [&str; 3] = ["A", "B", "C"];
    // Binary forms: every degree pattern up to 2, against det and det².
    // Ternary forms: two generic forms against det, three generic linear
    // forms against det, and pairs against det².
    let mut jobs: Vec<(usize, Vec<u32>, u32)> = Vec::new();
    for big_d in 1..=2 {
        for d0 in 0..=2 {
            for d1 in 0..=2 {
                jobs.push((1, vec![d0, d1], big_d));
            }
        }
    }
    for d0 in 1..=2 {
        for d1 in 1..=2 {
            jobs.push((2, vec![d0, d1], 1));
        }
    }
    jobs.push((2, vec![1, 1, 1], 1));
    jobs.push((2, vec![1, 1, 2], 1));
    jobs.push((2, vec![1, 1], 2));
    jobs.push((2, vec![1, 2], 2));
    jobs.push((2, vec![1, 1, 1], 2));
    for (n, degrees, big_d) in jobs {
        let coeffs: Vec<(&str, u32)> = degrees.iter().enumerate().map(|(i, &d)| (NAMES[i], d)).collect();
        let ring = coeff_pring(n, &coeffs);
        let xb = degrees.len();
        let fs: Vec<Poly> = degrees.iter().enumerate().map(|(i, &d)| generic_form(&ring, i, xb, d)).collect();
        let c = chow_ambient(n, big_d).unwrap();
        let base = iterated_wedge(&mut ctx, &fs, c.poly(), c.family()).unwrap();
        let dprod: u32 = degrees.iter().product();
        for perm in permutations(fs.len()) {
            let permuted: Vec<Poly> = perm.iter().map(|&i| fs[i].clone()).collect();
            let w = iterated_wedge(&mut ctx, &permuted, c.poly(), c.family()).unwrap();
            let s = if (dprod * big_d) % 2 == 1 { sign(&perm) } else { 1 };
            assert_eq!(w, base.scale(&q(s)), "n={n} degrees={degrees:?} D={big_d} perm={perm:?}");
            identities += 1;
        }
    }
    Outcome::pass(format!("{identities} exact symbolic identities F^σ∧C = sgn(σ)^(dD) F∧C, n ≤ 2, degrees ≤ 2"))
}

// ---------------------------------------------------------------- 10

fn criterion_10() -> Outcome {
    let mut ctx = Context::new();
    let mut r = rng(10);
    let x = pring(2);
    let line = chow_hypersurface(&p("X2", &x)).unwrap();
    let pl = projection(&line, &[qs(&[1, 0, 0]), qs(&[0, 1, 0]), qs(&[0, 0, 1])]).unwrap();
    let y2 = p("Y2", pl.ring());
    assert!(pl == y2 || pl == -&y2, "P = {pl}");

    let mut identities = 0;
    let mut coefficient_checks = 0;
    for k in 0..24 {
        let conic = loop {
            let f = rand_form(&mut r, &x, 0, 2, 3);
            if !f.is_zero() {
                break f;
            }
        };
        let c = chow_hypersurface(&conic).unwrap();
        let lambda: Vec<Vec<Rational>> = (0..3).map(|_| rand_vec(&mut r, 3, 3)).collect();
        let pl = projection(&c, &lambda).unwrap();
        let yr = pl.ring().clone();
        let (d0, d1) = [(1, 1), (1, 2), (2, 1), (2, 2)][k % 4];
        let f0 = rand_form(&mut r, &yr, 0, d0, 3);
        let f1 = rand_form(&mut r, &yr, 0, d1, 3);
        let lhs = macaulay(&mut ctx, &[f0.clone(), f1.clone(), pl.clone()]).unwrap();
        let images: Vec<Poly> = lambda.iter().map(|l| Poly::linear_form(&x, 0, l)).collect();
        let composed: Vec<Poly> = [f0, f1].iter().map(|f| f.substitute_blocks(&[(0, &images)], &x).unwrap()).collect();
        let rhs = iterated_wedge(&mut ctx, &composed, c.poly(), c.family()).unwrap();
        assert_eq!(lhs, rhs);
        identities += 1;

        // Coefficient of Y_j^D, for the conic (D = 2) and a line (D = 1).
        let l = chow_hypersurface(&rand_form(&mut r, &x, 0, 1, 3)).unwrap();
        for form in [&c, &l] {
            let big_d = form.degree().unwrap();
            let pl = projection(form, &lambda).unwrap();
            for j in 0..3 {
                let mut e = vec![0u32; 3];
                e[j] = big_d;
                let got = pl.coeff(&Monomial::from_blocks(pl.ring(), &[(0, &e)]));
                let rest: Vec<Vec<Rational>> = (0..3).filter(|&i| i != j).map(|i| lambda[i].clone()).collect();
                let vals: Vec<(usize, &[Rational])> = rest.iter().enumerate().map(|(i, v)| (i, v.as_slice())).collect();
                let cv = form.poly().eval_blocks(&vals).unwrap().as_constant().unwrap_or_else(Rational::zero);
                let s = if ((2 - j) as u32 * big_d) % 2 == 1 { -cv } else { cv };
                assert_eq!(got, s);
                coefficient_checks += 1;
            }
        }
    }
    Outcome::pass(format!(
        "P_λ(line V(X2), coordinates) = ±Y2; f∧P_λ = (f∘λ)∧C on {identities} conics; {coefficient_checks} Y_j^D coefficients"
    ))
}

// ---------------------------------------------------------------- 11

fn criterion_11() -> Outcome {
    let limits = Limits::default();
    let field = |c: &[i64]| NumberField::new(UniPoly::from_ints(c), &limits).unwrap();
    let elem = |c: &[i64]| UniPoly::from_ints(c);
    let half = |p: UniPoly| p.scale(&(Rational::one() / q(2)));
    let dual_s = |n: usize, s: &str| p(s, &dual(n));

    let q2 = field(&[-2, 0, 1]);
    let sqrt2 = AlgebraicPoint::new(q2.clone(), vec![elem(&[0, 1]), elem(&[1])]).unwrap();
    let r = point_resultant(&sqrt2).unwrap();
    assert_eq!(r, dual_s(1, "L0_1^2 - 2*L0_0^2").normalized());

    // Degree law, fields of degree 1 to 4.
    let k4 = field(&[1, 0, -10, 0, 1]);
    let s2 = half(elem(&[0, -9, 0, 1]));
    let s3 = half(elem(&[0, 11, 0, -1]));
    let cases: Vec<(AlgebraicPoint, usize)> = vec![
        (AlgebraicPoint::rational(&qs(&[3, 1])).unwrap(), 1),
        (sqrt2.clone(), 2),
        (AlgebraicPoint::new(field(&[-2, 0, 0, 1]), vec![elem(&[0, 1]), elem(&[1])]).unwrap(), 3),
        (AlgebraicPoint::new(field(&[-2, 0, 0, 1]), vec![elem(&[0, 0, 1]), elem(&[0, 1]), elem(&[1])]).unwrap(), 3),
        (AlgebraicPoint::new(k4.clone(), vec![elem(&[0, 1]), elem(&[1])]).unwrap(), 4),
        (AlgebraicPoint::new(k4.clone(), vec![s2.clone(), s3.clone(), elem(&[1])]).unwrap(), 4),
        (AlgebraicPoint::new(k4.clone(), vec![s2.clone(), elem(&[1])]).unwrap(), 2),
        (AlgebraicPoint::new(field(&[1, 1, 1, 1, 1]), vec![elem(&[0, 1]), elem(&[1])]).unwrap(), 4),
    ];
    let mut rg = rng(11);
    for (xi, e) in &cases {
        let res = point_resultant(xi).unwrap();
        assert_eq!(res.max_block_degree(0) as usize, *e);
        assert_eq!(xi.subfield_degree(), *e);
        // R^[K:ℚ(x)] is the norm form N(μ·x) up to one constant factor.
        let k = xi.field();
        let norm = |mu: &[Rational]| {
            let lin = mu.iter().zip(xi.coords()).fold(UniPoly::zero(), |acc, (m, c)| &acc + &c.scale(m));
            gauss_det(k.multiplication_matrix(&lin))
        };
        let pw = k.degree() / e;
        let mut ratio: Option<Rational> = None;
        for _ in 0..25 {
            let mu = rand_vec(&mut rg, xi.dim() + 1, 4);
            let (v, nm) = (num_traits::pow(eval_at(&res, 0, &mu), pw), norm(&mu));
            assert_eq!(v.is_zero(), nm.is_zero());
            if !nm.is_zero() {
                let r = v / nm;
                assert_eq!(ratio.get_or_insert_with(|| r.clone()), &r);
            }
        }
    }

    // Veronese identity for quadratic points, d ≤ 2.
    let mut ctx = Context::new();
    let q3 = field(&[-3, 0, 1]);
    let quad_points = vec![
        sqrt2.clone(),
        AlgebraicPoint::new(q3.clone(), vec![elem(&[1, 1]), elem(&[2])]).unwrap(),
        AlgebraicPoint::new(q2.clone(), vec![elem(&[0, 1]), elem(&[1, 1]), elem(&[3])]).unwrap(),
        AlgebraicPoint::new(q3, vec![elem(&[2, -1]), elem(&[0, 1]), elem(&[1])]).unwrap(),
    ];
    let mut veronese_checks = 0;
    for xi in &quad_points {
        let n = xi.dim();
        for d in 1..=2u32 {
            let ring = coeff_pring(n, &[("T", d)]);
            let big_f = generic_form(&ring, 0, 1, d);
            let lhs = wedge_coeff(&mut ctx, &big_f, &point_resultant(xi).unwrap(), &l0()).unwrap();
            let v = point_resultant(&veronese(xi, d).unwrap()).unwrap();
            let tr = lhs.ring().clone();
            let images: Vec<Poly> = (0..tr.block_len(0)).map(|i| Poly::var(&tr, 0, i)).collect();
            let rhs = v.substitute_blocks(&[(0, &images)], &tr).unwrap();
            assert_eq!(lhs.normalized(), rhs.normalized());
            veronese_checks += 1;
        }
    }

    // Segre multiplicativity in ℚ(√2, √3) = ℚ(θ).
    let xi = AlgebraicPoint::new(k4.clone(), vec![s2, elem(&[1])]).unwrap();
    let up = AlgebraicPoint::new(k4.clone(), vec![s3, elem(&[1])]).unwrap();
    let eta = segre(&xi, &up).unwrap();
    let ab = Arc::new(
        Ring::new(vec![GroupDecl::single("A", GroupKind::Dual, 1), GroupDecl::single("B", GroupKind::Dual, 1)]).unwrap(),
    );
    let tensor: Vec<Poly> = (0..2)
        .flat_map(|s| (0..2).map(move |t| (s, t)))
        .map(|(s, t)| &Poly::var(&ab, 0, s) * &Poly::var(&ab, 1, t))
        .collect();
    let on = |f: &Poly, b: usize| {
        let images: Vec<Poly> = (0..2).map(|i| Poly::var(&ab, b, i)).collect();
        f.substitute_blocks(&[(0, &images)], &ab).unwrap()
    };
    let lhs = normalized_point_resultant(&eta).unwrap().substitute_blocks(&[(0, &tensor)], &ab).unwrap();
    let rhs = &on(&normalized_point_resultant(&xi).unwrap(), 0) * &on(&normalized_point_resultant(&up).unwrap(), 1);
    assert_eq!(lhs.normalized(), rhs.normalized());
    let mut raw = point_resultant(&eta).unwrap().substitute_blocks(&[(0, &tensor)], &ab).unwrap();
    let mut mult = [0u32; 2];
    for (i, (pt, b)) in [(&xi, 0), (&up, 1)].into_iter().enumerate() {
        let factor = on(&point_resultant(pt).unwrap(), b);
        while let Some(qt) = raw.div_exact(&factor) {
            raw = qt;
            mult[i] += 1;
        }
    }
    assert!(raw.as_constant().is_some());
    let expected = [k4.degree() / xi.subfield_degree(), k4.degree() / up.subfield_degree()];
    assert_eq!(mult.map(|m| m as usize), expected);
    assert_eq!(mult, [2, 2]);

    Outcome::pass(format!(
        "R([√2:1]) = 2·L0_0² - L0_1²; degree law on {} points over fields of degree 1-4; Veronese on {veronese_checks} cases; Segre multiplicities m_ξ = m_υ = 2",
        cases.len()
    ))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 11] = [
        ("symmetric round trip", criterion_1),
        ("wedge split/coefficient agreement", criterion_2),
        ("Sylvester oracle", criterion_3),
        ("Macaulay degenerations", criterion_4),
        ("multiplicativity and vanishing shift", criterion_5),
        ("alternating suite", criterion_6),
        ("Chow predicate and membership", criterion_7),
        ("iterated-wedge intersection", criterion_8),
        ("permutation sign law and commutation", criterion_9),
        ("projection", criterion_10),
        ("number-theoretic suite", criterion_11),
    ];
    let only: Option<usize> = std::env::args().nth(1).and_then(|a| a.parse().ok());
    let mut regressions = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        if only.is_some_and(|k| k != i + 1) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Outcome { pass: false, known: false, detail: format!("assertion failed: {msg}") }
        });
        let verdict = match (outcome.pass, outcome.known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => {
                regressions += 1;
                "FAIL"
            }
        };
        println!(
            "criterion {:>2} [{name}] {verdict} tolerance={TOLERANCE} time={:.1}s: {}",
            i + 1,
            start.elapsed().as_secs_f64(),
            outcome.detail
        );
    }
    if regressions == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
