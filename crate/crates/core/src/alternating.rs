//! Alternating polynomials in a family of dual groups `L_0..L_ℓ`, viewed as
//! the rows of an `(ℓ+1) × (n+1)` matrix.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{Homogeneity, Poly};
use crate::rational::Rational;
use crate::ring::{GroupDecl, GroupKind, Ring};

/// Default id of a dual family.
pub const DUAL_FAMILY: &str = "L";

/// A ring with a single dual family of `copies` groups of dimension `n`.
pub fn dual_family_ring(id: &str, n: usize, copies: usize) -> Arc<Ring> {
    Arc::new(Ring::new(vec![GroupDecl::family(id, GroupKind::Dual, n, copies)]).expect("valid family"))
}

/// Determinant by expansion along the first row.
pub fn det_poly(rows: &[Vec<Poly>], ring: &Arc<Ring>) -> Poly {
    let k = rows.len();
    if k == 0 {
        return Poly::one(ring);
    }
    let mut out = Poly::zero(ring);
    for j in 0..k {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let t = &rows[0][j] * &det_poly(&minor, ring);
        out = if j % 2 == 0 { &out + &t } else { &out - &t };
    }
    out
}

/// The coordinates of the given blocks as rows of polynomials.
fn matrix_rows(ring: &Arc<Ring>, blocks: &[usize]) -> Vec<Vec<Poly>> {
    blocks
        .iter()
        .map(|&b| (0..ring.block_len(b)).map(|s| Poly::var(ring, b, s)).collect())
        .collect()
}

/// The maximal minors of the rows `blocks`, indexed by increasing column
/// subsets.
pub fn maximal_minors(ring: &Arc<Ring>, blocks: &[usize]) -> BTreeMap<Vec<usize>, Poly> {
    let rows = matrix_rows(ring, blocks);
    let cols = blocks.first().map_or(0, |&b| ring.block_len(b));
    let mut out = BTreeMap::new();
    for s in subsets(cols, blocks.len()) {
        let sub: Vec<Vec<Poly>> = rows.iter().map(|r| s.iter().map(|&c| r[c].clone()).collect()).collect();
        out.insert(s, det_poly(&sub, ring));
    }
    out
}

/// Increasing `k`-subsets of `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The minors `𝔞_s` of the `(m+1) × (n+1)` matrix of the family `L_0..L_m`.
pub fn elementary_alternating(n: usize, m: usize) -> Result<BTreeMap<Vec<usize>, Poly>> {
    if m > n {
        return Err(Error::DimensionMismatch { expected: n, got: m });
    }
    let ring = dual_family_ring(DUAL_FAMILY, n, m + 1);
    let blocks: Vec<usize> = (0..=m).collect();
    Ok(maximal_minors(&ring, &blocks))
}

/// The vector `L_0 ∧ ... ∧ L_{n-1}` of signed maximal minors of `n` rows of
/// length `n + 1`: entry `i` is `(-1)^{n+i}` times the minor without column
/// `i`, so that `v · x = det(L_0, ..., L_{n-1}, x)`.
pub fn signed_minors(ring: &Arc<Ring>, blocks: &[usize]) -> Result<Vec<Poly>> {
    let n = blocks.len();
    for &b in blocks {
        if ring.block_len(b) != n + 1 {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: ring.block_len(b) - 1,
            });
        }
    }
    let rows = matrix_rows(ring, blocks);
    Ok((0..=n)
        .map(|i| {
            let sub: Vec<Vec<Poly>> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != i).map(|(_, p)| p.clone()).collect())
                .collect();
            let d = det_poly(&sub, ring);
            if (n + i).is_multiple_of(2) {
                d
            } else {
                -&d
            }
        })
        .collect())
}

fn check_equal_dims(ring: &Ring, blocks: &[usize]) -> Result<()> {
    if let Some(&b0) = blocks.first() {
        for &b in blocks {
            if ring.block_len(b) != ring.block_len(b0) {
                return Err(Error::DimensionMismatch {
                    expected: ring.block_len(b0) - 1,
                    got: ring.block_len(b) - 1,
                });
            }
        }
    }
    Ok(())
}

/// Whether `g` is unchanged by `L_i ↦ L_i + Z L_j` for every ordered pair of
/// distinct blocks, with `Z` a fresh symbol. Returns the first failing pair.
pub fn alternation_failure(g: &Poly, blocks: &[usize]) -> Result<Option<(usize, usize)>> {
    let ring = g.ring();
    check_equal_dims(ring, blocks)?;
    if blocks.len() < 2 || g.is_zero() {
        return Ok(None);
    }
    let z = ring.fresh_id("Z");
    let ext = Arc::new(ring.with_group(GroupDecl::single(&z, GroupKind::Scalar, 0))?);
    let zb = ext.num_blocks() - 1;
    let zv = Poly::var(&ext, zb, 0);
    let base = g.embed(&ext)?;
    for (i, &bi) in blocks.iter().enumerate() {
        for (j, &bj) in blocks.iter().enumerate() {
            if i == j {
                continue;
            }
            let images: Vec<Poly> = (0..ext.block_len(bi))
                .map(|s| &Poly::var(&ext, bi, s) + &(&zv * &Poly::var(&ext, bj, s)))
                .collect();
            if base.substitute_blocks(&[(bi, &images)], &ext)? != base {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// Exact alternation test over the listed blocks.
pub fn is_alternating(g: &Poly, blocks: &[usize]) -> Result<bool> {
    Ok(alternation_failure(g, blocks)?.is_none())
}

/// Alternation test over all copies of a family.
pub fn is_alternating_family(g: &Poly, family: &str) -> Result<bool> {
    let blocks = g.ring().family_blocks(family)?;
    is_alternating(g, &blocks)
}

/// The common degree of `g` in the given blocks; `None` for `g = 0`.
pub fn common_degree(g: &Poly, blocks: &[usize]) -> Result<Option<u32>> {
    let ring = g.ring();
    let mut d = None;
    for &b in blocks {
        match g.block_degree(b) {
            Homogeneity::Zero => return Ok(None),
            Homogeneity::Inhomogeneous => {
                return Err(Error::NotHomogeneous {
                    group: ring.block_name(b),
                })
            }
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
        }
    }
    Ok(Some(d.map_or(0, |(_, e)| e)))
}

/// The ring of the sharp of a polynomial in the family `family` with `m`
/// copies: one more copy, plus scalars `Y_0..Y_m` as the last group.
fn sharp_ring(ring: &Ring, family: &str, m: usize) -> Result<(Arc<Ring>, String)> {
    let wider = ring.with_copies(family, m + 1)?;
    let y = wider.fresh_id("Y");
    let out = wider.with_group(GroupDecl::single(&y, GroupKind::Scalar, m))?;
    Ok((Arc::new(out), y))
}

/// `(-1)^{(m-j)d} g(Y_j L_i - Y_i L_j : i ≠ j) / Y_j^{d(m-1)}`.
fn sharp_at(g: &Poly, family: &str, m: usize, d: u32, j: usize, ring: &Arc<Ring>, y: usize) -> Result<Poly> {
    let dst = ring.family_blocks(family)?;
    let yj = Poly::var(ring, y, j);
    let mut subs: Vec<(usize, Vec<Poly>)> = Vec::with_capacity(m);
    for (k, i) in (0..=m).filter(|&i| i != j).enumerate() {
        let yi = Poly::var(ring, y, i);
        let images = (0..ring.block_len(dst[i]))
            .map(|s| &(&yj * &Poly::var(ring, dst[i], s)) - &(&yi * &Poly::var(ring, dst[j], s)))
            .collect();
        subs.push((dst[k], images));
    }
    let lifted = g.embed(ring)?;
    let refs: Vec<(usize, &[Poly])> = subs.iter().map(|(b, v)| (*b, v.as_slice())).collect();
    let raw = lifted.substitute_blocks(&refs, ring)?;
    let q = raw
        .div_var_power(y, j, d * (m as u32 - 1))
        .ok_or_else(|| Error::Internal("sharp is not a polynomial".into()))?;
    Ok(if ((m - j) as u32 * d) % 2 == 1 { -&q } else { q })
}

/// `g♯(L_0..L_m, Y) = g(L_i/Y_i - L_m/Y_m : i < m) ∏_{i≤m} Y_i^d` for `g`
/// alternating and homogeneous of degree `d` in the `m` copies of `family`.
///
/// The result lives in the ring of `g` with one more copy of `family` and a
/// final scalar group `Y` of `m + 1` coordinates. It is computed with the
/// last copy as pivot and checked against the first.
pub fn sharp(g: &Poly, family: &str) -> Result<Poly> {
    let ring = g.ring();
    let blocks = ring.family_blocks(family)?;
    let m = blocks.len();
    if m == 0 {
        return Err(Error::WrongCount {
            what: "groups",
            expected: 1,
            got: 0,
        });
    }
    let (out_ring, y) = sharp_ring(ring, family, m)?;
    let yb = out_ring.family_blocks(&y)?[0];
    let Some(d) = common_degree(g, &blocks)? else {
        return Ok(Poly::zero(&out_ring));
    };
    if let Some((i, j)) = alternation_failure(g, &blocks)? {
        return Err(Error::NotAlternating { i, j });
    }
    let main = sharp_at(g, family, m, d, m, &out_ring, yb)?;
    let check = sharp_at(g, family, m, d, 0, &out_ring, yb)?;
    if main != check {
        return Err(Error::Internal(format!("sharp of {g} depends on the pivot")));
    }
    Ok(main)
}

/// Whether `g(M 𝐋) = det(M)^d g(𝐋)` for the rows `𝐋` of `family`.
pub fn det_transform_check(g: &Poly, family: &str, d: u32, m: &[Vec<Rational>]) -> Result<bool> {
    let ring = g.ring();
    let blocks = ring.family_blocks(family)?;
    if m.len() != blocks.len() || m.iter().any(|r| r.len() != blocks.len()) {
        return Err(Error::DimensionMismatch {
            expected: blocks.len(),
            got: m.len(),
        });
    }
    let subs: Vec<(usize, Vec<Poly>)> = blocks
        .iter()
        .zip(m)
        .map(|(&bi, row)| {
            let images = (0..ring.block_len(bi))
                .map(|s| {
                    blocks.iter().zip(row).fold(Poly::zero(ring), |acc, (&bj, c)| {
                        &acc + &Poly::var(ring, bj, s).scale(c)
                    })
                })
                .collect();
            (bi, images)
        })
        .collect();
    let refs: Vec<(usize, &[Poly])> = subs.iter().map(|(b, v)| (*b, v.as_slice())).collect();
    let lhs = g.substitute_blocks(&refs, ring)?;
    let det = num_traits::pow(linalg::det(m), d as usize);
    Ok(lhs == g.scale(&det))
}

/// For `g` alternating in `n` copies of a dual group of dimension `n`, the
/// form `h` in a point group `X` with `g = h(L_0 ∧ ... ∧ L_{n-1})`, namely
/// `h(X) = g♯(I, X)`.
pub fn minor_representation(g: &Poly, family: &str) -> Result<Poly> {
    let ring = g.ring();
    let blocks = ring.family_blocks(family)?;
    let n = ring.group(family).unwrap().dim;
    if blocks.len() != n {
        return Err(Error::WrongCount {
            what: "groups",
            expected: n,
            got: blocks.len(),
        });
    }
    let s = sharp(g, family)?;
    let sring = s.ring().clone();
    let y = sring.groups().last().unwrap().id.clone();
    let yb = sring.family_blocks(&y)?[0];
    let lb = sring.family_blocks(family)?;
    // Target: the groups of g other than the family, plus a point group X.
    let mut rest: Vec<GroupDecl> = ring.groups().iter().filter(|d| d.id != family).cloned().collect();
    let base = Ring::new(rest.clone())?;
    let x = base.fresh_id("X");
    rest.push(GroupDecl::single(&x, GroupKind::Point, n));
    let target = Arc::new(Ring::new(rest)?);
    let xb = target.num_blocks() - 1;
    let mut subs: Vec<(usize, Vec<Poly>)> = lb
        .iter()
        .enumerate()
        .map(|(i, &b)| {
            let row = (0..=n)
                .map(|s| {
                    if s == i {
                        Poly::one(&target)
                    } else {
                        Poly::zero(&target)
                    }
                })
                .collect();
            (b, row)
        })
        .collect();
    subs.push((yb, (0..=n).map(|s| Poly::var(&target, xb, s)).collect()));
    let refs: Vec<(usize, &[Poly])> = subs.iter().map(|(b, v)| (*b, v.as_slice())).collect();
    s.substitute_blocks(&refs, &target)
}

/// `g(Y*, -X*)` for two blocks, the right side of the exchange law.
pub fn exchanged(g: &Poly, a: usize, b: usize) -> Poly {
    let swapped = g.swap_blocks(a, b);
    let ring = g.ring().clone();
    let images: Vec<Poly> = (0..ring.block_len(b)).map(|s| -&Poly::var(&ring, b, s)).collect();
    swapped
        .substitute_blocks(&[(b, &images)], &ring)
        .expect("same ring")
}

/// The identity matrix as rationals.
pub fn identity(k: usize) -> Vec<Vec<Rational>> {
    (0..k)
        .map(|i| (0..k).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}
