//! The wedge `f ∧ g` of a form `f` on a point group with a form `g` on the
//! paired dual group, iterated wedges against Chow forms, and the Macaulay
//! resultant.
//!
//! For `g = y ∏_{i<D} (X*·x_i)` the wedge is `y^d ∏ f(x_i)`. In coefficient
//! form it is the wedge table of `(n, d, D)` evaluated at the coefficients of
//! `f` and `g`, with `Y = 1`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::alternating::det_poly;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::poly::{Homogeneity, Poly};
use crate::rational::Rational;
use crate::ring::{enumerate_exponents, BlockRef, GroupDecl, GroupKind, Ring};
use crate::symfun::wedge_table;

/// `y ∏_{i<D} (X*·x_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitForm {
    y: Rational,
    points: Vec<Vec<Rational>>,
}

impl SplitForm {
    pub fn new(y: Rational, points: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(p) = points.first() {
            for q in &points {
                if q.len() != p.len() {
                    return Err(Error::DimensionMismatch {
                        expected: p.len().saturating_sub(1),
                        got: q.len().saturating_sub(1),
                    });
                }
                if q.iter().all(Zero::is_zero) {
                    return Err(Error::ZeroPoint);
                }
            }
        }
        Ok(SplitForm { y, points })
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    /// The number `D` of points.
    pub fn degree(&self) -> usize {
        self.points.len()
    }
}

/// Expand a split form over the dual block `dual` of `ring`.
pub fn expand_split(g: &SplitForm, ring: &Arc<Ring>, dual: &BlockRef) -> Result<Poly> {
    let b = ring.block_index(dual)?;
    let mut out = Poly::constant(ring, g.y.clone());
    for x in &g.points {
        if x.len() != ring.block_len(b) {
            return Err(Error::DimensionMismatch {
                expected: ring.block_len(b) - 1,
                got: x.len().saturating_sub(1),
            });
        }
        out = &out * &Poly::linear_form(ring, b, x);
    }
    Ok(out)
}

/// `y^d ∏ f(x_i)` for `f` homogeneous of degree `d` in the point block
/// `point`. The result lives in the ring of `f` without that block.
pub fn wedge_split(f: &Poly, point: &BlockRef, g: &SplitForm) -> Result<Poly> {
    let ring = f.ring();
    let pb = ring.block_index(point)?;
    let target = Arc::new(ring.without_block(pb));
    let d = match f.block_degree(pb) {
        Homogeneity::Degree(d) => d,
        Homogeneity::Zero if g.degree() > 0 => return Ok(Poly::zero(&target)),
        Homogeneity::Zero => return Err(Error::ZeroPolynomial),
        Homogeneity::Inhomogeneous => {
            return Err(Error::NotHomogeneous {
                group: ring.block_name(pb),
            })
        }
    };
    let mut out = Poly::constant(&target, num_traits::pow(g.y.clone(), d as usize));
    for x in &g.points {
        if x.len() != ring.block_len(pb) {
            return Err(Error::DimensionMismatch {
                expected: ring.block_len(pb) - 1,
                got: x.len().saturating_sub(1),
            });
        }
        let images: Vec<Poly> = x.iter().map(|c| Poly::constant(&target, c.clone())).collect();
        out = &out * &f.substitute_blocks(&[(pb, &images)], &target)?;
    }
    Ok(out)
}

/// The point block of `f` paired with a dual group of dimension `n`: the
/// unique used point block with `n + 1` coordinates, or `None` when `f`
/// uses none.
pub fn paired_point_block(f: &Poly, n: usize) -> Result<Option<usize>> {
    let ring = f.ring();
    let used = f.blocks_used();
    let cands: Vec<usize> = ring
        .blocks_of_kind(GroupKind::Point)
        .into_iter()
        .filter(|&b| ring.block_len(b) == n + 1 && used[b])
        .collect();
    match cands.as_slice() {
        [] => Ok(None),
        [b] => Ok(Some(*b)),
        _ => Err(Error::AmbiguousGroup(alloc::format!(
            "{} and {} both pair with the dual group",
            ring.block_name(cands[0]),
            ring.block_name(cands[1])
        ))),
    }
}

/// `f ∧ g` with `g` in coefficient form on the dual block `dual`; the point
/// block of `f` is inferred.
pub fn wedge_coeff(ctx: &mut Context, f: &Poly, g: &Poly, dual: &BlockRef) -> Result<Poly> {
    let bg = g.ring().block_index(dual)?;
    let n = g.ring().block_len(bg) - 1;
    let pb = paired_point_block(f, n)?;
    wedge_blocks(ctx, f, pb, g, bg, None)
}

/// `f ∧ g` with explicit blocks. `point = None` means `f` is constant in
/// the point variables. `degree` supplies `D` when `g` is zero.
pub fn wedge_coeff_with(
    ctx: &mut Context,
    f: &Poly,
    point: Option<&BlockRef>,
    g: &Poly,
    dual: &BlockRef,
    degree: Option<u32>,
) -> Result<Poly> {
    let bg = g.ring().block_index(dual)?;
    let pb = point.map(|p| f.ring().block_index(p)).transpose()?;
    wedge_blocks(ctx, f, pb, g, bg, degree)
}

fn wedge_blocks(ctx: &mut Context, f: &Poly, pb: Option<usize>, g: &Poly, bg: usize, degree: Option<u32>) -> Result<Poly> {
    let fr = f.ring();
    let gr = g.ring();
    let n = gr.block_len(bg) - 1;
    if let Some(pb) = pb {
        if fr.block_len(pb) != n + 1 {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: fr.block_len(pb) - 1,
            });
        }
    }
    let f_rest = Arc::new(match pb {
        Some(pb) => fr.without_block(pb),
        None => (**fr).clone(),
    });
    let g_rest = Arc::new(gr.without_block(bg));
    let target = Arc::new(f_rest.union(&g_rest)?);

    let d = match pb.map(|b| f.block_degree(b)) {
        None if f.is_zero() => None,
        None => Some(0),
        Some(Homogeneity::Degree(d)) => Some(d),
        Some(Homogeneity::Zero) => None,
        Some(Homogeneity::Inhomogeneous) => {
            return Err(Error::NotHomogeneous {
                group: fr.block_name(pb.unwrap()),
            })
        }
    };
    let big_d = match g.block_degree(bg) {
        Homogeneity::Degree(e) => {
            if let Some(k) = degree.filter(|&k| k != e) {
                return Err(Error::WrongCount {
                    what: "dual degree",
                    expected: k as usize,
                    got: e as usize,
                });
            }
            Some(e)
        }
        Homogeneity::Zero => degree,
        Homogeneity::Inhomogeneous => {
            return Err(Error::NotHomogeneous {
                group: gr.block_name(bg),
            })
        }
    };

    let zero = Poly::zero(&target);
    let (d, big_d) = match (d, big_d) {
        // f = 0: every f(x_i) vanishes once there is a point.
        (None, Some(0)) => return Err(Error::ZeroPolynomial),
        (None, _) => return Ok(zero),
        // g = 0 with unknown D.
        (Some(0), None) => return Err(Error::ZeroPolynomial),
        (Some(_), None) => return Ok(zero),
        (Some(d), Some(e)) => (d, e),
    };
    if big_d == 0 {
        // φ(Y) = g and F ∧ G_0 = 1.
        return Ok(g.trimmed().embed(&target)?.pow(d));
    }
    if d == 0 {
        return Ok(f.trimmed().embed(&target)?.pow(big_d));
    }
    let pb = pb.unwrap();
    evaluate_table(ctx, f, pb, g, bg, n, d, big_d, &target, true)
}

#[allow(clippy::too_many_arguments)]
fn evaluate_table(
    ctx: &mut Context,
    f: &Poly,
    pb: usize,
    g: &Poly,
    bg: usize,
    n: usize,
    d: u32,
    big_d: u32,
    target: &Arc<Ring>,
    may_move: bool,
) -> Result<Poly> {
    let table = wedge_table(ctx, n, d, big_d as usize)?;
    let f_coeffs = f.block_coefficients(pb, &Arc::new(f.ring().without_block(pb)))?;
    let g_coeffs = g.block_coefficients(bg, &Arc::new(g.ring().without_block(bg)))?;
    let lift = |m: &alloc::collections::BTreeMap<Vec<u32>, Poly>, k: u32| -> Result<Vec<Poly>> {
        enumerate_exponents(n, k)
            .into_iter()
            .map(|a| match m.get(&a.0) {
                Some(p) => p.embed(target),
                None => Ok(Poly::zero(target)),
            })
            .collect()
    };
    let t_images = lift(&f_coeffs, d)?;
    let s_images = lift(&g_coeffs, big_d)?;
    if table.is_polynomial() {
        return table.numerator().poly().substitute_blocks(&[(0, &t_images), (1, &s_images)], target);
    }
    let mut first = vec![0u32; n + 1];
    first[0] = big_d;
    let den = g_coeffs.get(&first).map(|p| p.embed(target)).transpose()?;
    match den {
        Some(den) => {
            let num = table.numerator().poly().substitute_blocks(&[(0, &t_images), (1, &s_images)], target)?;
            num.div_exact(&den.pow(table.shift())).ok_or_else(|| {
                Error::NotSplittable(alloc::format!("{g} has no split in {}", g.ring().block_name(bg)))
            })
        }
        None if may_move => {
            let (f2, g2) = move_first_coordinate(f, pb, g, bg)?;
            evaluate_table(ctx, &f2, pb, &g2, bg, n, d, big_d, target, false)
        }
        None => Err(Error::Internal("coordinate change left a zero pivot".into())),
    }
}

/// A unimodular change of coordinates after which `g` has a nonzero
/// coefficient at `X*_0^D`, applied contragrediently to `f` so that `f ∧ g`
/// is unchanged: for `v = (1, v_1, .., v_n)` with `g(v) ≠ 0`,
/// `g'(X*) = g(X*_0, X*_s + v_s X*_0)` and `f'(X) = f(X_0 - Σ v_s X_s, X_s)`.
fn move_first_coordinate(f: &Poly, pb: usize, g: &Poly, bg: usize) -> Result<(Poly, Poly)> {
    let gr = g.ring().clone();
    let n = gr.block_len(bg) - 1;
    let big_d = g.max_block_degree(bg) as i64;
    let v = (1..=big_d.max(1))
        .find_map(|k| {
            grid(n, k).into_iter().find(|v| {
                let mut x = vec![Rational::one()];
                x.extend(v.iter().map(|&c| Rational::from_integer(c.into())));
                !g.eval_blocks(&[(bg, &x)]).map(|p| p.is_zero()).unwrap_or(true)
            })
        })
        .ok_or(Error::ZeroPolynomial)?;
    let y0 = Poly::var(&gr, bg, 0);
    let g_images: Vec<Poly> = (0..=n)
        .map(|s| {
            if s == 0 {
                y0.clone()
            } else {
                &Poly::var(&gr, bg, s) + &y0.scale(&Rational::from_integer(v[s - 1].into()))
            }
        })
        .collect();
    let g2 = g.substitute_blocks(&[(bg, &g_images)], &gr)?;
    let fr = f.ring().clone();
    let f_images: Vec<Poly> = (0..=n)
        .map(|s| {
            if s == 0 {
                (1..=n).fold(Poly::var(&fr, pb, 0), |acc, t| {
                    &acc - &Poly::var(&fr, pb, t).scale(&Rational::from_integer(v[t - 1].into()))
                })
            } else {
                Poly::var(&fr, pb, s)
            }
        })
        .collect();
    let f2 = f.substitute_blocks(&[(pb, &f_images)], &fr)?;
    Ok((f2, g2))
}

/// Integer vectors of length `n` with entries in `[-k, k]`.
pub(crate) fn grid(n: usize, k: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-k..=k).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

/// Whether `g` is known to split over an algebraic closure: always for
/// `D ≤ 1`, for binary forms, and for zero; `None` when undecided.
pub fn splittable_status(g: &Poly, dual: &BlockRef) -> Result<Option<bool>> {
    let b = g.ring().block_index(dual)?;
    let n = g.ring().block_len(b) - 1;
    Ok(match g.block_degree(b) {
        Homogeneity::Zero => Some(true),
        Homogeneity::Degree(d) if d <= 1 || n <= 1 => Some(true),
        Homogeneity::Degree(_) => None,
        Homogeneity::Inhomogeneous => {
            return Err(Error::NotHomogeneous {
                group: g.ring().block_name(b),
            })
        }
    })
}

/// `F ∧ C = f_0 ∧ (f_1 ∧ (... ∧ (f_{k-1} ∧ C)))` for `C` in the dual family
/// `family` with copies `L_0..L_ℓ`; `f_{k-1}` pairs with `L_ℓ`, `f_{k-2}` with
/// `L_{ℓ-1}`, and so on.
pub fn iterated_wedge(ctx: &mut Context, fs: &[Poly], c: &Poly, family: &str) -> Result<Poly> {
    let copies = c.ring().family_blocks(family)?.len();
    if fs.len() > copies {
        return Err(Error::TooManyForms {
            got: fs.len(),
            dim: copies as isize - 1,
        });
    }
    let n = c.ring().group(family).unwrap().dim;
    let mut acc = c.clone();
    for (i, f) in fs.iter().enumerate().rev() {
        let f = without_group(f, family)?;
        let copy = copies - fs.len() + i;
        let bg = acc.ring().block_index(&BlockRef::new(family, copy))?;
        let pb = paired_point_block(&f, n)?;
        acc = wedge_blocks(ctx, &f, pb, &acc, bg, None)?;
    }
    Ok(acc)
}

/// `f` over its ring without the group `id`, which it must not use.
fn without_group(f: &Poly, id: &str) -> Result<Poly> {
    if f.ring().group(id).is_none() {
        return Ok(f.clone());
    }
    let groups: Vec<GroupDecl> = f.ring().groups().iter().filter(|g| g.id != id).cloned().collect();
    f.embed(&Arc::new(Ring::new(groups)?))
}

/// The determinant of the `n + 1` copies of a dual family of dimension `n`,
/// over `ring` extended by that family.
pub fn determinant_form(id: &str, n: usize) -> Poly {
    let ring = crate::alternating::dual_family_ring(id, n, n + 1);
    let rows: Vec<Vec<Poly>> = (0..=n)
        .map(|i| (0..=n).map(|s| Poly::var(&ring, i, s)).collect())
        .collect();
    det_poly(&rows, &ring)
}

/// The Macaulay resultant `F ∧ det` of `n + 1` forms on `ℙⁿ`.
pub fn macaulay(ctx: &mut Context, fs: &[Poly]) -> Result<Poly> {
    if fs.is_empty() {
        return Err(Error::WrongCount {
            what: "forms",
            expected: 1,
            got: 0,
        });
    }
    let n = fs.len() - 1;
    let mut id = alloc::string::String::from("L");
    while fs.iter().any(|f| f.ring().group(&id).is_some()) {
        id.push('x');
    }
    iterated_wedge(ctx, fs, &determinant_form(&id, n), &id)
}
