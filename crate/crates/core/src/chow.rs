//! Chow forms of algebraic sets in `ℙⁿ`.
//!
//! A Chow form of dimension `ℓ` is an alternating form in the copies
//! `L_0..L_ℓ` of a dual family. It vanishes at `(λ_0, .., λ_ℓ)` exactly when
//! its set meets `V(λ_0, .., λ_ℓ)`. Forms are stored integer-primitive with
//! a positive leading coefficient, so forms that agree up to a scalar are
//! equal.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::alternating::{alternation_failure, common_degree, dual_family_ring, sharp, signed_minors, DUAL_FAMILY};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::numres::{point_resultant, AlgebraicPoint};
use crate::poly::{Homogeneity, Poly};
use crate::rational::Rational;
use crate::ring::{GroupDecl, GroupKind, Ring};
use crate::univariate::UniPoly;
use crate::wedge::{determinant_form, grid, iterated_wedge, SplitForm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowForm {
    poly: Poly,
    family: String,
    dim: isize,
    degree: Option<u32>,
    n: usize,
}

impl ChowForm {
    /// Checks that `poly` is alternating and equidegree in the copies of the
    /// dual family `family`, and normalizes it. Other groups of the ring
    /// are treated as coefficients.
    pub fn new(poly: Poly, family: &str) -> Result<Self> {
        let blocks = poly.ring().family_blocks(family)?;
        if let Some((i, j)) = alternation_failure(&poly, &blocks)? {
            return Err(Error::NotAlternating { i, j });
        }
        Self::assemble(poly, family)
    }

    /// Outputs of operations that preserve alternation skip the exact check
    /// in release builds.
    fn trusted(poly: Poly, family: &str) -> Result<Self> {
        if cfg!(debug_assertions) {
            Self::new(poly, family)
        } else {
            Self::assemble(poly, family)
        }
    }

    fn assemble(poly: Poly, family: &str) -> Result<Self> {
        let ring = poly.ring().clone();
        let decl = ring.group(family).ok_or_else(|| Error::UnknownGroup(family.to_string()))?;
        if decl.kind != GroupKind::Dual || decl.copies.is_none() {
            return Err(Error::InvalidRing(alloc::format!("`{family}` is not a dual family")));
        }
        let n = decl.dim;
        let blocks = ring.family_blocks(family)?;
        let degree = common_degree(&poly, &blocks)?.filter(|_| !blocks.is_empty());
        Ok(ChowForm {
            poly: poly.normalized(),
            family: family.to_string(),
            dim: blocks.len() as isize - 1,
            degree,
            n,
        })
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn family(&self) -> &str {
        &self.family
    }

    /// `ℓ`, with `-1` for the forms of the empty set in no dual groups.
    pub fn dim(&self) -> isize {
        self.dim
    }

    /// The degree in `L_0`; `None` when `ℓ = -1` or the form is zero.
    pub fn degree(&self) -> Option<u32> {
        self.degree
    }

    /// The ambient projective dimension `n`.
    pub fn ambient(&self) -> usize {
        self.n
    }

    fn blocks(&self) -> Vec<usize> {
        self.poly.ring().family_blocks(&self.family).expect("validated family")
    }

    fn check_forms(&self, lambda: &[Vec<Rational>], expected: usize) -> Result<()> {
        if lambda.len() != expected {
            return Err(Error::WrongCount {
                what: "linear forms",
                expected,
                got: lambda.len(),
            });
        }
        for l in lambda {
            if l.len() != self.n + 1 {
                return Err(Error::DimensionMismatch {
                    expected: self.n,
                    got: l.len().saturating_sub(1),
                });
            }
        }
        Ok(())
    }
}

/// A point given either by rational coordinates or as an algebraic point,
/// which stands for its full set of conjugates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProjectivePoint {
    Rational(Vec<Rational>),
    Algebraic(AlgebraicPoint),
}

impl ProjectivePoint {
    pub fn dim(&self) -> usize {
        match self {
            ProjectivePoint::Rational(x) => x.len().saturating_sub(1),
            ProjectivePoint::Algebraic(p) => p.dim(),
        }
    }
}

/// A finite set of points of `ℙⁿ` with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePointSet {
    n: usize,
    points: Vec<(ProjectivePoint, u32)>,
}

impl FinitePointSet {
    pub fn new(n: usize, points: Vec<(ProjectivePoint, u32)>) -> Result<Self> {
        for (p, mult) in &points {
            if p.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, got: p.dim() });
            }
            if let ProjectivePoint::Rational(x) = p {
                if x.is_empty() || x.iter().all(Zero::is_zero) {
                    return Err(Error::ZeroPoint);
                }
            }
            if *mult == 0 {
                return Err(Error::InvalidExponent("multiplicities must be positive".into()));
            }
        }
        Ok(FinitePointSet { n, points })
    }

    /// Rational points of multiplicity one.
    pub fn rational(n: usize, points: &[Vec<Rational>]) -> Result<Self> {
        Self::new(n, points.iter().map(|x| (ProjectivePoint::Rational(x.clone()), 1)).collect())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[(ProjectivePoint, u32)] {
        &self.points
    }

    /// Whether the rational point `[x]` belongs to the set.
    pub fn contains(&self, x: &[Rational]) -> bool {
        self.points.iter().any(|(p, _)| match p {
            ProjectivePoint::Rational(y) => proportional(x, y),
            ProjectivePoint::Algebraic(a) => a.as_rational().is_some_and(|y| proportional(x, &y)),
        })
    }
}

/// Whether two vectors span the same line.
pub fn proportional(x: &[Rational], y: &[Rational]) -> bool {
    x.len() == y.len()
        && !x.iter().all(Zero::is_zero)
        && !y.iter().all(Zero::is_zero)
        && (0..x.len()).all(|i| (0..i).all(|j| &x[i] * &y[j] == &x[j] * &y[i]))
}

/// `∏ (L·x)^{mult}`, with algebraic points contributing their resultants.
pub fn chow_points(w: &FinitePointSet) -> Result<ChowForm> {
    let ring = dual_family_ring(DUAL_FAMILY, w.n, 1);
    let mut out = Poly::one(&ring);
    for (p, mult) in &w.points {
        let factor = match p {
            ProjectivePoint::Rational(x) => Poly::linear_form(&ring, 0, x),
            ProjectivePoint::Algebraic(a) => point_resultant(a)?.embed(&ring)?,
        };
        out = &out * &factor.pow(*mult);
    }
    ChowForm::trusted(out, DUAL_FAMILY)
}

/// The point group of `f`: the only point group of its ring.
fn point_block(f: &Poly) -> Result<usize> {
    let ring = f.ring();
    match ring.blocks_of_kind(GroupKind::Point).as_slice() {
        [b] => Ok(*b),
        [] => Err(Error::UnknownGroup("point group".into())),
        [a, b, ..] => Err(Error::AmbiguousGroup(alloc::format!(
            "{} and {} are both point groups",
            ring.block_name(*a),
            ring.block_name(*b)
        ))),
    }
}

/// `f(L_0 ∧ .. ∧ L_{n-1})`, the Chow form of the hypersurface `V(f)`.
pub fn chow_hypersurface(f: &Poly) -> Result<ChowForm> {
    let ring = f.ring();
    let pb = point_block(f)?;
    match f.block_degree(pb) {
        Homogeneity::Zero => return Err(Error::ZeroPolynomial),
        Homogeneity::Inhomogeneous => {
            return Err(Error::NotHomogeneous {
                group: ring.block_name(pb),
            })
        }
        Homogeneity::Degree(_) => {}
    }
    let n = ring.block_len(pb) - 1;
    let rest = ring.without_block(pb);
    let family = rest.fresh_id(DUAL_FAMILY);
    let target = Arc::new(rest.with_group(GroupDecl::family(&family, GroupKind::Dual, n, n))?);
    let blocks = target.family_blocks(&family)?;
    let minors = signed_minors(&target, &blocks)?;
    let c = f.substitute_blocks(&[(pb, &minors)], &target)?;
    ChowForm::trusted(c, &family)
}

/// `det(L_0, .., L_n)^D`, the Chow form of `ℙⁿ` with multiplicity `D`.
pub fn chow_ambient(n: usize, power: u32) -> Result<ChowForm> {
    ChowForm::trusted(determinant_form(DUAL_FAMILY, n).pow(power), DUAL_FAMILY)
}

/// `f ∧ C`, a Chow form of dimension `ℓ - 1` for `W ∩ V(f)`.
pub fn chow_wedge(ctx: &mut Context, f: &Poly, c: &ChowForm) -> Result<ChowForm> {
    let p = iterated_wedge(ctx, core::slice::from_ref(f), &c.poly, &c.family)?;
    ChowForm::trusted(p, &c.family)
}

/// `F ∧ det`, the Chow form of dimension `n - k` of `V(F)` for `k ≤ n` forms.
pub fn chow_complete_intersection(ctx: &mut Context, fs: &[Poly], n: usize) -> Result<ChowForm> {
    if fs.len() > n {
        return Err(Error::TooManyForms {
            got: fs.len(),
            dim: n as isize,
        });
    }
    if fs.iter().any(Poly::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let p = iterated_wedge(ctx, fs, &determinant_form(DUAL_FAMILY, n), DUAL_FAMILY)?;
    ChowForm::trusted(p, DUAL_FAMILY)
}

/// Whether `W` meets `V(λ_0, .., λ_ℓ)`, i.e. `C(λ) = 0`.
pub fn meets(c: &ChowForm, lambda: &[Vec<Rational>]) -> Result<bool> {
    c.check_forms(lambda, (c.dim + 1) as usize)?;
    let vals: Vec<(usize, &[Rational])> = c.blocks().into_iter().zip(lambda).map(|(b, l)| (b, l.as_slice())).collect();
    Ok(c.poly.eval_blocks(&vals)?.is_zero())
}

/// How a substituted form decomposed over ℚ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitStatus {
    /// `a ∏ (L·x_t)` with rational points.
    Split(SplitForm),
    /// No split into rational linear factors was found.
    Unsplit,
    /// The form vanishes: `W ∩ V(λ)` is infinite.
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    /// `C(λ_0, .., λ_{ℓ-1}, L)` over the single dual group `L0`.
    pub form: Poly,
    pub status: SplitStatus,
}

/// `C(λ_0, .., λ_{ℓ-1}, L)`, which splits as `a ∏ (L·x_t)` over the points
/// `x_t` of `W ∩ V(λ)`, split over ℚ when possible.
pub fn chow_substitute(c: &ChowForm, lambda: &[Vec<Rational>]) -> Result<Substitution> {
    if c.dim < 0 {
        return Err(Error::TooManyForms { got: 0, dim: c.dim });
    }
    c.check_forms(lambda, c.dim as usize)?;
    let ring = c.poly.ring();
    let blocks = c.blocks();
    let last = *blocks.last().unwrap();
    let others: Vec<GroupDecl> = ring.groups().iter().filter(|g| g.id != c.family).cloned().collect();
    let mut groups = others.clone();
    groups.push(GroupDecl::family(&c.family, GroupKind::Dual, c.n, 1));
    let target = Arc::new(Ring::new(groups)?);
    let tb = target.family_blocks(&c.family)?[0];
    let mut subs: Vec<(usize, Vec<Poly>)> = blocks
        .iter()
        .zip(lambda)
        .map(|(&b, l)| (b, l.iter().map(|x| Poly::constant(&target, x.clone())).collect()))
        .collect();
    subs.push((last, (0..=c.n).map(|s| Poly::var(&target, tb, s)).collect()));
    let refs: Vec<(usize, &[Poly])> = subs.iter().map(|(b, v)| (*b, v.as_slice())).collect();
    let form = c.poly.substitute_blocks(&refs, &target)?;
    let status = if form.is_zero() {
        SplitStatus::Zero
    } else if !others.is_empty() {
        SplitStatus::Unsplit
    } else {
        split_over_q(&form, tb).map_or(SplitStatus::Unsplit, SplitStatus::Split)
    };
    Ok(Substitution { form, status })
}

/// Splits a form in the dual block `b` into rational linear factors.
///
/// After a coordinate change making the `L_0^D` coefficient nonzero, every
/// factor is `L_0 + Σ c_j L_j`, and `c_j` is read off the roots of the
/// restriction to the `(L_0, L_j)` line. Candidate factors are tried by
/// exact division.
pub fn split_over_q(g: &Poly, b: usize) -> Option<SplitForm> {
    let ring = g.ring().clone();
    let used = g.blocks_used();
    if used.iter().enumerate().any(|(i, &u)| u && i != b) {
        return None;
    }
    let Homogeneity::Degree(big_d) = g.block_degree(b) else {
        return None;
    };
    let n = ring.block_len(b) - 1;
    if big_d == 0 {
        return SplitForm::new(g.as_constant()?, Vec::new()).ok();
    }
    let v = (1..=i64::from(big_d)).find_map(|k| {
        grid(n, k).into_iter().find(|v| {
            let mut x = vec![Rational::one()];
            x.extend(v.iter().map(|&c| Rational::from_integer(c.into())));
            !g.eval_blocks(&[(b, &x)]).map(|p| p.is_zero()).unwrap_or(true)
        })
    })?;
    let vq: Vec<Rational> = v.iter().map(|&c| Rational::from_integer(c.into())).collect();
    let l0 = Poly::var(&ring, b, 0);
    let images: Vec<Poly> = (0..=n)
        .map(|s| if s == 0 { l0.clone() } else { &Poly::var(&ring, b, s) + &l0.scale(&vq[s - 1]) })
        .collect();
    let moved = g.substitute_blocks(&[(b, &images)], &ring).ok()?;

    let mut cands: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for j in 1..=n {
        let mut coeffs = vec![Rational::zero(); big_d as usize + 1];
        for (m, c) in moved.terms() {
            let e = m.block_exponents(&ring, b);
            if e.iter().enumerate().all(|(s, &k)| k == 0 || s == 0 || s == j) {
                coeffs[e[j] as usize] += c;
            }
        }
        let u = UniPoly::new(coeffs);
        let mut set: BTreeSet<Rational> = u.rational_roots()?.iter().map(|r| -r.recip()).collect();
        if u.degree() < Some(big_d as usize) {
            set.insert(Rational::zero());
        }
        cands = cands
            .into_iter()
            .flat_map(|x| {
                set.iter().map(move |c| {
                    let mut y = x.clone();
                    y.push(c.clone());
                    y
                })
            })
            .collect();
    }
    let mut rest = moved;
    let mut points = Vec::new();
    for x in cands {
        let lin = Poly::linear_form(&ring, b, &x);
        while let Some(q) = rest.div_exact(&lin) {
            let x0 = (1..=n).fold(x[0].clone(), |acc, s| acc - &vq[s - 1] * &x[s]);
            let mut p = vec![x0];
            p.extend_from_slice(&x[1..]);
            points.push(p);
            rest = q;
        }
    }
    SplitForm::new(rest.as_constant()?, points).ok()
}

/// Whether `W ∩ V(f_0, .., f_ℓ) ≠ ∅`, i.e. `F ∧ C = 0`.
pub fn intersects_system(ctx: &mut Context, c: &ChowForm, fs: &[Poly]) -> Result<bool> {
    let expected = (c.dim + 1) as usize;
    if fs.len() != expected {
        return Err(Error::WrongCount {
            what: "forms",
            expected,
            got: fs.len(),
        });
    }
    Ok(iterated_wedge(ctx, fs, &c.poly, &c.family)?.is_zero())
}

/// Whether `[x] ∈ W`, i.e. `C♯(L_0, .., L_{ℓ+1}, L_0·x, .., L_{ℓ+1}·x) ≡ 0`.
pub fn membership(c: &ChowForm, x: &[Rational]) -> Result<bool> {
    if x.len() != c.n + 1 {
        return Err(Error::DimensionMismatch {
            expected: c.n,
            got: x.len().saturating_sub(1),
        });
    }
    if x.iter().all(Zero::is_zero) {
        return Err(Error::ZeroPoint);
    }
    if c.dim < 0 {
        return Ok(c.poly.is_zero());
    }
    let s = sharp(&c.poly, &c.family)?;
    let ring = s.ring().clone();
    let yb = ring.num_blocks() - 1;
    let images: Vec<Poly> = ring
        .family_blocks(&c.family)?
        .into_iter()
        .map(|b| Poly::linear_form(&ring, b, x))
        .collect();
    Ok(s.substitute_blocks(&[(yb, &images)], &ring)?.is_zero())
}

/// `P_λ(Y) = C♯(λ_0, .., λ_ν, Y)` for `ν = ℓ + 1` rational linear forms,
/// over a point group `Y` of dimension `ν`. Its zero set is the image of
/// `W` under `[x] ↦ [λx]`, and it vanishes identically when `W` meets
/// `V(λ)`.
pub fn projection(c: &ChowForm, lambda: &[Vec<Rational>]) -> Result<Poly> {
    if c.dim < 0 {
        return Err(Error::TooManyForms { got: 0, dim: c.dim });
    }
    let nu = (c.dim + 1) as usize;
    c.check_forms(lambda, nu + 1)?;
    let s = sharp(&c.poly, &c.family)?;
    let sring = s.ring().clone();
    let yb = sring.num_blocks() - 1;
    let mut groups: Vec<GroupDecl> = c.poly.ring().groups().iter().filter(|g| g.id != c.family).cloned().collect();
    let y = Ring::new(groups.clone())?.fresh_id("Y");
    groups.push(GroupDecl::single(&y, GroupKind::Point, nu));
    let target = Arc::new(Ring::new(groups)?);
    let tb = target.num_blocks() - 1;
    let mut subs: Vec<(usize, Vec<Poly>)> = sring
        .family_blocks(&c.family)?
        .into_iter()
        .zip(lambda)
        .map(|(b, l)| (b, l.iter().map(|v| Poly::constant(&target, v.clone())).collect()))
        .collect();
    subs.push((yb, (0..=nu).map(|i| Poly::var(&target, tb, i)).collect()));
    let refs: Vec<(usize, &[Poly])> = subs.iter().map(|(b, v)| (*b, v.as_slice())).collect();
    s.substitute_blocks(&refs, &target)
}
