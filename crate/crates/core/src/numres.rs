//! Resultants of algebraic points over ℚ, and their behaviour under
//! Veronese and Segre maps.
//!
//! For a point `ξ = [x]` with coordinates in a number field `K`, the
//! resultant is `∏_τ (L·τx)` over the embeddings `τ` of `ℚ(x)`, and the
//! normalized resultant is the norm form `N_{K/ℚ}(L·x)`, its power with
//! exponent `[K : ℚ(x)]`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::alternating::{det_poly, dual_family_ring, DUAL_FAMILY};
use crate::error::{Error, Result};
use crate::numfield::{Element, NumberField};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::ring::{enumerate_exponents, Ring};

/// A point of `ℙⁿ` with coordinates in a presented number field, scaled so
/// that its last nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicPoint {
    field: NumberField,
    coords: Vec<Element>,
}

impl AlgebraicPoint {
    pub fn new(field: NumberField, coords: Vec<Element>) -> Result<Self> {
        let coords: Vec<Element> = coords.iter().map(|c| field.reduce(c)).collect();
        let last = coords.iter().rposition(|c| !c.is_zero()).ok_or(Error::ZeroPoint)?;
        let inv = field.inv(&coords[last]).ok_or(Error::ZeroPoint)?;
        let coords = coords.iter().map(|c| field.mul(c, &inv)).collect();
        Ok(AlgebraicPoint { field, coords })
    }

    pub fn rational(coords: &[Rational]) -> Result<Self> {
        let k = NumberField::rationals();
        let cs = coords.iter().map(|c| k.from_rational(c.clone())).collect();
        Self::new(k, cs)
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[Element] {
        &self.coords
    }

    /// Projective dimension `n`.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// `[ℚ(x) : ℚ]`.
    pub fn subfield_degree(&self) -> usize {
        self.field.subfield_degree(&self.coords)
    }

    /// The coordinates, when they are all rational.
    pub fn as_rational(&self) -> Option<Vec<Rational>> {
        self.coords
            .iter()
            .map(|c| match c.degree() {
                None => Some(Rational::zero()),
                Some(0) => Some(c.coeff(0)),
                Some(_) => None,
            })
            .collect()
    }
}

/// `N_{K/ℚ}(L·x) = det(Σ_s L_s M(x_s))`, with `M` the multiplication
/// matrices; over the single dual group `L0` of dimension `n`.
fn norm_form(xi: &AlgebraicPoint) -> (Arc<Ring>, Poly) {
    let ring = dual_family_ring(DUAL_FAMILY, xi.dim(), 1);
    let k = &xi.field;
    let e = k.degree();
    let mats: Vec<_> = xi.coords.iter().map(|c| k.multiplication_matrix(c)).collect();
    let rows: Vec<Vec<Poly>> = (0..e)
        .map(|i| {
            (0..e)
                .map(|j| {
                    mats.iter().enumerate().fold(Poly::zero(&ring), |acc, (s, m)| {
                        if m[i][j].is_zero() {
                            acc
                        } else {
                            &acc + &Poly::var(&ring, 0, s).scale(&m[i][j])
                        }
                    })
                })
                .collect()
        })
        .collect();
    let det = det_poly(&rows, &ring);
    (ring, det)
}

/// The resultant of `ξ`: the irreducible form over ℚ vanishing exactly on
/// the linear forms that annihilate a conjugate of `x`, normalized. Its
/// degree is `[ℚ(x) : ℚ]`.
pub fn point_resultant(xi: &AlgebraicPoint) -> Result<Poly> {
    let (_, norm) = norm_form(xi);
    let k = (xi.field.degree() / xi.subfield_degree()) as u32;
    let root = norm
        .kth_root(k)
        .ok_or_else(|| Error::Internal("norm form is not a power of the resultant".into()))?;
    Ok(root.normalized())
}

/// The resultant raised to `[K : ℚ(x)]`, i.e. the norm form of `K`.
pub fn normalized_point_resultant(xi: &AlgebraicPoint) -> Result<Poly> {
    let k = (xi.field.degree() / xi.subfield_degree()) as u32;
    Ok(point_resultant(xi)?.pow(k))
}

/// `[x^α : |α| = d]` in the order of [`enumerate_exponents`].
pub fn veronese(xi: &AlgebraicPoint, d: u32) -> Result<AlgebraicPoint> {
    if d == 0 {
        return Err(Error::InvalidExponent("Veronese degree must be positive".into()));
    }
    let k = &xi.field;
    let coords = enumerate_exponents(xi.dim(), d)
        .into_iter()
        .map(|a| {
            a.0.iter()
                .zip(&xi.coords)
                .fold(k.from_rational(Rational::from_integer(1.into())), |acc, (&e, c)| {
                    k.mul(&acc, &k.pow(c, e))
                })
        })
        .collect();
    AlgebraicPoint::new(k.clone(), coords)
}

/// `[x_s y_t]` in row-major order. Both points must be presented over the
/// same field.
pub fn segre(xi: &AlgebraicPoint, upsilon: &AlgebraicPoint) -> Result<AlgebraicPoint> {
    if xi.field != upsilon.field {
        return Err(Error::FieldMismatch);
    }
    let k = &xi.field;
    let coords = xi
        .coords
        .iter()
        .flat_map(|a| upsilon.coords.iter().map(move |b| k.mul(a, b)))
        .collect();
    AlgebraicPoint::new(k.clone(), coords)
}
