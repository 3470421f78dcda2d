//! Number fields `ℚ[t]/(p)` and exact arithmetic in them.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::context::Limits;
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Matrix};
use crate::rational::Rational;
use crate::univariate::{divisors, UniPoly};

/// How irreducibility of the minimal polynomial was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Irreducibility {
    /// Checked: no rational root, and for degree 4 no quadratic factor.
    Proven,
    /// Degree 5 or 6: taken on the caller's word.
    Asserted,
}

/// `ℚ(θ)` with `θ` a root of a monic integer polynomial `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberField {
    minpoly: UniPoly,
    irreducibility: Irreducibility,
}

/// An element of a number field, stored as its remainder modulo `p`.
pub type Element = UniPoly;

impl NumberField {
    /// Validates `p`: monic, integral, squarefree, of degree at most the
    /// field-degree limit, and irreducible where that is decidable here.
    pub fn new(p: UniPoly, limits: &Limits) -> Result<Self> {
        let e = p.degree().ok_or_else(|| Error::BadMinpoly("zero polynomial".into()))?;
        if e == 0 {
            return Err(Error::BadMinpoly("constant polynomial".into()));
        }
        limits.check_field(e)?;
        if !p.lead().is_one() {
            return Err(Error::BadMinpoly(format!("{p:?} is not monic")));
        }
        if p.coeffs().iter().any(|c| !c.is_integer()) {
            return Err(Error::BadMinpoly("coefficients are not integers".into()));
        }
        if !p.is_squarefree() {
            return Err(Error::BadMinpoly("not squarefree".into()));
        }
        let irreducibility = if e <= 4 {
            if !irreducible_low_degree(&p)? {
                return Err(Error::BadMinpoly("reducible over ℚ".into()));
            }
            Irreducibility::Proven
        } else {
            Irreducibility::Asserted
        };
        Ok(NumberField { minpoly: p, irreducibility })
    }

    /// The field ℚ itself, presented by `t`.
    pub fn rationals() -> Self {
        NumberField {
            minpoly: UniPoly::from_ints(&[0, 1]),
            irreducibility: Irreducibility::Proven,
        }
    }

    pub fn minpoly(&self) -> &UniPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap()
    }

    pub fn irreducibility(&self) -> Irreducibility {
        self.irreducibility
    }

    pub fn reduce(&self, a: &UniPoly) -> Element {
        a.rem(&self.minpoly)
    }

    pub fn from_rational(&self, q: Rational) -> Element {
        UniPoly::new(vec![q])
    }

    /// The generator `θ`.
    pub fn theta(&self) -> Element {
        self.reduce(&UniPoly::from_ints(&[0, 1]))
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        a + b
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        a - b
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        self.reduce(&(a * b))
    }

    pub fn pow(&self, a: &Element, k: u32) -> Element {
        let mut out = UniPoly::one();
        for _ in 0..k {
            out = self.mul(&out, a);
        }
        out
    }

    pub fn inv(&self, a: &Element) -> Option<Element> {
        if a.is_zero() {
            return None;
        }
        let (g, s) = a.gcd_cofactor(&self.minpoly);
        (g.degree() == Some(0)).then(|| self.reduce(&s))
    }

    /// Coordinates of `a` in the basis `1, θ, .., θ^{e-1}`.
    pub fn coords(&self, a: &Element) -> Vec<Rational> {
        (0..self.degree()).map(|i| a.coeff(i)).collect()
    }

    /// The matrix of multiplication by `a`; column `j` holds `a θ^j`.
    pub fn multiplication_matrix(&self, a: &Element) -> Matrix {
        let e = self.degree();
        let cols: Vec<Vec<Rational>> = (0..e)
            .map(|j| {
                let mut basis = vec![Rational::zero(); j + 1];
                basis[j] = Rational::one();
                self.coords(&self.mul(a, &UniPoly::new(basis)))
            })
            .collect();
        (0..e).map(|i| (0..e).map(|j| cols[j][i].clone()).collect()).collect()
    }

    /// `[ℚ(a_0, .., a_k) : ℚ]`, the dimension of the algebra the elements
    /// generate.
    pub fn subfield_degree(&self, gens: &[Element]) -> usize {
        let mut basis = EchelonBasis::new();
        let mut elems = vec![UniPoly::one()];
        basis.insert(&self.coords(&elems[0]));
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let p = self.mul(&elems[i], g);
                if basis.insert(&self.coords(&p)) {
                    elems.push(p);
                }
            }
            i += 1;
        }
        basis.dim()
    }
}

/// Irreducibility over ℚ of a monic integer polynomial of degree at most 4.
fn irreducible_low_degree(p: &UniPoly) -> Result<bool> {
    let roots = p
        .rational_roots()
        .ok_or_else(|| Error::BadMinpoly("coefficients too large to test".into()))?;
    if !roots.is_empty() {
        return Ok(p.degree() == Some(1));
    }
    if p.degree() != Some(4) {
        return Ok(true);
    }
    // Gauss: a monic quartic without roots factors only as
    // (t² + a t + b)(t² + c t + d) with integer a, b, c, d.
    let k: Vec<BigInt> = p.coeffs().iter().map(|c| c.to_integer()).collect();
    let (e0, e1, e2, e3) = (&k[0], &k[1], &k[2], &k[3]);
    let divs = divisors(e0).ok_or_else(|| Error::BadMinpoly("constant term too large to test".into()))?;
    for b in divs.iter().flat_map(|b| [b.clone(), -b]) {
        let d = e0 / &b;
        // a + c = e3, ac = e2 - b - d.
        let prod = e2 - &b - &d;
        let disc = e3 * e3 - BigInt::from(4) * &prod;
        if disc.is_negative() {
            continue;
        }
        let r = disc.sqrt();
        if &r * &r != disc || (e3 + &r).is_odd() {
            continue;
        }
        for a in [(e3 + &r) / 2, (e3 - &r) / 2] {
            let c = e3 - &a;
            if &a * &d + &b * &c == *e1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
