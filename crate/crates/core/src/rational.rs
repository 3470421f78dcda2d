//! Exact rational scalars.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integral(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Exact `k`-th root of a rational, if there is one.
pub fn rational_root(q: &Rational, k: u32) -> Option<Rational> {
    if k == 0 {
        return None;
    }
    if k == 1 || q.is_zero() {
        return Some(q.clone());
    }
    if q.is_negative() && k.is_multiple_of(2) {
        return None;
    }
    let num = integer_root(&q.numer().abs(), k)?;
    let den = integer_root(q.denom(), k)?;
    let r = Rational::new(num, den);
    Some(if q.is_negative() { -r } else { r })
}

fn integer_root(n: &BigInt, k: u32) -> Option<BigInt> {
    let r = n.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *n {
        Some(r)
    } else {
        None
    }
}

/// gcd of numerators and lcm of denominators of a family of rationals.
pub(crate) fn content<'a>(it: impl Iterator<Item = &'a Rational>) -> Rational {
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    for q in it {
        g = g.gcd(q.numer());
        l = l.lcm(q.denom());
    }
    if g.is_zero() {
        return Rational::one();
    }
    Rational::new(g, l)
}
