//! Sparse multivariate polynomials with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::ring::{BlockRef, Ring};

/// Exponent key of a monomial.
///
/// The layout is fixed by the ring: for every block, one slot holding the
/// block degree followed by the coordinate exponents. Comparing keys
/// lexicographically therefore compares block by block, graded-lex inside
/// each block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(ring: &Ring) -> Self {
        Monomial(vec![0; ring.key_len()])
    }

    pub fn var(ring: &Ring, block: usize, coord: usize, exp: u32) -> Self {
        let mut m = Self::one(ring);
        m.set(ring, block, coord, exp);
        m
    }

    /// Builds a monomial from per-block exponent vectors.
    pub fn from_blocks(ring: &Ring, exps: &[(usize, &[u32])]) -> Self {
        let mut m = Self::one(ring);
        for &(block, e) in exps {
            for (c, &a) in e.iter().enumerate() {
                let old = m.exp(ring, block, c);
                m.set(ring, block, c, old + a);
            }
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exp(&self, ring: &Ring, block: usize, coord: usize) -> u32 {
        self.0[ring.slot(block, coord)]
    }

    fn set(&mut self, ring: &Ring, block: usize, coord: usize, exp: u32) {
        let b = &ring.blocks()[block];
        let slot = b.key + 1 + coord;
        self.0[b.key] = self.0[b.key] - self.0[slot] + exp;
        self.0[slot] = exp;
    }

    pub fn block_degree(&self, ring: &Ring, block: usize) -> u32 {
        self.0[ring.blocks()[block].key]
    }

    pub fn block_exponents<'a>(&'a self, ring: &Ring, block: usize) -> &'a [u32] {
        let b = &ring.blocks()[block];
        &self.0[b.key + 1..b.key + 1 + b.len]
    }

    pub fn total_degree(&self, ring: &Ring) -> u32 {
        ring.blocks().iter().map(|b| self.0[b.key]).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }

    /// Exact `k`-th root, if every exponent is divisible by `k`.
    fn root(&self, k: u32) -> Option<Monomial> {
        if self.0.iter().all(|a| a % k == 0) {
            Some(Monomial(self.0.iter().map(|a| a / k).collect()))
        } else {
            None
        }
    }

    fn remap(&self, map: &[Option<usize>], target_len: usize) -> Option<Monomial> {
        let mut out = vec![0; target_len];
        for (i, &e) in self.0.iter().enumerate() {
            if e != 0 {
                out[map[i]?] = e;
            }
        }
        Some(Monomial(out))
    }
}

/// Degree status of a polynomial in one block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial, homogeneous of every degree.
    Zero,
    Degree(u32),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn degree(self) -> Option<u32> {
        match self {
            Homogeneity::Degree(d) => Some(d),
            _ => None,
        }
    }
}

/// Binary operation selector for [`Poly::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// A polynomial over a declared ring, in canonical form: no zero
/// coefficients, terms ordered by the ring's monomial order.
#[derive(Debug, Clone)]
pub struct Poly {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Poly {
    /// Equality of canonical forms. Polynomials over different but compatible
    /// rings are compared inside the union ring.
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            return self.terms == other.terms;
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let Ok(u) = self.ring.union(&other.ring) else {
            return false;
        };
        let u = Arc::new(u);
        match (self.embed(&u), other.embed(&u)) {
            (Ok(a), Ok(b)) => a.terms == b.terms,
            _ => false,
        }
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring), c);
        }
        p
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn var(ring: &Arc<Ring>, block: usize, coord: usize) -> Self {
        Self::term(ring, Monomial::var(ring, block, coord, 1), Rational::one())
    }

    pub fn var_named(ring: &Arc<Ring>, block: &BlockRef, coord: usize) -> Result<Self> {
        let b = ring.block_index(block)?;
        if coord >= ring.block_len(b) {
            return Err(Error::DimensionMismatch {
                expected: ring.block_len(b),
                got: coord + 1,
            });
        }
        Ok(Self::var(ring, b, coord))
    }

    pub fn term(ring: &Arc<Ring>, m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// The linear form `Σ c_s · v_s` in the coordinates of `block`.
    pub fn linear_form(ring: &Arc<Ring>, block: usize, coeffs: &[Rational]) -> Self {
        Self::from_terms(
            ring,
            coeffs
                .iter()
                .enumerate()
                .map(|(s, c)| (Monomial::var(ring, block, s, 1), c.clone())),
        )
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The order-first (largest) term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(rational::is_integral)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Integer-primitive representative with positive leading coefficient.
    pub fn normalized(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = rational::content(self.terms.values());
        if self.leading_term().unwrap().1.is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Strict ring arithmetic: both operands must share the ring declaration.
    pub fn arith(op: ArithOp, a: &Poly, b: &Poly) -> Result<Poly> {
        if *a.ring != *b.ring {
            return Err(Error::RingMismatch(format!(
                "operands are declared over different rings ({} vs {} groups)",
                a.ring.groups().len(),
                b.ring.groups().len()
            )));
        }
        Ok(match op {
            ArithOp::Add => a + b,
            ArithOp::Sub => a - b,
            ArithOp::Mul => a * b,
        })
    }

    /// `self^k`, with `p^0 = 1` for every `p` including zero.
    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Re-express over `target`; fails if a used variable has no counterpart.
    pub fn embed(&self, target: &Arc<Ring>) -> Result<Poly> {
        if Arc::ptr_eq(&self.ring, target) || *self.ring == **target {
            return Ok(Poly {
                ring: target.clone(),
                terms: self.terms.clone(),
            });
        }
        let map = self.ring.key_map(target);
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mm = m.remap(&map, target.key_len()).ok_or_else(|| {
                Error::RingMismatch(format!("variable of {} missing from target ring", self))
            })?;
            out.terms.insert(mm, c.clone());
        }
        Ok(out)
    }

    fn coerce_pair(a: &Poly, b: &Poly) -> (Poly, Poly) {
        let u = Arc::new(
            a.ring
                .union(&b.ring)
                .expect("polynomial operands over incompatible rings"),
        );
        (a.embed(&u).unwrap(), b.embed(&u).unwrap())
    }

    fn same_ring(&self, other: &Poly) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    /// Which blocks occur in some term.
    pub fn blocks_used(&self) -> Vec<bool> {
        let mut used = vec![false; self.ring.num_blocks()];
        for m in self.terms.keys() {
            for (b, u) in used.iter_mut().enumerate() {
                if m.block_degree(&self.ring, b) > 0 {
                    *u = true;
                }
            }
        }
        used
    }

    pub fn block_degree(&self, block: usize) -> Homogeneity {
        let mut deg = None;
        for m in self.terms.keys() {
            let d = m.block_degree(&self.ring, block);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return Homogeneity::Inhomogeneous,
                _ => {}
            }
        }
        deg.map_or(Homogeneity::Zero, Homogeneity::Degree)
    }

    /// Degree status in a block named by reference.
    pub fn group_degree(&self, block: &BlockRef) -> Result<Homogeneity> {
        Ok(self.block_degree(self.ring.block_index(block)?))
    }

    /// Largest degree of any term in `block`.
    pub fn max_block_degree(&self, block: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.block_degree(&self.ring, block))
            .max()
            .unwrap_or(0)
    }

    /// Writes `self = Σ_α X_block^α · c_α` with `c_α` over `rest`.
    pub fn block_coefficients(&self, block: usize, rest: &Arc<Ring>) -> Result<BTreeMap<Vec<u32>, Poly>> {
        let len = self.ring.block_len(block);
        let mut out: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
        let map = self.ring.key_map(rest);
        for (m, c) in &self.terms {
            let alpha = m.block_exponents(&self.ring, block).to_vec();
            let mut stripped = m.clone();
            for s in 0..len {
                stripped.set(&self.ring, block, s, 0);
            }
            let mm = stripped.remap(&map, rest.key_len()).ok_or_else(|| {
                Error::RingMismatch(format!("coefficient ring lacks a variable of {}", self))
            })?;
            out.entry(alpha)
                .or_insert_with(|| Poly::zero(rest))
                .add_term(mm, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        Ok(out)
    }

    /// Simultaneously replace the coordinates of several blocks by images in
    /// `target`. Variables of other blocks are carried over into `target`.
    pub fn substitute_blocks(&self, subs: &[(usize, &[Poly])], target: &Arc<Ring>) -> Result<Poly> {
        let mut images: Vec<(usize, Vec<Poly>)> = Vec::with_capacity(subs.len());
        for &(block, imgs) in subs {
            let len = self.ring.block_len(block);
            if imgs.len() != len {
                return Err(Error::WrongImageCount {
                    expected: len,
                    got: imgs.len(),
                });
            }
            let imgs = imgs
                .iter()
                .map(|p| p.embed(target))
                .collect::<Result<Vec<_>>>()?;
            images.push((block, imgs));
        }
        let map = self.ring.key_map(target);
        let mut cache: BTreeMap<(usize, usize, u32), Poly> = BTreeMap::new();
        let mut out = Poly::zero(target);
        'terms: for (m, c) in &self.terms {
            let mut kept = m.clone();
            for (block, _) in &images {
                for s in 0..self.ring.block_len(*block) {
                    kept.set(&self.ring, *block, s, 0);
                }
            }
            let kept = kept.remap(&map, target.key_len()).ok_or_else(|| {
                Error::RingMismatch(format!("target ring lacks a variable of {}", self))
            })?;
            let mut acc = Poly::term(target, kept, c.clone());
            for (i, (block, imgs)) in images.iter().enumerate() {
                for (s, img) in imgs.iter().enumerate() {
                    let e = m.exp(&self.ring, *block, s);
                    if e == 0 {
                        continue;
                    }
                    if img.is_zero() {
                        continue 'terms;
                    }
                    let pw = power_cached(&mut cache, (i, s, e), img);
                    acc = &acc * pw;
                }
            }
            out = out.add_owned(acc);
        }
        Ok(out)
    }

    /// Replace every coordinate of `block` by the corresponding image. The
    /// result lives in the images' ring, which must contain all other groups.
    pub fn substitute_group(&self, block: &BlockRef, images: &[Poly]) -> Result<Poly> {
        let b = self.ring.block_index(block)?;
        let len = self.ring.block_len(b);
        if images.len() != len {
            return Err(Error::WrongImageCount {
                expected: len,
                got: images.len(),
            });
        }
        let target = images[0].ring.clone();
        if images.iter().any(|p| *p.ring != *target) {
            return Err(Error::RingMismatch("images are over different rings".into()));
        }
        self.substitute_blocks(&[(b, images)], &target)
    }

    /// Specialise the coordinates of some blocks to rational values, staying in the same ring.
    pub fn eval_blocks(&self, values: &[(usize, &[Rational])]) -> Result<Poly> {
        let subs: Vec<(usize, Vec<Poly>)> = values
            .iter()
            .map(|&(b, vs)| {
                (
                    b,
                    vs.iter()
                        .map(|v| Poly::constant(&self.ring, v.clone()))
                        .collect(),
                )
            })
            .collect();
        let refs: Vec<(usize, &[Poly])> = subs.iter().map(|(b, v)| (*b, v.as_slice())).collect();
        self.substitute_blocks(&refs, &self.ring.clone())
    }

    /// Exchange two blocks of equal length.
    pub fn swap_blocks(&self, a: usize, b: usize) -> Poly {
        assert_eq!(self.ring.block_len(a), self.ring.block_len(b));
        let len = self.ring.block_len(a);
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut mm = m.clone();
            for s in 0..len {
                let ea = m.exp(&self.ring, a, s);
                let eb = m.exp(&self.ring, b, s);
                mm.set(&self.ring, a, s, eb);
                mm.set(&self.ring, b, s, ea);
            }
            out.terms.insert(mm, c.clone());
        }
        out
    }

    /// Divide by `var^k` where every term is divisible by it.
    pub fn div_var_power(&self, block: usize, coord: usize, k: u32) -> Option<Poly> {
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exp(&self.ring, block, coord);
            if e < k {
                return None;
            }
            let mut mm = m.clone();
            mm.set(&self.ring, block, coord, e - k);
            out.terms.insert(mm, c.clone());
        }
        Some(out)
    }

    /// Exact `k`-th root over ℚ, if `self` is a perfect `k`-th power.
    ///
    /// The root is built term by term from the top: once the leading terms
    /// `r_0 + .. + r_j` are known, the leading term of the remainder is
    /// `k r_0^{k-1} r_{j+1}`.
    pub fn kth_root(&self, k: u32) -> Option<Poly> {
        if k == 0 {
            return None;
        }
        if k == 1 || self.is_zero() {
            return Some(self.clone());
        }
        let (lm, lc) = self.leading_term()?;
        let r0m = lm.root(k)?;
        let r0c = rational::rational_root(lc, k)?;
        let lead = Poly::term(&self.ring, r0m.clone(), r0c.clone());
        let denom_m = r0m.pow(k - 1);
        let denom_c = Rational::from_integer(k.into()) * num_traits::pow(r0c, (k - 1) as usize);
        let mut root = lead;
        let mut last = r0m;
        let limit = self.terms.len().max(1) * 64;
        for _ in 0..limit {
            let rem = self - &root.pow(k);
            let Some((m, c)) = rem.leading_term() else {
                return Some(root);
            };
            if !denom_m.divides(m) {
                return None;
            }
            let qm = denom_m.quotient_of(m);
            if qm >= last {
                return None;
            }
            root.add_term(qm.clone(), c / &denom_c);
            last = qm;
        }
        None
    }

    /// The same polynomial over the ring of the groups it actually uses.
    pub fn trimmed(&self) -> Poly {
        let used = self.blocks_used();
        let groups: Vec<_> = self
            .ring
            .groups()
            .iter()
            .enumerate()
            .filter(|(gi, _)| {
                (0..self.ring.num_blocks()).any(|b| used[b] && self.ring.blocks()[b].group == *gi)
            })
            .map(|(_, g)| g.clone())
            .collect();
        if groups.len() == self.ring.groups().len() {
            return self.clone();
        }
        let ring = Arc::new(Ring::new(groups).expect("subset of a valid ring"));
        self.embed(&ring).expect("unused groups dropped")
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    ///
    /// Long division by leading terms; for a monomial order the leading term
    /// of a multiple `q d` is the product of the leading terms.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        let (a, d) = if self.same_ring(d) {
            (self.clone(), d.clone())
        } else {
            Poly::coerce_pair(self, d)
        };
        let (dm, dc) = d.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = a;
        let mut q = Poly::zero(&rem.ring);
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            if !dm.divides(&m) {
                return None;
            }
            let qm = dm.quotient_of(&m);
            let qc = c / &dc;
            for (m2, c2) in &d.terms {
                rem.add_term(qm.mul(m2), -(&qc * c2));
            }
            q.add_term(qm, qc);
        }
        Some(q)
    }

    fn add_owned(mut self, other: Poly) -> Poly {
        if self.terms.len() < other.terms.len() {
            return other.add_owned(self);
        }
        for (m, c) in other.terms {
            self.add_term(m, c);
        }
        self
    }
}

fn power_cached<'a>(cache: &'a mut BTreeMap<(usize, usize, u32), Poly>, key: (usize, usize, u32), base: &Poly) -> &'a Poly {
    if !cache.contains_key(&key) {
        let (i, s, e) = key;
        let p = if e == 1 {
            base.clone()
        } else {
            let prev = power_cached(cache, (i, s, e - 1), base).clone();
            &prev * base
        };
        cache.insert(key, p);
    }
    &cache[&key]
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        if !self.same_ring(rhs) {
            let (a, b) = Poly::coerce_pair(self, rhs);
            return &a + &b;
        }
        self.clone().add_owned(rhs.clone())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if !self.same_ring(rhs) {
            let (a, b) = Poly::coerce_pair(self, rhs);
            return &a * &b;
        }
        let mut out = Poly::zero(&self.ring);
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        let (small, big) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &Poly) -> Poly {
                (&self).$f(rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if !self.same_ring(other) {
            return None;
        }
        Some(self.terms.iter().rev().cmp(other.terms.iter().rev()))
    }
}
