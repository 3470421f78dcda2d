//! Text form of polynomials.
//!
//! ```text
//! expr    := ['-'] term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := ['-'] atom ['^' integer]
//! atom    := integer ['/' integer] | variable | '(' expr ')'
//! variable:= GROUP coord            single group, e.g. X0 (dim-0 groups: bare GROUP)
//!          | GROUP copy '_' coord   family, e.g. L0_2
//!          | GROUP '[' a,b,.. ']'   group labelled by multi-indices, e.g. s[2,0]
//! ```
//!
//! Implicit multiplication is not accepted. Printing produces terms in
//! decreasing monomial order and round-trips through [`parse`].

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly};
use crate::rational::Rational;
use crate::ring::{MultiIndex, Ring};

pub fn parse(text: &str, ring: &Arc<Ring>) -> Result<Poly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<Ring>,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        match self.peek() {
            Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                Err(self.err("implicit multiplication is not allowed; use `*`"))
            }
            _ => Ok(acc),
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        if self.eat(b'-') {
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let k = self.digits().ok_or_else(|| self.err("expected exponent"))?;
            let k: u32 = k.parse().map_err(|_| Error::Syntax {
                pos: start,
                msg: "exponent out of range".to_string(),
            })?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits().unwrap().parse().unwrap();
                let save = self.pos;
                if self.eat(b'/') {
                    self.skip_ws();
                    let d = self.digits().ok_or_else(|| self.err("expected denominator"))?;
                    let d: BigInt = d.parse().unwrap();
                    if d.is_zero() {
                        return Err(Error::Syntax {
                            pos: save,
                            msg: "division by zero".to_string(),
                        });
                    }
                    return Ok(Poly::constant(self.ring, Rational::new(n, d)));
                }
                Ok(Poly::constant(self.ring, Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => self.variable(),
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn variable(&mut self) -> Result<Poly> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        let id = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
        let unknown = |p: &Self| Error::UnknownVariable {
            pos: start,
            token: String::from_utf8_lossy(&p.src[start..p.pos]).into_owned(),
        };
        let Some(gi) = self.ring.groups().iter().position(|g| g.id == id) else {
            // consume the rest of the token for the message
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_digit() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
            }
            return Err(unknown(self));
        };
        let g = self.ring.groups()[gi].clone();
        let mut copy = 0usize;
        if g.copies.is_some() {
            let c = self.digits().ok_or_else(|| unknown(self))?;
            copy = c.parse().map_err(|_| unknown(self))?;
            if g.labels.is_none() {
                if self.src.get(self.pos) != Some(&b'_') {
                    return Err(unknown(self));
                }
                self.pos += 1;
            }
        }
        let coord = if let Some(labels) = g.labels {
            if self.src.get(self.pos) != Some(&b'[') {
                return Err(unknown(self));
            }
            self.pos += 1;
            let mut alpha = Vec::new();
            loop {
                self.skip_ws();
                let a = self.digits().ok_or_else(|| self.err("expected index"))?;
                alpha.push(a.parse::<u32>().map_err(|_| self.err("index out of range"))?);
                if self.eat(b',') {
                    continue;
                }
                if self.eat(b']') {
                    break;
                }
                return Err(self.err("expected `,` or `]`"));
            }
            let alpha = MultiIndex(alpha);
            labels
                .labels()
                .iter()
                .position(|l| *l == alpha)
                .ok_or_else(|| unknown(self))?
        } else {
            match self.digits() {
                Some(c) => c.parse().map_err(|_| unknown(self))?,
                None if g.dim == 0 && g.copies.is_none() => 0,
                None => return Err(unknown(self)),
            }
        };
        if copy >= g.num_copies() || coord > g.dim {
            return Err(unknown(self));
        }
        let block = self
            .ring
            .block_index(&crate::ring::BlockRef::new(&g.id, copy))
            .map_err(|_| unknown(self))?;
        Ok(Poly::var(self.ring, block, coord))
    }
}

/// Name of one coordinate as it is printed.
pub fn var_name(ring: &Ring, block: usize, coord: usize) -> String {
    let g = ring.block_decl(block);
    let copy = ring.block_ref(block).copy;
    let mut s = g.id.clone();
    if g.copies.is_some() {
        s.push_str(&format!("{copy}"));
        if g.labels.is_none() {
            s.push('_');
        }
    }
    match g.labels {
        Some(l) => s.push_str(&format!("{}", l.labels()[coord])),
        None if g.dim == 0 && g.copies.is_none() => {}
        None => s.push_str(&format!("{coord}")),
    }
    s
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for b in 0..ring.num_blocks() {
        for (c, &e) in m.block_exponents(ring, b).iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&var_name(ring, b, c))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let ring = self.ring().clone();
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, &ring, m)?;
            }
        }
        Ok(())
    }
}
