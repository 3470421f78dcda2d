//! Exact elimination theory over the rationals.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`], [`poly`] and [`grammar`]: sparse multivariate polynomials over
//!   declared groups of indeterminates, with a canonical text form.
//! * [`symfun`]: multi-homogeneous symmetric polynomials, the elementary
//!   polynomials `σ_α` and the decomposition of symmetric polynomials in them.
//! * [`wedge`]: the wedge `f ∧ g` of a form against a splittable dual form,
//!   iterated wedges and Macaulay resultants.
//! * [`alternating`]: alternating polynomials in several dual groups, the
//!   sharp operator and maximal-minor representations.
//! * [`chow`]: Chow forms, their constructors and intersection predicates.
//! * [`numfield`] and [`numres`]: number fields `ℚ[t]/(p)` and resultants of
//!   algebraic points.
//!
//! Everything is `no_std` (with `alloc`); values are immutable and every
//! operation is a pure function. The only mutable state is the memoisation
//! held by a caller-owned [`Context`].

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod alternating;
pub mod chow;
mod context;
mod error;
pub mod grammar;
pub mod linalg;
pub mod numfield;
pub mod numres;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod symfun;
pub mod univariate;
pub mod wedge;

pub use context::{Context, Limits};
pub use error::{Error, Result};
pub use poly::{Homogeneity, Monomial, Poly};
pub use rational::Rational;
pub use ring::{BlockRef, GroupDecl, GroupKind, IndexLabels, Ring};
