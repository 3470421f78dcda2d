use alloc::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::symfun::{Decomposer, WedgeTable};

/// Size guards for the combinatorial constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest projective dimension for wedge tables.
    pub max_dim: usize,
    /// Largest degree `d` of the form on the point side.
    pub max_degree: u32,
    /// Largest degree `D` of the form on the dual side.
    pub max_count: usize,
    /// Largest degree of a number field.
    pub max_field_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_dim: 3,
            max_degree: 4,
            max_count: 4,
            max_field_degree: 6,
        }
    }
}

impl Limits {
    pub(crate) fn check_table(&self, n: usize, d: u32, count: usize) -> Result<()> {
        if n > self.max_dim {
            return Err(Error::SizeLimit {
                what: "n",
                value: n,
                limit: self.max_dim,
            });
        }
        if d > self.max_degree {
            return Err(Error::SizeLimit {
                what: "d",
                value: d as usize,
                limit: self.max_degree as usize,
            });
        }
        if count > self.max_count {
            return Err(Error::SizeLimit {
                what: "D",
                value: count,
                limit: self.max_count,
            });
        }
        Ok(())
    }

    pub(crate) fn check_field(&self, e: usize) -> Result<()> {
        if e > self.max_field_degree {
            return Err(Error::SizeLimit {
                what: "field degree",
                value: e,
                limit: self.max_field_degree,
            });
        }
        Ok(())
    }
}

/// Caller-owned memoisation for wedge tables and symmetric decompositions.
///
/// A context is plain data; share it across threads by wrapping it in a
/// lock, or give each thread its own. Lookups are deterministic, so separate
/// contexts always produce equal values.
#[derive(Debug, Clone, Default)]
pub struct Context {
    limits: Limits,
    tables: BTreeMap<(usize, u32, usize), WedgeTable>,
    decomposers: BTreeMap<(usize, usize), Decomposer>,
}

impl Context {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_limits(limits: Limits) -> Self {
        Context {
            limits,
            ..Self::default()
        }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn set_limits(&mut self, limits: Limits) {
        self.limits = limits;
    }

    pub(crate) fn decomposer(&mut self, n: usize, count: usize) -> &mut Decomposer {
        self.decomposers
            .entry((n, count))
            .or_insert_with(|| Decomposer::new(n, count))
    }

    pub(crate) fn cached_table(&self, key: (usize, u32, usize)) -> Option<&WedgeTable> {
        self.tables.get(&key)
    }

    pub(crate) fn store_table(&mut self, key: (usize, u32, usize), t: WedgeTable) {
        self.tables.insert(key, t);
    }
}
