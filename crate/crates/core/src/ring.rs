//! Ring declarations: named groups of indeterminates.
//!
//! A group is a tuple of `dim + 1` coordinates (`X0..Xn`), optionally repeated
//! as a family of copies (`L0_0..L0_n, L1_0..`). Each copy of a group is a
//! *block*; blocks are the unit of grading, substitution and monomial ordering.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupKind {
    /// Homogeneous coordinates of a point.
    Point,
    /// Coefficients of a linear form, paired with a point group of the same dimension.
    Dual,
    /// Symbolic coefficients (`T*_α`, `σ_α`, ...).
    Coeff,
    /// Plain scalar symbols.
    Scalar,
}

impl GroupKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GroupKind::Point => "point",
            GroupKind::Dual => "dual",
            GroupKind::Coeff => "coeff",
            GroupKind::Scalar => "scalar",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "point" => GroupKind::Point,
            "dual" => GroupKind::Dual,
            "coeff" => GroupKind::Coeff,
            "scalar" => GroupKind::Scalar,
            _ => return None,
        })
    }
}

/// A multi-index `α ∈ ℕ^{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// All `α ∈ ℕ^{n+1}` with `|α| = d`, in decreasing lexicographic order.
pub fn enumerate_exponents(n: usize, d: u32) -> Vec<MultiIndex> {
    fn rec(pos: usize, n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if pos == n {
            cur.push(left);
            out.push(MultiIndex(cur.clone()));
            cur.pop();
            return;
        }
        for a in (0..=left).rev() {
            cur.push(a);
            rec(pos + 1, n, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, d, &mut Vec::with_capacity(n + 1), &mut out);
    out
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Coordinates labelled by the multi-indices of weight `weight` in `n + 1` slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexLabels {
    pub n: usize,
    pub weight: u32,
}

impl IndexLabels {
    pub fn count(&self) -> usize {
        binomial(self.n + self.weight as usize, self.n)
    }

    pub fn labels(&self) -> Vec<MultiIndex> {
        enumerate_exponents(self.n, self.weight)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupDecl {
    pub id: String,
    pub kind: GroupKind,
    /// Projective dimension; the group has `dim + 1` coordinates.
    pub dim: usize,
    /// `None` for a single group printed `X0`, `Some(k)` for a family printed `X0_0..X{k-1}_n`.
    pub copies: Option<usize>,
    pub labels: Option<IndexLabels>,
}

impl GroupDecl {
    pub fn single(id: &str, kind: GroupKind, dim: usize) -> Self {
        GroupDecl {
            id: id.to_string(),
            kind,
            dim,
            copies: None,
            labels: None,
        }
    }

    pub fn family(id: &str, kind: GroupKind, dim: usize, copies: usize) -> Self {
        GroupDecl {
            copies: Some(copies),
            ..Self::single(id, kind, dim)
        }
    }

    /// A single group whose coordinates are labelled by `enumerate_exponents(n, weight)`.
    pub fn indexed(id: &str, kind: GroupKind, n: usize, weight: u32) -> Self {
        let labels = IndexLabels { n, weight };
        GroupDecl {
            id: id.to_string(),
            kind,
            dim: labels.count() - 1,
            copies: None,
            labels: Some(labels),
        }
    }

    pub fn num_copies(&self) -> usize {
        self.copies.unwrap_or(1)
    }

    fn compatible(&self, other: &GroupDecl) -> bool {
        self.id == other.id
            && self.kind == other.kind
            && self.dim == other.dim
            && self.labels == other.labels
            && self.copies.is_some() == other.copies.is_some()
    }
}

/// A reference to one block: group id plus copy index (0 for single groups).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockRef {
    pub group: String,
    pub copy: usize,
}

impl BlockRef {
    pub fn new(group: &str, copy: usize) -> Self {
        BlockRef {
            group: group.to_string(),
            copy,
        }
    }
}

impl fmt::Display for BlockRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.group, self.copy)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Block {
    pub group: usize,
    pub copy: usize,
    /// Offset of the degree slot in a monomial key; coordinates follow it.
    pub key: usize,
    pub len: usize,
}

/// An ordered list of group declarations.
///
/// Monomials compare block by block in declaration order, graded
/// lexicographically within each block.
#[derive(Debug, Clone)]
pub struct Ring {
    groups: Vec<GroupDecl>,
    blocks: Vec<Block>,
    key_len: usize,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.groups == other.groups
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new(groups: Vec<GroupDecl>) -> Result<Self> {
        for (i, g) in groups.iter().enumerate() {
            if g.id.is_empty() || !g.id.chars().all(|c| c.is_ascii_alphabetic()) {
                return Err(Error::InvalidRing(format!(
                    "group id `{}` must be a non-empty run of ASCII letters",
                    g.id
                )));
            }
            if groups[..i].iter().any(|h| h.id == g.id) {
                return Err(Error::InvalidRing(format!("duplicate group id `{}`", g.id)));
            }
            if let Some(l) = g.labels {
                if l.count() != g.dim + 1 {
                    return Err(Error::InvalidRing(format!(
                        "group `{}` has {} labels but {} coordinates",
                        g.id,
                        l.count(),
                        g.dim + 1
                    )));
                }
            }
        }
        let mut blocks = Vec::new();
        let mut key = 0;
        for (gi, g) in groups.iter().enumerate() {
            for copy in 0..g.num_copies() {
                blocks.push(Block {
                    group: gi,
                    copy,
                    key,
                    len: g.dim + 1,
                });
                key += g.dim + 2;
            }
        }
        Ok(Ring {
            groups,
            blocks,
            key_len: key,
        })
    }

    /// The ring with no indeterminates.
    pub fn empty() -> Self {
        Ring {
            groups: Vec::new(),
            blocks: Vec::new(),
            key_len: 0,
        }
    }

    pub fn groups(&self) -> &[GroupDecl] {
        &self.groups
    }

    pub fn group(&self, id: &str) -> Option<&GroupDecl> {
        self.groups.iter().find(|g| g.id == id)
    }

    pub(crate) fn group_index(&self, id: &str) -> Option<usize> {
        self.groups.iter().position(|g| g.id == id)
    }

    pub(crate) fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub(crate) fn key_len(&self) -> usize {
        self.key_len
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn num_vars(&self) -> usize {
        self.blocks.iter().map(|b| b.len).sum()
    }

    pub fn block_index(&self, r: &BlockRef) -> Result<usize> {
        let gi = self
            .group_index(&r.group)
            .ok_or_else(|| Error::UnknownGroup(r.group.clone()))?;
        self.blocks
            .iter()
            .position(|b| b.group == gi && b.copy == r.copy)
            .ok_or_else(|| Error::UnknownGroup(format!("{}", r)))
    }

    pub fn block_ref(&self, block: usize) -> BlockRef {
        let b = &self.blocks[block];
        BlockRef::new(&self.groups[b.group].id, b.copy)
    }

    pub fn block_decl(&self, block: usize) -> &GroupDecl {
        &self.groups[self.blocks[block].group]
    }

    pub fn block_len(&self, block: usize) -> usize {
        self.blocks[block].len
    }

    /// Key position of coordinate `coord` of `block`.
    pub(crate) fn slot(&self, block: usize, coord: usize) -> usize {
        self.blocks[block].key + 1 + coord
    }

    /// Human name of a block, e.g. `X`, `L2`.
    pub fn block_name(&self, block: usize) -> String {
        let b = &self.blocks[block];
        let g = &self.groups[b.group];
        match g.copies {
            Some(_) => format!("{}{}", g.id, b.copy),
            None => g.id.clone(),
        }
    }

    /// Blocks of the given kind, in order.
    pub fn blocks_of_kind(&self, kind: GroupKind) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.block_decl(b).kind == kind)
            .collect()
    }

    /// The blocks of a family (or the single block of a single group), in copy order.
    pub fn family_blocks(&self, id: &str) -> Result<Vec<usize>> {
        let gi = self
            .group_index(id)
            .ok_or_else(|| Error::UnknownGroup(id.to_string()))?;
        Ok((0..self.blocks.len())
            .filter(|&b| self.blocks[b].group == gi)
            .collect())
    }

    /// Append a group.
    pub fn with_group(&self, g: GroupDecl) -> Result<Ring> {
        let mut groups = self.groups.clone();
        groups.push(g);
        Ring::new(groups)
    }

    /// Make the family `id` have at least `copies` copies.
    pub fn with_copies(&self, id: &str, copies: usize) -> Result<Ring> {
        let mut groups = self.groups.clone();
        let g = groups
            .iter_mut()
            .find(|g| g.id == id)
            .ok_or_else(|| Error::UnknownGroup(id.to_string()))?;
        match g.copies {
            Some(c) if c >= copies => return Ok(self.clone()),
            Some(_) => g.copies = Some(copies),
            None => {
                return Err(Error::InvalidRing(format!(
                    "group `{}` is not a family",
                    id
                )))
            }
        }
        Ring::new(groups)
    }

    /// Drop a block if it is a single group or the last copy of a family.
    pub fn without_block(&self, block: usize) -> Ring {
        let b = &self.blocks[block];
        let mut groups = self.groups.clone();
        match groups[b.group].copies {
            None => {
                groups.remove(b.group);
            }
            Some(c) if b.copy + 1 == c => groups[b.group].copies = Some(c - 1),
            Some(_) => return self.clone(),
        }
        Ring::new(groups).expect("removing a block keeps the ring valid")
    }

    /// Ring containing the groups of both; families are merged to the larger copy count.
    pub fn union(&self, other: &Ring) -> Result<Ring> {
        if self == other {
            return Ok(self.clone());
        }
        let mut groups = self.groups.clone();
        for g in &other.groups {
            match groups.iter_mut().find(|h| h.id == g.id) {
                Some(h) => {
                    if !h.compatible(g) {
                        return Err(Error::RingMismatch(format!(
                            "group `{}` is declared differently",
                            g.id
                        )));
                    }
                    if let (Some(a), Some(b)) = (h.copies, g.copies) {
                        h.copies = Some(a.max(b));
                    }
                }
                None => groups.push(g.clone()),
            }
        }
        Ring::new(groups)
    }

    /// A group id starting with `base` that is not used in this ring.
    pub fn fresh_id(&self, base: &str) -> String {
        if self.group(base).is_none() {
            return base.to_string();
        }
        let mut suffix = String::new();
        loop {
            suffix.push('x');
            let id = format!("{base}{suffix}");
            if self.group(&id).is_none() {
                return id;
            }
        }
    }

    /// Map from key positions of `self` to key positions in `target`, matching
    /// blocks by group id and copy.
    pub(crate) fn key_map(&self, target: &Ring) -> Vec<Option<usize>> {
        let mut map = alloc::vec![None; self.key_len];
        for b in &self.blocks {
            let g = &self.groups[b.group];
            let Some(tg) = target.group_index(&g.id) else {
                continue;
            };
            if !target.groups[tg].compatible(g) {
                continue;
            }
            if let Some(tb) = target
                .blocks
                .iter()
                .find(|t| t.group == tg && t.copy == b.copy)
            {
                map[b.key] = Some(tb.key);
                for c in 0..b.len {
                    map[b.key + 1 + c] = Some(tb.key + 1 + c);
                }
            }
        }
        map
    }
}
