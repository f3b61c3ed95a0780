//! Ground sets and subsets.
//!
//! A [`GroundSet`] is an ascending list of distinct element identifiers. Subsets are
//! bitmasks over *positions* in that list, so bit `i` of a [`Subset`] stands for the
//! `i`-th smallest identifier. Every iteration in the crate walks positions in
//! ascending order.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set a [`Subset`] can address.
pub const MAX_GROUND: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GroundSet {
    ids: Vec<u32>,
}

impl GroundSet {
    /// Builds a ground set from identifiers in any order. Duplicates are rejected.
    pub fn new(mut ids: Vec<u32>) -> Result<Self> {
        ids.sort_unstable();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::domain("ground set identifiers must be distinct"));
        }
        Error::guard("ground set", ids.len(), MAX_GROUND)?;
        Ok(GroundSet { ids })
    }

    /// The ground set `{1, ..., n}`.
    pub fn one_based(n: usize) -> Result<Self> {
        GroundSet::new((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[u32] {
        &self.ids
    }

    pub fn id(&self, pos: usize) -> u32 {
        self.ids[pos]
    }

    pub fn position(&self, id: u32) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn subset_of_ids<I: IntoIterator<Item = u32>>(&self, ids: I) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        for id in ids {
            let pos = self.position(id).ok_or(Error::NotInGround(id))?;
            s.insert(pos);
        }
        Ok(s)
    }

    pub fn ids_of(&self, s: Subset) -> Vec<u32> {
        s.iter().map(|p| self.ids[p]).collect()
    }

    /// Checks that `s` only uses positions inside this ground set.
    pub fn check(&self, s: Subset) -> Result<()> {
        if s.is_subset(self.full()) {
            Ok(())
        } else {
            let pos = s.difference(self.full()).iter().next().unwrap_or(0);
            Err(Error::Domain(format!(
                "subset uses position {pos} outside a ground set of size {}",
                self.len()
            )))
        }
    }

    /// Renders a subset as `{id,id,...}`.
    pub fn display(&self, s: Subset) -> String {
        let parts: Vec<String> = self.ids_of(s).iter().map(|i| i.to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// A set of ground-set positions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(pos: usize) -> Subset {
        Subset(1u64 << pos)
    }

    pub fn from_positions<I: IntoIterator<Item = usize>>(positions: I) -> Subset {
        let mut s = Subset::EMPTY;
        for p in positions {
            s.insert(p);
        }
        s
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, pos: usize) -> bool {
        pos < 64 && self.0 >> pos & 1 == 1
    }

    pub fn insert(&mut self, pos: usize) {
        self.0 |= 1u64 << pos;
    }

    pub fn remove(&mut self, pos: usize) {
        self.0 &= !(1u64 << pos);
    }

    pub fn with(self, pos: usize) -> Subset {
        Subset(self.0 | 1u64 << pos)
    }

    pub fn without(self, pos: usize) -> Subset {
        Subset(self.0 & !(1u64 << pos))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Positions in ascending order.
    pub fn iter(self) -> Positions {
        Positions(self.0)
    }

    /// Every subset of `self`, in increasing numeric order (starting with the empty set).
    pub fn subsets(self) -> Submasks {
        Submasks {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Compares the ascending position sequences lexicographically, so `{0} < {0,3} < {1}`.
    pub fn lex_cmp(self, other: Subset) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Positions(u64);

impl Iterator for Positions {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Positions {}

pub struct Submasks {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Submasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        // Carry-propagating increment restricted to the bits of `mask`.
        let succ = cur.wrapping_sub(self.mask) & self.mask;
        self.next = (succ != 0).then_some(succ);
        Some(Subset(cur))
    }
}
