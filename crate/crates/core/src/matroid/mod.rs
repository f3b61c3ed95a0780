//! The independence-oracle interface and everything derived from it.

mod axioms;
mod minor;
mod ops;
mod table;

use std::sync::Arc;

use crate::set::{GroundSet, Subset};

pub use axioms::{verify_axioms, verify_exchange_pairwise, SetSystem, AXIOM_LIMIT};
pub use minor::{dual, minor, DualOracle, MinorOracle, MinorSpec};
pub use ops::{
    closure, connectivity, connectivity_ids, is_flat, is_n_connected, rank, rank_ids,
    CONNECTIVITY_LIMIT,
};
pub use table::{IndependenceTable, TABLE_LIMIT};

/// A matroid presented by an independence predicate over its ground set.
///
/// `is_independent` receives a subset of positions in [`Matroid::ground`]; callers
/// must not pass positions outside it.
pub trait Matroid: Send + Sync {
    fn ground(&self) -> &GroundSet;

    fn is_independent(&self, x: Subset) -> bool;

    fn size(&self) -> usize {
        self.ground().len()
    }
}

pub type SharedMatroid = Arc<dyn Matroid>;

impl<M: Matroid + ?Sized> Matroid for Arc<M> {
    fn ground(&self) -> &GroundSet {
        (**self).ground()
    }

    fn is_independent(&self, x: Subset) -> bool {
        (**self).is_independent(x)
    }
}

impl<M: Matroid + ?Sized> Matroid for &M {
    fn ground(&self) -> &GroundSet {
        (**self).ground()
    }

    fn is_independent(&self, x: Subset) -> bool {
        (**self).is_independent(x)
    }
}

/// `true` when both oracles have the same ground set and agree on every subset.
pub fn same_matroid(a: &dyn Matroid, b: &dyn Matroid) -> bool {
    a.ground() == b.ground()
        && a.ground()
            .full()
            .subsets()
            .all(|x| a.is_independent(x) == b.is_independent(x))
}

/// Subsets that are minimally dependent.
pub fn circuits(m: &dyn Matroid) -> Vec<Subset> {
    m.ground()
        .full()
        .subsets()
        .filter(|&c| !m.is_independent(c) && c.iter().all(|p| m.is_independent(c.without(p))))
        .collect()
}

/// Circuits with at most `k` elements, found without sweeping the whole power set.
pub fn small_circuits(m: &dyn Matroid, k: usize) -> Vec<Subset> {
    let n = m.size();
    let mut out = Vec::new();
    let mut stack = vec![(Subset::EMPTY, 0usize)];
    while let Some((s, next)) = stack.pop() {
        if !s.is_empty() && !m.is_independent(s) {
            if s.iter().all(|p| m.is_independent(s.without(p))) {
                out.push(s);
            }
            continue;
        }
        if s.len() == k {
            continue;
        }
        for p in next..n {
            stack.push((s.with(p), p + 1));
        }
    }
    out.sort();
    out
}
