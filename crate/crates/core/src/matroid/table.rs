use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};

/// Ground-set size limit for materialising a full table.
pub const TABLE_LIMIT: usize = 24;

/// Independence and rank of every subset, filled with one oracle call per subset.
///
/// The greedy basis of `X` is the greedy basis of `X` minus its largest element,
/// plus that element when the union stays independent.
#[derive(Clone, Debug)]
pub struct IndependenceTable {
    ground: GroundSet,
    basis: Vec<u64>,
    independent: Vec<bool>,
}

impl IndependenceTable {
    pub fn build(m: &dyn Matroid) -> Result<Self> {
        let n = m.size();
        Error::guard("independence table", n, TABLE_LIMIT)?;
        let total = 1usize << n;
        let mut basis = vec![0u64; total];
        let mut independent = vec![false; total];
        independent[0] = true;
        for x in 1..total {
            let top = 63 - (x as u64).leading_zeros() as usize;
            let rest = x & !(1 << top);
            let cand = basis[rest] | 1 << top;
            basis[x] = if m.is_independent(Subset(cand)) {
                cand
            } else {
                basis[rest]
            };
            independent[x] = basis[x] == x as u64;
        }
        Ok(IndependenceTable {
            ground: m.ground().clone(),
            basis,
            independent,
        })
    }

    pub fn rank(&self, x: Subset) -> usize {
        self.basis[x.0 as usize].count_ones() as usize
    }

    pub fn greedy_basis(&self, x: Subset) -> Subset {
        Subset(self.basis[x.0 as usize])
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.ground.full())
    }

    pub fn connectivity(&self, u: Subset) -> usize {
        let full = self.ground.full();
        self.rank(u) + self.rank(full.difference(u)) - self.rank(full)
    }
}

impl Matroid for IndependenceTable {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn is_independent(&self, x: Subset) -> bool {
        self.independent[x.0 as usize]
    }
}
