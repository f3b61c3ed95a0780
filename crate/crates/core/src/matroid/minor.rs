use crate::error::{Error, Result};
use crate::matroid::ops::basis_of;
use crate::matroid::{Matroid, SharedMatroid};
use crate::set::{GroundSet, Subset};

/// Elements to contract and delete, as identifiers of the parent ground set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MinorSpec {
    pub contract: Vec<u32>,
    pub delete: Vec<u32>,
}

impl MinorSpec {
    pub fn contract(ids: impl Into<Vec<u32>>) -> Self {
        MinorSpec {
            contract: ids.into(),
            delete: Vec::new(),
        }
    }

    pub fn delete(ids: impl Into<Vec<u32>>) -> Self {
        MinorSpec {
            contract: Vec::new(),
            delete: ids.into(),
        }
    }
}

/// Oracle for `M / C \ D`, keeping the parent's element identifiers.
pub struct MinorOracle {
    parent: SharedMatroid,
    ground: GroundSet,
    /// Parent position of each minor position.
    lift: Vec<usize>,
    /// Greedy basis of the contracted set, in parent positions.
    contract_basis: Subset,
}

impl MinorOracle {
    fn lift(&self, x: Subset) -> Subset {
        Subset::from_positions(x.iter().map(|p| self.lift[p]))
    }
}

impl Matroid for MinorOracle {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn is_independent(&self, x: Subset) -> bool {
        self.parent
            .is_independent(self.lift(x).union(self.contract_basis))
    }
}

pub fn minor(m: SharedMatroid, spec: &MinorSpec) -> Result<MinorOracle> {
    let g = m.ground();
    let c = g.subset_of_ids(spec.contract.iter().copied())?;
    let d = g.subset_of_ids(spec.delete.iter().copied())?;
    if !c.is_disjoint(d) {
        return Err(Error::domain(format!(
            "contracted and deleted sets overlap in {}",
            g.display(c.intersection(d))
        )));
    }
    let keep = g.full().difference(c.union(d));
    let lift: Vec<usize> = keep.iter().collect();
    let ground = GroundSet::new(g.ids_of(keep))?;
    let contract_basis = basis_of(m.as_ref(), c);
    Ok(MinorOracle {
        parent: m,
        ground,
        lift,
        contract_basis,
    })
}

/// Oracle for the dual matroid: `X` is independent iff `E - X` is spanning.
pub struct DualOracle {
    parent: SharedMatroid,
    full_rank: usize,
}

impl Matroid for DualOracle {
    fn ground(&self) -> &GroundSet {
        self.parent.ground()
    }

    fn is_independent(&self, x: Subset) -> bool {
        let rest = self.parent.ground().full().difference(x);
        basis_of(self.parent.as_ref(), rest).len() == self.full_rank
    }
}

pub fn dual(m: SharedMatroid) -> DualOracle {
    let full_rank = basis_of(m.as_ref(), m.ground().full()).len();
    DualOracle {
        parent: m,
        full_rank,
    }
}
