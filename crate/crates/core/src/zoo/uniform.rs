use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};

/// `U_{r,n}` on `{1, ..., n}`.
#[derive(Clone, Debug)]
pub struct UniformOracle {
    rank: usize,
    ground: GroundSet,
}

impl UniformOracle {
    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl Matroid for UniformOracle {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn is_independent(&self, x: Subset) -> bool {
        x.len() <= self.rank
    }
}

pub fn uniform_oracle(r: usize, n: usize) -> Result<UniformOracle> {
    if r > n {
        return Err(Error::domain(format!("rank {r} exceeds size {n}")));
    }
    Ok(UniformOracle {
        rank: r,
        ground: GroundSet::one_based(n)?,
    })
}
