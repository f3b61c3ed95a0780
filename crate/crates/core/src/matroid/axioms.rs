use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};

/// Size limit for the exhaustive axiom scan.
pub const AXIOM_LIMIT: usize = 20;

/// A ground set with an explicit family of "independent" subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    ground: GroundSet,
    family: HashSet<Subset>,
}

impl SetSystem {
    pub fn new(ground: GroundSet, family: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let family: HashSet<Subset> = family.into_iter().collect();
        for &s in &family {
            ground.check(s)?;
        }
        Ok(SetSystem { ground, family })
    }

    /// Tabulates an oracle. Guarded by [`AXIOM_LIMIT`].
    pub fn from_oracle(m: &dyn Matroid) -> Result<Self> {
        Error::guard("set system", m.size(), AXIOM_LIMIT)?;
        let family = m.ground().full().subsets().filter(|&x| m.is_independent(x));
        SetSystem::new(m.ground().clone(), family)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn contains(&self, x: Subset) -> bool {
        self.family.contains(&x)
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    /// Members in increasing bitmask order.
    pub fn members(&self) -> Vec<Subset> {
        let mut v: Vec<Subset> = self.family.iter().copied().collect();
        v.sort();
        v
    }
}

impl Matroid for SetSystem {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn is_independent(&self, x: Subset) -> bool {
        self.family.contains(&x)
    }
}

/// Checks the empty set, downward closure and exchange.
///
/// Exchange is tested through the largest-member-size function `m(X)`: a
/// downward-closed family is a matroid iff `m` is submodular, which reduces to
/// `m(X+a) + m(X+b) >= m(X+a+b) + m(X)` for all `X` and `a, b` outside `X`.
pub fn verify_axioms(s: &SetSystem) -> Result<bool> {
    let n = s.ground.len();
    Error::guard("axiom scan", n, AXIOM_LIMIT)?;
    if !s.contains(Subset::EMPTY) {
        return Ok(false);
    }
    for &x in &s.family {
        if x.iter().any(|p| !s.contains(x.without(p))) {
            return Ok(false);
        }
    }
    let total = 1usize << n;
    let mut best = vec![0u8; total];
    for x in 1..total {
        best[x] = if s.contains(Subset(x as u64)) {
            (x as u64).count_ones() as u8
        } else {
            Subset(x as u64)
                .iter()
                .map(|p| best[x & !(1 << p)])
                .max()
                .unwrap_or(0)
        };
    }
    for x in 0..total {
        let outside = Subset(!(x as u64)).intersection(Subset::full(n));
        for a in outside.iter() {
            for b in outside.iter().filter(|&b| b > a) {
                let xa = best[x | 1 << a] as i32;
                let xb = best[x | 1 << b] as i32;
                let xab = best[x | 1 << a | 1 << b] as i32;
                if xa + xb < xab + best[x] as i32 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Textbook exchange check over all pairs of members; quadratic in the family size.
pub fn verify_exchange_pairwise(s: &SetSystem) -> bool {
    let members = s.members();
    members.iter().all(|&i| {
        members
            .iter()
            .all(|&j| j.len() <= i.len() || j.difference(i).iter().any(|e| s.contains(i.with(e))))
    })
}
