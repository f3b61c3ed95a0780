//! Seeded instance generators. Every generator draws only from the given
//! stream, so `(seed, index)` pins down an instance.

use crate::error::Result;
use crate::set::Subset;
use crate::zoo::{
    BicircularGraph, BipartitePresentation, Elem, GainGraph, GammoidPresentation, Group, Instance,
    LatticePathPresentation, LinearRep, Multigraph,
};

use super::rng::Lcg;

/// Instance families used by the suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Uniform,
    LinearGf2,
    LinearGf3,
    FTransversal,
    Bicircular,
    GainZ2,
    GainZ3,
    GainS3,
    LatticePath,
    Gammoid,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Uniform,
        Family::LinearGf2,
        Family::LinearGf3,
        Family::FTransversal,
        Family::Bicircular,
        Family::GainZ2,
        Family::GainZ3,
        Family::GainS3,
        Family::LatticePath,
        Family::Gammoid,
    ];

    /// The families with an efficient refinement.
    pub const REFINABLE: [Family; 8] = [
        Family::Uniform,
        Family::LinearGf2,
        Family::LinearGf3,
        Family::FTransversal,
        Family::Bicircular,
        Family::GainZ2,
        Family::GainZ3,
        Family::GainS3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Uniform => "uniform",
            Family::LinearGf2 => "linear-gf2",
            Family::LinearGf3 => "linear-gf3",
            Family::FTransversal => "ftransversal",
            Family::Bicircular => "bicircular",
            Family::GainZ2 => "gain-z2",
            Family::GainZ3 => "gain-z3",
            Family::GainS3 => "gain-s3",
            Family::LatticePath => "latticepath",
            Family::Gammoid => "gammoid",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }

    /// Largest ground set generated by default.
    pub fn default_max(self) -> usize {
        match self {
            Family::Uniform => 9,
            Family::LinearGf2 | Family::LinearGf3 => 12,
            Family::LatticePath => 12,
            _ => 10,
        }
    }

    /// Position of the family in [`Family::ALL`], used to separate streams.
    pub fn index(self) -> u64 {
        Family::ALL.iter().position(|&f| f == self).unwrap() as u64
    }

    /// Instance `index` of this family under `seed`, with at most `max`
    /// elements (at least 1).
    pub fn generate(self, seed: u64, index: u64, max: usize) -> Result<Instance> {
        let mut rng = Lcg::stream(seed ^ self.index() << 56, index);
        let max = max.max(1);
        Ok(match self {
            Family::Uniform => {
                let n = rng.range(1, max);
                Instance::Uniform {
                    r: rng.range(0, n),
                    n,
                }
            }
            Family::LinearGf2 => Instance::Linear(linear(&mut rng, 2, max)?),
            Family::LinearGf3 => Instance::Linear(linear(&mut rng, 3, max)?),
            Family::FTransversal => Instance::FTransversal(ftransversal(&mut rng, max.max(2))?),
            Family::Bicircular => Instance::Bicircular(bicircular(&mut rng, max)?),
            Family::GainZ2 => Instance::GainGraph(gain(&mut rng, Group::cyclic(2)?, max)?),
            Family::GainZ3 => Instance::GainGraph(gain(&mut rng, Group::cyclic(3)?, max)?),
            Family::GainS3 => Instance::GainGraph(gain(&mut rng, Group::symmetric3(), max)?),
            Family::LatticePath => Instance::LatticePath(lattice(&mut rng, max)?),
            Family::Gammoid => Instance::Gammoid(gammoid(&mut rng, max)?),
        })
    }
}

/// `GF(p)` matrix with 1 to 4 rows and up to `max` columns.
pub fn linear(rng: &mut Lcg, p: u32, max: usize) -> Result<LinearRep> {
    let cols = rng.range(1, max);
    let rows = rng.range(1, cols.min(4));
    let m = (0..rows)
        .map(|_| (0..cols).map(|_| rng.below(p as usize) as u32).collect())
        .collect();
    LinearRep::new(p, m)
}

/// Bipartite presentation on `A = 1..=a`, `B = a+1..=a+b` with `a + b ≤ max`
/// and each edge present with probability 1/2.
pub fn ftransversal(rng: &mut Lcg, max: usize) -> Result<BipartitePresentation> {
    let total = rng.range(2, max);
    let b = rng.range(1, total - 1);
    let a = total - b;
    bipartite(a as u32, b as u32, |_| rng.chance(1, 2))
}

/// Bipartite presentation on `A = 1..=a`, `B = a+1..=a+b` whose edges are the
/// pairs `(i, j)` (0-based, row-major index `i * b + j`) picked by `keep`.
pub fn bipartite(
    a: u32,
    b: u32,
    mut keep: impl FnMut(usize) -> bool,
) -> Result<BipartitePresentation> {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            if keep((i * b + j) as usize) {
                edges.push((i + 1, a + j + 1));
            }
        }
    }
    BipartitePresentation::new((1..=a).collect(), (a + 1..=a + b).collect(), edges)
}

/// Multigraph on 1 to 5 vertices with 1 to `max` edges (ids `1..`); about one
/// edge in six is a loop.
pub fn multigraph(rng: &mut Lcg, max: usize) -> Result<Multigraph> {
    let v = rng.range(1, 5) as u32;
    let m = rng.range(1, max);
    let edges: Vec<(u32, u32, u32)> = (1..=m as u32)
        .map(|id| {
            let u = rng.range(1, v as usize) as u32;
            let w = if v == 1 || rng.chance(1, 6) {
                u
            } else {
                let mut w = rng.range(1, v as usize - 1) as u32;
                if w >= u {
                    w += 1;
                }
                w
            };
            (id, u, w)
        })
        .collect();
    Multigraph::with_vertex_count(v, &edges)
}

pub fn bicircular(rng: &mut Lcg, max: usize) -> Result<BicircularGraph> {
    let g = multigraph(rng, max)?;
    let balanced: Vec<u32> = g
        .edges()
        .iter()
        .filter(|e| e.is_loop())
        .map(|e| e.id)
        .filter(|_| rng.chance(1, 4))
        .collect();
    BicircularGraph::new(g, balanced)
}

/// Gain graph over a finite group with uniformly random labels.
pub fn gain(rng: &mut Lcg, group: Group, max: usize) -> Result<GainGraph> {
    let g = multigraph(rng, max)?;
    let elems = group.elements().expect("finite group");
    let labels = g
        .edges()
        .iter()
        .map(|_| *rng.pick(&elems))
        .collect::<Vec<Elem>>();
    GainGraph::new(g, group, labels)
}

/// Lattice path presentation with `1..=max` steps: two random paths with the
/// same number of north steps, taking their pointwise lower and upper envelopes.
pub fn lattice(rng: &mut Lcg, max: usize) -> Result<LatticePathPresentation> {
    let n = rng.range(1, max);
    lattice_with_len(rng, n)
}

/// As [`lattice`], with exactly `n` steps.
pub fn lattice_with_len(rng: &mut Lcg, n: usize) -> Result<LatticePathPresentation> {
    let r = rng.range(0, n);
    let mut path = || {
        let mut steps = vec![false; n];
        let mut placed = 0;
        while placed < r {
            let i = rng.below(n);
            if !steps[i] {
                steps[i] = true;
                placed += 1;
            }
        }
        let mut h = vec![0usize];
        for &s in &steps {
            h.push(h.last().unwrap() + usize::from(s));
        }
        h
    };
    let (a, b) = (path(), path());
    let envelope = |pick: fn(usize, usize) -> usize| -> String {
        (1..=n)
            .map(|t| {
                if pick(a[t], b[t]) > pick(a[t - 1], b[t - 1]) {
                    'N'
                } else {
                    'E'
                }
            })
            .collect()
    };
    LatticePathPresentation::new(&envelope(usize::min), &envelope(usize::max))
}

/// Digraph on `1..=n` with each arc present with probability 1/4 and a random
/// target set.
pub fn gammoid(rng: &mut Lcg, max: usize) -> Result<GammoidPresentation> {
    let n = rng.range(1, max);
    let mut arcs = Vec::new();
    for u in 1..=n as u32 {
        for v in 1..=n as u32 {
            if u != v && rng.chance(1, 4) {
                arcs.push((u, v));
            }
        }
    }
    let targets = Subset(rng.subset(n)).iter().map(|p| p as u32 + 1).collect();
    GammoidPresentation::new((1..=n as u32).collect(), arcs, targets)
}

/// Random edge bipartition `(L, R)` of a multigraph as a subset of positions.
pub fn bipartition(rng: &mut Lcg, g: &Multigraph) -> Subset {
    Subset(rng.subset(g.edges().len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Matroid;

    #[test]
    fn generation_is_reproducible_and_sized() {
        for f in Family::ALL {
            for i in 0..30 {
                let a = f.generate(5, i, f.default_max()).unwrap();
                let b = f.generate(5, i, f.default_max()).unwrap();
                assert_eq!(a, b);
                assert!(a.oracle().unwrap().size() <= f.default_max());
            }
        }
    }
}
