use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};

/// A digraph on the ground set with a target set `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammoidPresentation {
    ground: GroundSet,
    arcs: Vec<(u32, u32)>,
    targets: Vec<u32>,
    /// Out-neighbours by ground position.
    out: Vec<Vec<usize>>,
    target_set: Subset,
}

impl GammoidPresentation {
    pub fn new(vertices: Vec<u32>, arcs: Vec<(u32, u32)>, targets: Vec<u32>) -> Result<Self> {
        let ground = GroundSet::new(vertices)?;
        let target_set = ground.subset_of_ids(targets.iter().copied())?;
        if target_set.len() != targets.len() {
            return Err(Error::domain("duplicate target"));
        }
        let mut out = vec![Vec::new(); ground.len()];
        for &(u, v) in &arcs {
            let pu = ground.position(u).ok_or(Error::NotInGround(u))?;
            let pv = ground.position(v).ok_or(Error::NotInGround(v))?;
            if pu == pv {
                return Err(Error::domain(format!("arc {u} {v} is a loop")));
            }
            if !out[pu].contains(&pv) {
                out[pu].push(pv);
            }
        }
        Ok(GammoidPresentation {
            ground,
            arcs,
            targets,
            out,
            target_set,
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn vertices(&self) -> &[u32] {
        self.ground.ids()
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn targets(&self) -> &[u32] {
        &self.targets
    }

    /// Maximum number of vertex-disjoint directed paths from `x` to `T`.
    pub fn linkage(&self, x: Subset) -> usize {
        let n = self.ground.len();
        // Split each vertex v into v_in = 2v and v_out = 2v + 1 with capacity 1.
        // Source = 2n, sink = 2n + 1.
        let (source, sink) = (2 * n, 2 * n + 1);
        let size = 2 * n + 2;
        let mut cap = vec![vec![0i32; size]; size];
        for v in 0..n {
            cap[2 * v][2 * v + 1] = 1;
            for &w in &self.out[v] {
                cap[2 * v + 1][2 * w] = 1;
            }
            if x.contains(v) {
                cap[source][2 * v] = 1;
            }
            if self.target_set.contains(v) {
                cap[2 * v + 1][sink] = 1;
            }
        }
        let mut flow = 0;
        loop {
            let mut prev = vec![usize::MAX; size];
            prev[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(a) = queue.pop_front() {
                for b in 0..size {
                    if cap[a][b] > 0 && prev[b] == usize::MAX {
                        prev[b] = a;
                        queue.push_back(b);
                    }
                }
            }
            if prev[sink] == usize::MAX {
                return flow;
            }
            let mut b = sink;
            while b != source {
                let a = prev[b];
                cap[a][b] -= 1;
                cap[b][a] += 1;
                b = a;
            }
            flow += 1;
        }
    }

    /// The same digraph with a new vertex `e` and arcs from `e` to each id in `f`.
    pub fn with_source_vertex(&self, e: u32, f: &[u32]) -> Result<GammoidPresentation> {
        let mut vertices = self.ground.ids().to_vec();
        vertices.push(e);
        let mut arcs = self.arcs.clone();
        arcs.extend(f.iter().map(|&x| (e, x)));
        GammoidPresentation::new(vertices, arcs, self.targets.clone())
    }
}

pub struct StrictGammoidOracle {
    presentation: GammoidPresentation,
}

impl Matroid for StrictGammoidOracle {
    fn ground(&self) -> &GroundSet {
        &self.presentation.ground
    }

    fn is_independent(&self, x: Subset) -> bool {
        self.presentation.linkage(x) == x.len()
    }
}

pub fn strict_gammoid_oracle(p: &GammoidPresentation) -> StrictGammoidOracle {
    StrictGammoidOracle {
        presentation: p.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_presentations() {
        let free = GammoidPresentation::new(vec![1, 2, 3], vec![], vec![1, 2, 3]).unwrap();
        let m = strict_gammoid_oracle(&free);
        assert!(m.is_independent(Subset(0b111)));
        let none = GammoidPresentation::new(vec![1, 2, 3], vec![(1, 2)], vec![]).unwrap();
        let m = strict_gammoid_oracle(&none);
        assert!((0..3).all(|p| !m.is_independent(Subset::singleton(p))));
    }

    #[test]
    fn star_into_one_target() {
        let g = GammoidPresentation::new(vec![1, 2, 3], vec![(1, 3), (2, 3)], vec![3]).unwrap();
        let m = strict_gammoid_oracle(&g);
        assert!(m.is_independent(Subset(0b001)));
        assert!(!m.is_independent(Subset(0b011)));
        assert!(!m.is_independent(Subset(0b101)));
    }

    #[test]
    fn paths_must_be_vertex_disjoint() {
        // 1 -> 3 -> 4 and 2 -> 3 -> 5: both routes pass through 3.
        let g = GammoidPresentation::new(
            vec![1, 2, 3, 4, 5],
            vec![(1, 3), (2, 3), (3, 4), (3, 5)],
            vec![4, 5],
        )
        .unwrap();
        assert_eq!(g.linkage(Subset(0b00011)), 1);
        assert_eq!(g.linkage(Subset(0b00001)), 1);
    }
}
