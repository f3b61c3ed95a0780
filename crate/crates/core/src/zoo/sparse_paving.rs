use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};
use crate::zoo::graph::SimpleGraph;

/// The rank-3 sparse paving matroid `m(G)`: elements `1..=n` are the vertices
/// and `n+1..=n+|E|` the edges in sorted order. Its only non-spanning circuits
/// are the triples `{u, uv, v}`.
pub struct SparsePavingOracle {
    graph: SimpleGraph,
    ground: GroundSet,
    triangles: HashSet<Subset>,
}

impl SparsePavingOracle {
    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    /// Element id of the `k`-th edge (zero-based, sorted order).
    pub fn edge_element(&self, k: usize) -> u32 {
        self.graph.vertex_count() + 1 + k as u32
    }
}

impl Matroid for SparsePavingOracle {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn is_independent(&self, x: Subset) -> bool {
        match x.len() {
            0..=2 => true,
            3 => !self.triangles.contains(&x),
            _ => false,
        }
    }
}

pub fn m_of_graph(g: &SimpleGraph) -> Result<SparsePavingOracle> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::domain(format!(
            "m(G) needs at least 3 vertices, got {n}"
        )));
    }
    let ground = GroundSet::one_based(n as usize + g.edges().len())?;
    // Ground position of element id k is k - 1.
    let triangles = g
        .edges()
        .iter()
        .enumerate()
        .map(|(k, &(u, v))| {
            Subset::from_positions([u as usize - 1, v as usize - 1, n as usize + k])
        })
        .collect();
    Ok(SparsePavingOracle {
        graph: g.clone(),
        ground,
        triangles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{closure, rank, verify_axioms, SetSystem};

    #[test]
    fn k3_circuits_and_closure() {
        let m = m_of_graph(&SimpleGraph::complete(3)).unwrap();
        // Elements: v1 v2 v3 = 1 2 3; e12 e13 e23 = 4 5 6.
        let v1e12v2 = m.ground().subset_of_ids([1, 4, 2]).unwrap();
        assert!(!m.is_independent(v1e12v2));
        assert_eq!(rank(&m, v1e12v2).unwrap(), 2);
        assert!(m.is_independent(m.ground().subset_of_ids([1, 2, 3]).unwrap()));
        let cl = closure(&m, m.ground().subset_of_ids([1, 2]).unwrap()).unwrap();
        assert_eq!(m.ground().ids_of(cl), vec![1, 2, 4]);
    }

    #[test]
    fn small_complete_graphs_are_matroids() {
        for n in 3..=4 {
            let m = m_of_graph(&SimpleGraph::complete(n)).unwrap();
            assert!(verify_axioms(&SetSystem::from_oracle(&m).unwrap()).unwrap());
        }
        assert!(m_of_graph(&SimpleGraph::complete(2)).is_err());
    }
}
