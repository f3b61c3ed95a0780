//! Generators for the bicircular loop gadget and the integer-gain families.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::zoo::frame::{bicircular_oracle, gain_oracle, FrameOracle, GainGraph};
use crate::zoo::graph::{Edge, Multigraph, SimpleGraph};
use crate::zoo::group::{Elem, Group};

/// `G°`: the edges of `G` (ids `1..=m`, sorted order) plus two loops at every
/// vertex `v` (ids `m + 2v - 1` and `m + 2v`), with its bicircular oracle.
pub fn courcelle_gadget(g: &SimpleGraph) -> Result<(Multigraph, FrameOracle)> {
    let m = g.edges().len() as u32;
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| Edge {
            id: i as u32 + 1,
            u,
            v,
        })
        .collect();
    for v in 1..=g.vertex_count() {
        for id in [m + 2 * v - 1, m + 2 * v] {
            edges.push(Edge { id, u: v, v });
        }
    }
    let graph = Multigraph::new((1..=g.vertex_count()).collect(), edges)?;
    let oracle = bicircular_oracle(&graph, &[])?;
    Ok((graph, oracle))
}

/// Loop ids of vertex `v` in [`courcelle_gadget`] of a graph with `m` edges.
pub fn gadget_loops(m: usize, v: u32) -> [u32; 2] {
    let m = m as u32;
    [m + 2 * v - 1, m + 2 * v]
}

/// Integer sets `A`, `B` whose pairwise sums are distinct and avoid `A ∪ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaunchSets {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl RaunchSets {
    /// Sums `a_i + b_j` in row-major order.
    pub fn sums(&self) -> Vec<i64> {
        self.a
            .iter()
            .flat_map(|&x| self.b.iter().map(move |&y| x + y))
            .collect()
    }

    /// Whether all sums are distinct and disjoint from `A ∪ B`.
    pub fn validate(&self) -> bool {
        let sums = self.sums();
        let distinct: BTreeSet<i64> = sums.iter().copied().collect();
        let ab: BTreeSet<i64> = self.a.iter().chain(&self.b).copied().collect();
        distinct.len() == self.a.len() * self.b.len() && distinct.is_disjoint(&ab)
    }
}

/// `A = {1..m}`, `B = {k(m+1) : 1 ≤ k ≤ n}`.
pub fn raunch_sets(m: usize, n: usize) -> Result<RaunchSets> {
    if m == 0 || n == 0 {
        return Err(Error::domain("raunch_sets needs m, n >= 1"));
    }
    let step = m as i64 + 1;
    let sets = RaunchSets {
        a: (1..=m as i64).collect(),
        b: (1..=n as i64).map(|k| k * step).collect(),
    };
    if !sets.validate() {
        return Err(Error::domain("construction failed validation"));
    }
    Ok(sets)
}

/// Three-vertex integer gain graph: `q` edges `1 -> 2` labelled by `A`
/// (ids `1..=q`), `q` edges `2 -> 3` labelled by `B` (ids `q+1..=2q`), and `q²`
/// edges `1 -> 3` labelled by `a_i + b_j` (ids from `2q+1`, row-major in `(i, j)`).
pub fn object_construction(q: usize) -> Result<(GainGraph, FrameOracle)> {
    let sets = raunch_sets(q, q)?;
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    let mut id = 0u32;
    let mut push = |u: u32, v: u32, g: i64, edges: &mut Vec<Edge>, labels: &mut Vec<Elem>| {
        id += 1;
        edges.push(Edge { id, u, v });
        labels.push(Elem(g));
    };
    for &a in &sets.a {
        push(1, 2, a, &mut edges, &mut labels);
    }
    for &b in &sets.b {
        push(2, 3, b, &mut edges, &mut labels);
    }
    for s in sets.sums() {
        push(1, 3, s, &mut edges, &mut labels);
    }
    let graph = Multigraph::new(vec![1, 2, 3], edges)?;
    let gain = GainGraph::new(graph, Group::Integers, labels)?;
    let oracle = gain_oracle(&gain);
    Ok((gain, oracle))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Matroid;
    use crate::set::Subset;

    #[test]
    fn raunch_examples() {
        let s = raunch_sets(2, 2).unwrap();
        assert_eq!(s.a, vec![1, 2]);
        assert_eq!(s.b, vec![3, 6]);
        assert_eq!(s.sums(), vec![4, 7, 5, 8]);
        let one = raunch_sets(1, 1).unwrap();
        assert_eq!((one.a, one.b), (vec![1], vec![2]));
        assert!(raunch_sets(0, 3).is_err());
        assert!(!RaunchSets {
            a: vec![1, 2],
            b: vec![1]
        }
        .validate());
    }

    #[test]
    fn object_construction_triangles() {
        let (g, m) = object_construction(2).unwrap();
        assert_eq!(g.graph().edges().len(), 8);
        let ids = |v: &[u32]| m.ground().subset_of_ids(v.iter().copied()).unwrap();
        // a1 = edge 1, b1 = edge 3; a1 + b1 = 4 is the first sum edge (id 5).
        assert!(!m.is_independent(ids(&[1, 3, 5])));
        // a2 + b2 = 8 is the last sum edge (id 8).
        assert!(m.is_independent(ids(&[1, 3, 8])));
        assert!(m.is_independent(Subset::EMPTY));
    }

    #[test]
    fn gadget_of_single_vertex() {
        let (g, m) = courcelle_gadget(&SimpleGraph::new(1, []).unwrap()).unwrap();
        assert_eq!(g.edges().len(), 2);
        assert!(!m.is_independent(Subset(0b11)));
        assert!(m.is_independent(Subset(0b01)));
        let (empty, m0) = courcelle_gadget(&SimpleGraph::new(0, []).unwrap()).unwrap();
        assert!(empty.edges().is_empty() && m0.size() == 0);
    }
}
