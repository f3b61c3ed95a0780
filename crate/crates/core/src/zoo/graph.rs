use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::set::{GroundSet, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: u32,
    pub u: u32,
    pub v: u32,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn other(&self, w: u32) -> u32 {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A multigraph with loops and parallel edges. Edges keep their input order;
/// the matroid ground set is the set of edge ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<u32>,
    edges: Vec<Edge>,
    ground: GroundSet,
    /// Edge index for each ground position.
    by_pos: Vec<usize>,
}

impl Multigraph {
    pub fn new(vertices: Vec<u32>, edges: Vec<Edge>) -> Result<Self> {
        let mut vs = vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        if vs.len() != vertices.len() {
            return Err(Error::domain("duplicate vertex id"));
        }
        for e in &edges {
            for w in [e.u, e.v] {
                if vs.binary_search(&w).is_err() {
                    return Err(Error::domain(format!(
                        "edge {} has unknown endpoint {w}",
                        e.id
                    )));
                }
            }
        }
        let ground = GroundSet::new(edges.iter().map(|e| e.id).collect())
            .map_err(|err| Error::domain(format!("edge ids: {err}")))?;
        let mut by_pos = vec![0; edges.len()];
        for (i, e) in edges.iter().enumerate() {
            by_pos[ground.position(e.id).unwrap()] = i;
        }
        Ok(Multigraph {
            vertices: vs,
            edges,
            ground,
            by_pos,
        })
    }

    /// Vertices `1..=n` with edges given as `(id, u, v)`.
    pub fn with_vertex_count(n: u32, edges: &[(u32, u32, u32)]) -> Result<Self> {
        Multigraph::new(
            (1..=n).collect(),
            edges.iter().map(|&(id, u, v)| Edge { id, u, v }).collect(),
        )
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Edges in input order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn edge_at(&self, pos: usize) -> &Edge {
        &self.edges[self.by_pos[pos]]
    }

    pub fn edge_index(&self, pos: usize) -> usize {
        self.by_pos[pos]
    }

    pub fn edge(&self, id: u32) -> Option<&Edge> {
        self.ground.position(id).map(|p| self.edge_at(p))
    }

    pub fn has_vertex(&self, v: u32) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Vertices incident with at least one edge of `x`.
    pub fn incident_vertices(&self, x: Subset) -> BTreeSet<u32> {
        x.iter()
            .flat_map(|p| {
                let e = self.edge_at(p);
                [e.u, e.v]
            })
            .collect()
    }

    /// `|E(G[X])| - |V(G[X])|` for the edge-induced subgraph.
    pub fn nu(&self, x: Subset) -> i64 {
        x.len() as i64 - self.incident_vertices(x).len() as i64
    }

    /// Vertices incident with edges of both `u` and its complement.
    pub fn boundary(&self, u: Subset) -> BTreeSet<u32> {
        let rest = self.ground.full().difference(u);
        let a = self.incident_vertices(u);
        let b = self.incident_vertices(rest);
        a.intersection(&b).copied().collect()
    }

    /// Connected components of `G[X]` as edge sets, ordered by least vertex.
    pub fn components(&self, x: Subset) -> Vec<Subset> {
        let mut parent: BTreeMap<u32, u32> = BTreeMap::new();
        fn find(parent: &mut BTreeMap<u32, u32>, v: u32) -> u32 {
            let p = *parent.entry(v).or_insert(v);
            if p == v {
                return v;
            }
            let r = find(parent, p);
            parent.insert(v, r);
            r
        }
        for p in x.iter() {
            let e = *self.edge_at(p);
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a != b {
                let (lo, hi) = (a.min(b), a.max(b));
                parent.insert(hi, lo);
            }
        }
        let mut comps: BTreeMap<u32, Subset> = BTreeMap::new();
        for p in x.iter() {
            let root = find(&mut parent, self.edge_at(p).u);
            comps.entry(root).or_default().insert(p);
        }
        comps.into_values().collect()
    }

    pub fn is_connected_edges(&self, x: Subset) -> bool {
        self.components(x).len() <= 1
    }

    /// The graph without the edges in `x` (vertices are kept).
    pub fn delete_edges(&self, x: Subset) -> Multigraph {
        let edges = self
            .edges
            .iter()
            .filter(|e| !x.contains(self.ground.position(e.id).unwrap()))
            .copied()
            .collect();
        Multigraph::new(self.vertices.clone(), edges).expect("subgraph of a valid graph")
    }
}

/// A simple graph on vertices `1..=n`; edges are stored with `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: u32,
    edges: Vec<(u32, u32)>,
}

impl SimpleGraph {
    pub fn new(n: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut out = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::domain(format!("loop at {u} in a simple graph")));
            }
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::domain(format!("edge {u} {v} outside 1..={n}")));
            }
            if !out.insert((u.min(v), u.max(v))) {
                return Err(Error::domain(format!("parallel edge {u} {v}")));
            }
        }
        Ok(SimpleGraph {
            n,
            edges: out.into_iter().collect(),
        })
    }

    pub fn complete(n: u32) -> SimpleGraph {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        SimpleGraph::new(n, edges).unwrap()
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Every simple graph on `n` labelled vertices.
    pub fn all(n: u32) -> impl Iterator<Item = SimpleGraph> {
        let pairs: Vec<(u32, u32)> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            SimpleGraph::new(n, edges).unwrap()
        })
    }
}
