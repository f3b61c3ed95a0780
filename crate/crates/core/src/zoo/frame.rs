use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};
use crate::zoo::graph::{Edge, Multigraph};
use crate::zoo::group::{Elem, Group};

/// A multigraph whose only balanced cycles are the listed loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicircularGraph {
    graph: Multigraph,
    balanced_loops: Vec<u32>,
    balanced: Subset,
}

impl BicircularGraph {
    pub fn new(graph: Multigraph, balanced_loops: Vec<u32>) -> Result<Self> {
        let balanced = graph
            .ground()
            .subset_of_ids(balanced_loops.iter().copied())?;
        if let Some(p) = balanced.iter().find(|&p| !graph.edge_at(p).is_loop()) {
            return Err(Error::domain(format!(
                "balanced loop {} is not a loop",
                graph.ground().id(p)
            )));
        }
        if balanced.len() != balanced_loops.len() {
            return Err(Error::domain("duplicate balanced loop"));
        }
        Ok(BicircularGraph {
            graph,
            balanced_loops,
            balanced,
        })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn balanced_loops(&self) -> &[u32] {
        &self.balanced_loops
    }
}

/// A multigraph with a gain function into a group. `labels[i]` is
/// `σ(e, u, v)` for the `i`-th edge in its stored orientation `(u, v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GainGraph {
    graph: Multigraph,
    group: Group,
    labels: Vec<Elem>,
}

impl GainGraph {
    pub fn new(graph: Multigraph, group: Group, labels: Vec<Elem>) -> Result<Self> {
        if labels.len() != graph.edges().len() {
            return Err(Error::domain("one label per edge is required"));
        }
        for &g in &labels {
            group.check(g)?;
        }
        Ok(GainGraph {
            graph,
            group,
            labels,
        })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    /// Labels in edge input order.
    pub fn labels(&self) -> &[Elem] {
        &self.labels
    }

    /// `σ(e, from, to)` for the edge at ground position `pos`.
    pub fn gain(&self, pos: usize, from: u32) -> Elem {
        let i = self.graph.edge_index(pos);
        let e = self.graph.edges()[i];
        if e.u == from {
            self.labels[i]
        } else {
            self.group.inv(self.labels[i])
        }
    }
}

/// Either kind of frame graph handled by the toolkit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrameGraph {
    Bicircular(BicircularGraph),
    Gain(GainGraph),
}

/// Balance status of a connected edge set, with gains of paths from its least vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Balance {
    pub balanced: bool,
    /// Present iff balanced. Bicircular graphs report the identity `Elem(0)`.
    pub anchored_gains: Option<BTreeMap<u32, Elem>>,
}

impl FrameGraph {
    pub fn graph(&self) -> &Multigraph {
        match self {
            FrameGraph::Bicircular(b) => &b.graph,
            FrameGraph::Gain(g) => &g.graph,
        }
    }

    fn identity(&self) -> Elem {
        match self {
            FrameGraph::Bicircular(_) => Elem(0),
            FrameGraph::Gain(g) => g.group.identity(),
        }
    }

    /// Spanning-forest potentials from the least vertex; then every edge of
    /// `d` must agree with them.
    pub fn balance(&self, d: Subset) -> Result<Balance> {
        let graph = self.graph();
        if graph.components(d).len() > 1 {
            return Err(Error::domain("edge set is not connected"));
        }
        let Some(root) = graph.incident_vertices(d).first().copied() else {
            return Ok(Balance {
                balanced: true,
                anchored_gains: Some(BTreeMap::new()),
            });
        };
        let mut adj: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for p in d.iter() {
            let e = graph.edge_at(p);
            adj.entry(e.u).or_default().push(p);
            if !e.is_loop() {
                adj.entry(e.v).or_default().push(p);
            }
        }
        let mut phi = BTreeMap::from([(root, self.identity())]);
        let mut tree = Subset::EMPTY;
        let mut queue = VecDeque::from([root]);
        while let Some(w) = queue.pop_front() {
            for &p in &adj[&w] {
                let e = graph.edge_at(p);
                let x = e.other(w);
                if phi.contains_key(&x) {
                    continue;
                }
                let gx = match self {
                    FrameGraph::Bicircular(_) => Elem(0),
                    FrameGraph::Gain(g) => g.group.mul(phi[&w], g.gain(p, w)),
                };
                phi.insert(x, gx);
                tree.insert(p);
                queue.push_back(x);
            }
        }
        let balanced = d.difference(tree).iter().all(|p| {
            let e = graph.edge_at(p);
            match self {
                FrameGraph::Bicircular(b) => b.balanced.contains(p),
                FrameGraph::Gain(g) => {
                    if e.is_loop() {
                        g.labels[graph.edge_index(p)] == g.group.identity()
                    } else {
                        g.group.mul(phi[&e.u], g.gain(p, e.u)) == phi[&e.v]
                    }
                }
            }
        });
        Ok(Balance {
            balanced,
            anchored_gains: balanced.then_some(phi),
        })
    }

    /// `X` is independent iff each component of `G[X]` is a tree or has exactly
    /// one cycle and that cycle is unbalanced.
    pub fn is_independent(&self, x: Subset) -> bool {
        let graph = self.graph();
        graph.components(x).into_iter().all(|c| match graph.nu(c) {
            n if n < 0 => true,
            0 => !self.balance(c).expect("component is connected").balanced,
            _ => false,
        })
    }

    fn is_balanced_loop(&self, pos: usize) -> bool {
        match self {
            FrameGraph::Bicircular(b) => b.balanced.contains(pos),
            FrameGraph::Gain(g) => g.labels[g.graph.edge_index(pos)] == g.group.identity(),
        }
    }
}

pub struct FrameOracle {
    frame: FrameGraph,
}

impl FrameOracle {
    pub fn frame(&self) -> &FrameGraph {
        &self.frame
    }
}

impl Matroid for FrameOracle {
    fn ground(&self) -> &GroundSet {
        self.frame.graph().ground()
    }

    fn is_independent(&self, x: Subset) -> bool {
        self.frame.is_independent(x)
    }
}

pub fn frame_oracle(frame: FrameGraph) -> FrameOracle {
    FrameOracle { frame }
}

pub fn bicircular_oracle(g: &Multigraph, balanced_loops: &[u32]) -> Result<FrameOracle> {
    let b = BicircularGraph::new(g.clone(), balanced_loops.to_vec())?;
    Ok(frame_oracle(FrameGraph::Bicircular(b)))
}

pub fn gain_oracle(g: &GainGraph) -> FrameOracle {
    frame_oracle(FrameGraph::Gain(g.clone()))
}

/// Balance of the connected edge set `d` (edge ids) with anchored gains.
pub fn balance_and_gain(g: &FrameGraph, d: &[u32]) -> Result<Balance> {
    let s = g.graph().ground().subset_of_ids(d.iter().copied())?;
    g.balance(s)
}

/// Multiplies every gain leaving `u` on the left by `alpha`. Loops are unchanged.
pub fn switch(g: &GainGraph, u: u32, alpha: Elem) -> Result<GainGraph> {
    if !g.graph.has_vertex(u) {
        return Err(Error::domain(format!("{u} is not a vertex")));
    }
    g.group.check(alpha)?;
    let h = &g.group;
    let labels = g
        .graph
        .edges()
        .iter()
        .zip(&g.labels)
        .map(|(e, &s)| {
            if e.is_loop() {
                s
            } else if e.u == u {
                h.mul(alpha, s)
            } else if e.v == u {
                h.mul(s, h.inv(alpha))
            } else {
                s
            }
        })
        .collect();
    Ok(GainGraph {
        graph: g.graph.clone(),
        group: g.group.clone(),
        labels,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorKind {
    Delete,
    Contract,
}

/// Rebuilds a frame graph from edges and per-edge data, keeping vertex ids.
fn rebuild(frame: &FrameGraph, vertices: Vec<u32>, edges: Vec<(Edge, EdgeData)>) -> FrameGraph {
    let graph = Multigraph::new(vertices, edges.iter().map(|(e, _)| *e).collect())
        .expect("minor of a valid graph");
    match frame {
        FrameGraph::Bicircular(_) => {
            let balanced = edges
                .iter()
                .filter(|(_, d)| matches!(d, EdgeData::Balanced(true)))
                .map(|(e, _)| e.id)
                .collect();
            FrameGraph::Bicircular(BicircularGraph::new(graph, balanced).expect("loops only"))
        }
        FrameGraph::Gain(g) => {
            let labels = edges
                .iter()
                .map(|(_, d)| match d {
                    EdgeData::Gain(s) => *s,
                    EdgeData::Balanced(_) => unreachable!(),
                })
                .collect();
            FrameGraph::Gain(GainGraph {
                graph,
                group: g.group.clone(),
                labels,
            })
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum EdgeData {
    /// Bicircular: whether the edge is a balanced loop.
    Balanced(bool),
    Gain(Elem),
}

/// Deletes or contracts the edge `id`, returning a frame graph whose matroid is
/// the corresponding single-element minor.
pub fn frame_minor(frame: &FrameGraph, id: u32, kind: MinorKind) -> Result<FrameGraph> {
    let graph = frame.graph();
    let pos = graph.ground().position(id).ok_or(Error::NotInGround(id))?;
    let target = *graph.edge_at(pos);

    // Work on a switched copy so that a contracted non-loop carries the identity.
    let frame = match (frame, kind) {
        (FrameGraph::Gain(g), MinorKind::Contract) if !target.is_loop() => {
            let s = g.labels[graph.edge_index(pos)];
            FrameGraph::Gain(switch(g, target.u, g.group.inv(s))?)
        }
        _ => frame.clone(),
    };
    let graph = frame.graph();
    let data = |i: usize| -> EdgeData {
        let p = graph.ground().position(graph.edges()[i].id).unwrap();
        match &frame {
            FrameGraph::Bicircular(b) => EdgeData::Balanced(b.balanced.contains(p)),
            FrameGraph::Gain(g) => EdgeData::Gain(g.labels[i]),
        }
    };
    let others = graph
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.id != id)
        .map(|(i, e)| (*e, data(i)));

    let contract_as_delete =
        kind == MinorKind::Delete || (target.is_loop() && frame.is_balanced_loop(pos));
    if contract_as_delete {
        return Ok(rebuild(&frame, graph.vertices().to_vec(), others.collect()));
    }

    if target.is_loop() {
        // Unbalanced loop at u: u stays only to host the loops that become balanced.
        let u = target.u;
        let unbalanced = match &frame {
            FrameGraph::Bicircular(_) => EdgeData::Balanced(false),
            FrameGraph::Gain(g) => match g.group.least_non_identity() {
                Some(a) => EdgeData::Gain(a),
                None => return Err(Error::domain("unbalanced loop over the trivial group")),
            },
        };
        let balanced = match &frame {
            FrameGraph::Bicircular(_) => EdgeData::Balanced(true),
            FrameGraph::Gain(g) => EdgeData::Gain(g.group.identity()),
        };
        let edges = others
            .map(|(e, d)| {
                if e.is_loop() && e.u == u {
                    (e, balanced)
                } else if e.u == u || e.v == u {
                    let w = e.other(u);
                    (
                        Edge {
                            id: e.id,
                            u: w,
                            v: w,
                        },
                        unbalanced,
                    )
                } else {
                    (e, d)
                }
            })
            .collect();
        return Ok(rebuild(&frame, graph.vertices().to_vec(), edges));
    }

    // Non-loop: identify target.u into target.v.
    let (a, b) = (target.u, target.v);
    let relabel = |w: u32| if w == a { b } else { w };
    let edges = others
        .map(|(e, d)| {
            (
                Edge {
                    id: e.id,
                    u: relabel(e.u),
                    v: relabel(e.v),
                },
                d,
            )
        })
        .collect();
    let vertices = graph
        .vertices()
        .iter()
        .copied()
        .filter(|&w| w != a)
        .collect();
    Ok(rebuild(&frame, vertices, edges))
}

pub fn gain_minor(g: &GainGraph, id: u32, kind: MinorKind) -> Result<GainGraph> {
    match frame_minor(&FrameGraph::Gain(g.clone()), id, kind)? {
        FrameGraph::Gain(h) => Ok(h),
        FrameGraph::Bicircular(_) => unreachable!(),
    }
}

pub fn bicircular_minor(g: &BicircularGraph, id: u32, kind: MinorKind) -> Result<BicircularGraph> {
    match frame_minor(&FrameGraph::Bicircular(g.clone()), id, kind)? {
        FrameGraph::Bicircular(h) => Ok(h),
        FrameGraph::Gain(_) => unreachable!(),
    }
}

/// Vertices incident with edges of both `u` (edge ids) and its complement.
pub fn frame_boundary(g: &Multigraph, u: &[u32]) -> Result<Vec<u32>> {
    let s = g.ground().subset_of_ids(u.iter().copied())?;
    Ok(g.boundary(s).into_iter().collect())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::matroid::{minor, same_matroid, MinorSpec, SharedMatroid};

    fn tri(labels: [i64; 3], group: Group) -> GainGraph {
        let g = Multigraph::with_vertex_count(3, &[(1, 1, 2), (2, 2, 3), (3, 3, 1)]).unwrap();
        GainGraph::new(g, group, labels.map(Elem).to_vec()).unwrap()
    }

    #[test]
    fn bicircular_examples() {
        let t = Multigraph::with_vertex_count(3, &[(1, 1, 2), (2, 2, 3), (3, 3, 1)]).unwrap();
        let m = bicircular_oracle(&t, &[]).unwrap();
        assert!(m.is_independent(t.ground().full()));
        let par = Multigraph::with_vertex_count(2, &[(1, 1, 2), (2, 1, 2), (3, 1, 2)]).unwrap();
        let m = bicircular_oracle(&par, &[]).unwrap();
        assert!(!m.is_independent(par.ground().full()));
        assert!(m.is_independent(Subset(0b011)));
        let lp = Multigraph::with_vertex_count(1, &[(1, 1, 1)]).unwrap();
        assert!(!bicircular_oracle(&lp, &[1])
            .unwrap()
            .is_independent(Subset(1)));
        assert!(bicircular_oracle(&lp, &[])
            .unwrap()
            .is_independent(Subset(1)));
        assert!(bicircular_oracle(&t, &[1]).is_err());
    }

    #[test]
    fn gain_triangle_balance() {
        let z3 = Group::cyclic(3).unwrap();
        let bal = gain_oracle(&tri([0, 0, 0], z3.clone()));
        assert!(!bal.is_independent(Subset(0b111)));
        assert!(bal.is_independent(Subset(0b011)));
        let unbal = gain_oracle(&tri([1, 0, 0], z3.clone()));
        assert!(unbal.is_independent(Subset(0b111)));
        // 1 + 1 + 1 = 0 in Z3: balanced.
        assert!(!gain_oracle(&tri([1, 1, 1], z3)).is_independent(Subset(0b111)));
    }

    #[test]
    fn anchored_gains_compose_along_paths() {
        let s3 = Group::symmetric3();
        let g = Multigraph::with_vertex_count(3, &[(1, 1, 2), (2, 2, 3)]).unwrap();
        let gg = GainGraph::new(g, s3.clone(), vec![Elem(1), Elem(3)]).unwrap();
        let frame = FrameGraph::Gain(gg);
        let b = balance_and_gain(&frame, &[1, 2]).unwrap();
        assert!(b.balanced);
        let gains = b.anchored_gains.unwrap();
        assert_eq!(gains[&1], s3.identity());
        assert_eq!(gains[&2], Elem(1));
        assert_eq!(gains[&3], s3.mul(Elem(1), Elem(3)));
        assert!(balance_and_gain(&frame, &[1]).unwrap().balanced);

        let lp = Multigraph::with_vertex_count(1, &[(1, 1, 1)]).unwrap();
        let lg = FrameGraph::Gain(GainGraph::new(lp, s3, vec![Elem(2)]).unwrap());
        let b = balance_and_gain(&lg, &[1]).unwrap();
        assert!(!b.balanced && b.anchored_gains.is_none());

        let two = Multigraph::with_vertex_count(4, &[(1, 1, 2), (2, 3, 4)]).unwrap();
        let f = FrameGraph::Bicircular(BicircularGraph::new(two, vec![]).unwrap());
        assert!(balance_and_gain(&f, &[1, 2]).is_err());
    }

    #[test]
    fn switching_preserves_the_matroid() {
        let s3 = Group::symmetric3();
        let g = tri([1, 3, 4], s3.clone());
        let m = gain_oracle(&g);
        for v in 1..=3 {
            for a in s3.elements().unwrap() {
                let h = switch(&g, v, a).unwrap();
                assert!(same_matroid(&m, &gain_oracle(&h)));
                let back = switch(&h, v, s3.inv(a)).unwrap();
                assert_eq!(back, g);
            }
        }
        assert_eq!(switch(&g, 2, s3.identity()).unwrap(), g);
    }

    #[test]
    fn single_minors_match_the_oracle_minor() {
        let z3 = Group::cyclic(3).unwrap();
        let g = Multigraph::with_vertex_count(
            3,
            &[
                (1, 1, 2),
                (2, 1, 2),
                (3, 2, 3),
                (4, 3, 3),
                (5, 1, 1),
                (6, 1, 3),
            ],
        )
        .unwrap();
        let gg = GainGraph::new(g.clone(), z3, [1, 2, 0, 1, 0, 2].map(Elem).to_vec()).unwrap();
        let bg = BicircularGraph::new(g, vec![5]).unwrap();
        for frame in [FrameGraph::Gain(gg), FrameGraph::Bicircular(bg)] {
            let m: SharedMatroid = Arc::new(frame_oracle(frame.clone()));
            for id in 1..=6 {
                for kind in [MinorKind::Delete, MinorKind::Contract] {
                    let spec = match kind {
                        MinorKind::Delete => MinorSpec::delete([id]),
                        MinorKind::Contract => MinorSpec::contract([id]),
                    };
                    let expect = minor(m.clone(), &spec).unwrap();
                    let got = frame_oracle(frame_minor(&frame, id, kind).unwrap());
                    assert!(same_matroid(&expect, &got), "edge {id} {kind:?}");
                }
            }
        }
    }
}
