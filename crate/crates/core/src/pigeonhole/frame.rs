use crate::set::Subset;
use crate::zoo::{Elem, FrameGraph};

/// One component of `G[X]` seen through the boundary vertices it contains.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrameBlock {
    /// Boundary vertices of the component, ascending.
    pub vertices: Vec<u32>,
    pub balanced: bool,
    /// For balanced blocks: the gain of a path from the least block vertex to
    /// each block vertex, in the order of `vertices`.
    pub gains: Option<Vec<Elem>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FrameSignature {
    Dependent,
    /// Blocks ordered by least vertex.
    Independent(Vec<FrameBlock>),
}

/// Components of `G[X]` that meet the boundary `N` of `U`, each with its
/// intersection with `N`, balance, and anchored gains. Components missing `N`
/// are omitted: edges outside `U` only reach them through `N`.
pub fn frame_signature(frame: &FrameGraph, u: Subset, x: Subset) -> FrameSignature {
    let graph = frame.graph();
    if !frame.is_independent(x) {
        return FrameSignature::Dependent;
    }
    let boundary = graph.boundary(u);
    let mut blocks = Vec::new();
    for comp in graph.components(x) {
        let vertices: Vec<u32> = graph
            .incident_vertices(comp)
            .intersection(&boundary)
            .copied()
            .collect();
        if vertices.is_empty() {
            continue;
        }
        let balance = frame.balance(comp).expect("component is connected");
        let gains = balance.anchored_gains.map(|phi| {
            let group = match frame {
                FrameGraph::Gain(g) => Some(g.group()),
                FrameGraph::Bicircular(_) => None,
            };
            let anchor = phi[&vertices[0]];
            vertices
                .iter()
                .map(|v| match group {
                    Some(h) => h.mul(h.inv(anchor), phi[v]),
                    None => Elem(0),
                })
                .collect()
        });
        blocks.push(FrameBlock {
            vertices,
            balanced: balance.balanced,
            gains,
        });
    }
    FrameSignature::Independent(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::check_refines_by_key;
    use crate::zoo::{frame_oracle, BicircularGraph, GainGraph, Group, Multigraph};

    fn theta_like() -> Multigraph {
        Multigraph::with_vertex_count(
            4,
            &[
                (1, 1, 2),
                (2, 2, 3),
                (3, 3, 4),
                (4, 4, 1),
                (5, 1, 3),
                (6, 2, 4),
                (7, 2, 2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn refines_for_bicircular_and_gain_graphs() {
        let g = theta_like();
        let frames = [
            FrameGraph::Bicircular(BicircularGraph::new(g.clone(), vec![]).unwrap()),
            FrameGraph::Bicircular(BicircularGraph::new(g.clone(), vec![7]).unwrap()),
            FrameGraph::Gain(
                GainGraph::new(
                    g.clone(),
                    Group::cyclic(2).unwrap(),
                    [1, 0, 0, 1, 0, 1, 1].map(Elem).to_vec(),
                )
                .unwrap(),
            ),
            FrameGraph::Gain(
                GainGraph::new(
                    g.clone(),
                    Group::symmetric3(),
                    [1, 3, 2, 0, 4, 5, 0].map(Elem).to_vec(),
                )
                .unwrap(),
            ),
        ];
        for f in frames {
            let m = frame_oracle(f.clone());
            for u in g.ground().full().subsets() {
                let v = check_refines_by_key(&m, u, |x| frame_signature(&f, u, x)).unwrap();
                assert!(v.is_none(), "{f:?} U={u:?} {v:?}");
            }
        }
    }

    #[test]
    fn simple_cases() {
        let g = Multigraph::with_vertex_count(2, &[(1, 1, 1), (2, 1, 2)]).unwrap();
        let f = FrameGraph::Bicircular(BicircularGraph::new(g, vec![]).unwrap());
        let u = Subset(0b01);
        assert_eq!(
            frame_signature(&f, u, Subset::EMPTY),
            FrameSignature::Independent(vec![])
        );
        assert_eq!(
            frame_signature(&f, u, u),
            FrameSignature::Independent(vec![FrameBlock {
                vertices: vec![1],
                balanced: false,
                gains: None
            }])
        );
    }
}
