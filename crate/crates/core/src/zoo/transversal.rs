use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matching::Bipartite;
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};

/// A bipartite graph `G` on `A ∪ B` presenting the fundamental transversal
/// matroid `M[G]` in which `B` is a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartitePresentation {
    a: Vec<u32>,
    b: Vec<u32>,
    edges: Vec<(u32, u32)>,
    ground: GroundSet,
    in_a: Subset,
    /// Neighbours (as ground positions) of each ground position.
    adj: Vec<Vec<usize>>,
}

impl BipartitePresentation {
    pub fn new(a: Vec<u32>, b: Vec<u32>, edges: Vec<(u32, u32)>) -> Result<Self> {
        let mut all = a.clone();
        all.extend(&b);
        let ground = GroundSet::new(all)
            .map_err(|_| Error::domain("A and B must be disjoint sets of distinct ids"))?;
        let in_a = ground.subset_of_ids(a.iter().copied())?;
        let mut adj = vec![Vec::new(); ground.len()];
        let mut seen = BTreeSet::new();
        for &(x, y) in &edges {
            let (px, py) = (ground.position(x), ground.position(y));
            match (px, py) {
                (Some(px), Some(py)) if in_a.contains(px) && !in_a.contains(py) => {
                    if !seen.insert((x, y)) {
                        return Err(Error::domain(format!("duplicate edge {x} {y}")));
                    }
                    adj[px].push(py);
                    adj[py].push(px);
                }
                _ => {
                    return Err(Error::domain(format!(
                        "edge {x} {y} must join a vertex of A to a vertex of B"
                    )))
                }
            }
        }
        Ok(BipartitePresentation {
            a,
            b,
            edges,
            ground,
            in_a,
            adj,
        })
    }

    pub fn a_ids(&self) -> &[u32] {
        &self.a
    }

    pub fn b_ids(&self) -> &[u32] {
        &self.b
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Ground positions of `A`.
    pub fn a_side(&self) -> Subset {
        self.in_a
    }

    pub fn b_side(&self) -> Subset {
        self.ground.full().difference(self.in_a)
    }

    pub fn neighbours(&self, pos: usize) -> &[usize] {
        &self.adj[pos]
    }

    pub fn has_edge(&self, p: usize, q: usize) -> bool {
        self.adj[p].contains(&q)
    }

    /// A bipartite graph between the positions in `left` (subset of A) and
    /// `right` (subset of B), keeping only edges accepted by `keep`.
    /// Returns the graph and the position lists for each side.
    pub fn subgraph(
        &self,
        left: Subset,
        right: Subset,
        keep: impl Fn(usize, usize) -> bool,
    ) -> (Bipartite, Vec<usize>, Vec<usize>) {
        let lpos: Vec<usize> = left.iter().collect();
        let rpos: Vec<usize> = right.iter().collect();
        let mut g = Bipartite::new(lpos.len(), rpos.len());
        for (li, &l) in lpos.iter().enumerate() {
            for &r in &self.adj[l] {
                if let Ok(ri) = rpos.binary_search(&r) {
                    if keep(l, r) {
                        g.add_edge(li, ri);
                    }
                }
            }
        }
        (g, lpos, rpos)
    }

    /// `X` is independent iff a matching joins every vertex of `X ∩ A` to `B - X`.
    pub fn is_independent(&self, x: Subset) -> bool {
        let xa = x.intersection(self.in_a);
        let free_b = self.b_side().difference(x);
        if xa.len() > free_b.len() {
            return false;
        }
        let (g, _, _) = self.subgraph(xa, free_b, |_, _| true);
        g.max_matching().size() == xa.len()
    }

    /// Conventional presentation of the same matroid: every `b` gets a private
    /// auxiliary vertex `b'`, then the labels of `b` and `b'` are swapped.
    /// Returns the set system `(A ∪ B, family of partial transversals)` whose
    /// elements are matched into the sets `{N(x)}` indexed by the original `B`.
    pub fn standard_presentation_oracle(&self) -> StandardTransversal {
        StandardTransversal {
            presentation: self.clone(),
        }
    }
}

/// The transversal matroid of the auxiliary-vertex presentation.
///
/// The sets of the set system are indexed by the vertices of `B`. Element `a ∈ A`
/// may be matched to any neighbour `b`; element `b ∈ B` may only be matched to
/// the set indexed by `b` itself (its auxiliary twin).
pub struct StandardTransversal {
    presentation: BipartitePresentation,
}

impl Matroid for StandardTransversal {
    fn ground(&self) -> &GroundSet {
        &self.presentation.ground
    }

    fn is_independent(&self, x: Subset) -> bool {
        let p = &self.presentation;
        let elems: Vec<usize> = x.iter().collect();
        let sets: Vec<usize> = p.b_side().iter().collect();
        let mut g = Bipartite::new(elems.len(), sets.len());
        for (i, &e) in elems.iter().enumerate() {
            if p.in_a.contains(e) {
                for &b in &p.adj[e] {
                    g.add_edge(i, sets.binary_search(&b).unwrap());
                }
            } else {
                g.add_edge(i, sets.binary_search(&e).unwrap());
            }
        }
        g.max_matching().size() == elems.len()
    }
}

pub struct FundamentalTransversalOracle {
    presentation: BipartitePresentation,
}

impl FundamentalTransversalOracle {
    pub fn presentation(&self) -> &BipartitePresentation {
        &self.presentation
    }
}

impl Matroid for FundamentalTransversalOracle {
    fn ground(&self) -> &GroundSet {
        &self.presentation.ground
    }

    fn is_independent(&self, x: Subset) -> bool {
        self.presentation.is_independent(x)
    }
}

pub fn fundamental_transversal_oracle(g: &BipartitePresentation) -> FundamentalTransversalOracle {
    FundamentalTransversalOracle {
        presentation: g.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{rank, same_matroid};

    #[test]
    fn single_edge() {
        let g = BipartitePresentation::new(vec![1], vec![2], vec![(1, 2)]).unwrap();
        let m = fundamental_transversal_oracle(&g);
        assert!(m.is_independent(Subset::EMPTY));
        assert!(m.is_independent(Subset(0b01)));
        assert!(!m.is_independent(Subset(0b11)));
        assert!(m.is_independent(Subset(0b10)));
    }

    #[test]
    fn b_is_a_basis() {
        let g = BipartitePresentation::new(
            vec![1, 2, 3],
            vec![4, 5],
            vec![(1, 4), (2, 4), (2, 5), (3, 5)],
        )
        .unwrap();
        let m = fundamental_transversal_oracle(&g);
        let full_rank = rank(&m, m.ground().full()).unwrap();
        assert!(m.is_independent(g.b_side()));
        assert_eq!(g.b_side().len(), full_rank);
    }

    #[test]
    fn auxiliary_presentation_is_the_same_matroid() {
        let g = BipartitePresentation::new(
            vec![1, 2, 3],
            vec![4, 5, 6],
            vec![(1, 4), (1, 5), (2, 5), (3, 4), (3, 6)],
        )
        .unwrap();
        let m = fundamental_transversal_oracle(&g);
        assert!(same_matroid(&m, &g.standard_presentation_oracle()));
    }

    #[test]
    fn rejects_edges_inside_a_side() {
        assert!(BipartitePresentation::new(vec![1, 2], vec![3], vec![(1, 2)]).is_err());
        assert!(BipartitePresentation::new(vec![1], vec![1], vec![]).is_err());
    }
}
