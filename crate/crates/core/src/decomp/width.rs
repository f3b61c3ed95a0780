use rayon::prelude::*;

use crate::decomp::classes::{classes_with, SIM_LIMIT};
use crate::decomp::tree::{Decomposition, ENUMERATION_LIMIT};
use crate::error::{Error, Result};
use crate::matroid::{connectivity, IndependenceTable, Matroid};
use crate::set::Subset;

/// Largest ground set for exact branch-width and decomposition-width.
pub const WIDTH_LIMIT: usize = ENUMERATION_LIMIT;

fn check_tree(m: &dyn Matroid, d: &Decomposition) -> Result<()> {
    if d.leaf_count() != m.size() {
        return Err(Error::domain(format!(
            "decomposition has {} leaves for {} elements",
            d.leaf_count(),
            m.size()
        )));
    }
    Ok(())
}

/// Sides displayed by the tree. A one-element matroid is treated as a single
/// edge displaying `({x}, ∅)`.
fn displayed(m: &dyn Matroid, d: &Decomposition) -> Vec<(Subset, Subset)> {
    if m.size() == 1 {
        vec![(m.ground().full(), Subset::EMPTY)]
    } else {
        d.all_displayed()
    }
}

/// Largest `λ(U_e) + 1` over the edges of `d`.
pub fn bw_of(m: &dyn Matroid, d: &Decomposition) -> Result<usize> {
    check_tree(m, d)?;
    let mut best = 1;
    for (u, _) in displayed(m, d) {
        best = best.max(connectivity(m, u)? + 1);
    }
    Ok(best)
}

/// Largest number of boundary classes over all sets displayed by `d`.
pub fn dw_of(m: &dyn Matroid, d: &Decomposition) -> Result<usize> {
    check_tree(m, d)?;
    Error::guard("decomposition width", m.size(), SIM_LIMIT)?;
    let full = m.ground().full();
    let indep = |x: Subset| m.is_independent(x);
    let mut best = 1;
    for (u, v) in displayed(m, d) {
        best = best
            .max(classes_with(&indep, full, u).count())
            .max(classes_with(&indep, full, v).count());
    }
    Ok(best)
}

/// Minimum over decompositions of the largest edge cost, where the cost of an
/// edge displaying `(S, E - S)` is `edge_cost[S]` (indexed by bitmask).
///
/// Every decomposition is two rooted binary trees joined at an edge, so the
/// best rooted tree with leaf set `S` satisfies
/// `w(S) = max(c(S), min over splits S = A ⊔ B of max(w(A), w(B)))`.
fn min_max_width(n: usize, edge_cost: &[usize]) -> usize {
    if n <= 1 {
        return edge_cost.iter().copied().max().unwrap_or(1).max(1);
    }
    let full = (1usize << n) - 1;
    let mut w = vec![usize::MAX; 1 << n];
    for s in 1..=full {
        if s.count_ones() == 1 {
            w[s] = edge_cost[s];
            continue;
        }
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        // A ranges over the proper subsets of S containing its lowest element.
        let mut best = usize::MAX;
        let mut sub = rest;
        loop {
            let a = sub | low;
            if a != s {
                best = best.min(w[a].max(w[s ^ a]));
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        w[s] = edge_cost[s].max(best);
    }
    (1..full).map(|s| w[s].max(w[full ^ s])).min().unwrap()
}

/// Symmetrises a per-set cost into an edge cost.
fn edge_costs(n: usize, cost: impl Fn(usize) -> usize + Sync) -> Vec<usize> {
    let full = (1usize << n) - 1;
    let c: Vec<usize> = (0..=full).into_par_iter().map(&cost).collect();
    (0..=full).map(|s| c[s].max(c[full ^ s])).collect()
}

pub fn branch_width(m: &dyn Matroid) -> Result<usize> {
    let n = m.size();
    Error::guard("branch width", n, WIDTH_LIMIT)?;
    if n == 0 {
        return Ok(1);
    }
    let t = IndependenceTable::build(m)?;
    let costs = edge_costs(n, |s| t.connectivity(Subset(s as u64)) + 1);
    Ok(min_max_width(n, &costs))
}

pub fn decomposition_width(m: &dyn Matroid) -> Result<usize> {
    let n = m.size();
    Error::guard("decomposition width", n, WIDTH_LIMIT)?;
    if n == 0 {
        return Ok(1);
    }
    let t = IndependenceTable::build(m)?;
    let full = m.ground().full();
    let indep = |x: Subset| t.is_independent(x);
    let costs = edge_costs(n, |s| classes_with(&indep, full, Subset(s as u64)).count());
    Ok(min_max_width(n, &costs))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::decomp::enumerate_decompositions;
    use crate::matroid::{dual, SharedMatroid};
    use crate::zoo::{
        lattice_path_oracle, linear_oracle, m_of_graph, uniform_oracle, LatticePathPresentation,
        LinearRep, SimpleGraph,
    };

    fn by_enumeration(
        m: &dyn Matroid,
        f: fn(&dyn Matroid, &Decomposition) -> Result<usize>,
    ) -> usize {
        enumerate_decompositions(m.size())
            .unwrap()
            .map(|d| f(m, &d).unwrap())
            .min()
            .unwrap()
    }

    #[test]
    fn u24_widths() {
        let m = uniform_oracle(2, 4).unwrap();
        assert_eq!(branch_width(&m).unwrap(), 3);
        assert_eq!(decomposition_width(&m).unwrap(), 3);
        for d in enumerate_decompositions(4).unwrap() {
            assert_eq!(dw_of(&m, &d).unwrap(), 3);
        }
    }

    #[test]
    fn small_uniform_and_free() {
        assert_eq!(
            decomposition_width(&uniform_oracle(1, 2).unwrap()).unwrap(),
            2
        );
        for n in 1..=6 {
            let free = uniform_oracle(n, n).unwrap();
            assert_eq!(branch_width(&free).unwrap(), 1);
            // Every subset is independent whatever it is extended by.
            assert_eq!(decomposition_width(&free).unwrap(), 1);
        }
        // Loops: the empty set and the dependent sets are told apart by Z = ∅.
        assert_eq!(
            decomposition_width(&uniform_oracle(0, 3).unwrap()).unwrap(),
            2
        );
    }

    #[test]
    fn dp_agrees_with_enumeration() {
        let reps = [
            vec![
                vec![1, 0, 1, 1, 0, 1],
                vec![0, 1, 1, 0, 1, 1],
                vec![0, 0, 0, 1, 1, 1],
            ],
            vec![vec![1, 0, 1, 2, 1], vec![0, 1, 1, 1, 2]],
        ];
        for (p, rows) in [2, 3].into_iter().zip(reps) {
            let m = linear_oracle(&LinearRep::new(p, rows).unwrap()).unwrap();
            assert_eq!(branch_width(&m).unwrap(), by_enumeration(&m, bw_of));
            assert_eq!(decomposition_width(&m).unwrap(), by_enumeration(&m, dw_of));
        }
        let l = LatticePathPresentation::new("EENENN", "NNENEE").unwrap();
        let m = lattice_path_oracle(&l).unwrap();
        assert_eq!(branch_width(&m).unwrap(), by_enumeration(&m, bw_of));
        assert_eq!(decomposition_width(&m).unwrap(), by_enumeration(&m, dw_of));
    }

    #[test]
    fn branch_width_is_self_dual_and_bounded_for_m_k3() {
        let m: SharedMatroid = Arc::new(m_of_graph(&SimpleGraph::complete(3)).unwrap());
        let bw = branch_width(&*m).unwrap();
        assert!(bw <= 4);
        assert_eq!(bw, branch_width(&dual(m)).unwrap());
    }

    #[test]
    fn leaf_count_must_match() {
        let m = uniform_oracle(2, 4).unwrap();
        let d = enumerate_decompositions(5).unwrap().next().unwrap();
        assert!(bw_of(&m, &d).is_err());
        assert!(branch_width(&uniform_oracle(2, 11).unwrap()).is_err());
    }
}
