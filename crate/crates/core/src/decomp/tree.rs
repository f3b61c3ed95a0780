use crate::error::{Error, Result};
use crate::set::Subset;

/// Largest ground set for which all decompositions are enumerated.
pub const ENUMERATION_LIMIT: usize = 10;

/// An unrooted tree with all degrees 1 or 3, whose leaves are labelled by the
/// ground positions `0..n`. Leaf `i` is node `i`; internal nodes follow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Decomposition {
    /// Builds and validates a decomposition over `n` elements; nodes `0..n` are the leaves.
    pub fn new(n: usize, node_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let d = Decomposition::unchecked(n, node_count, edges);
        d.validate()?;
        Ok(d)
    }

    fn unchecked(n: usize, node_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); node_count];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        Decomposition { n, edges, adj }
    }

    fn validate(&self) -> Result<()> {
        let nodes = self.adj.len();
        if nodes < self.n {
            return Err(Error::domain("fewer nodes than leaves"));
        }
        if nodes > 0 && self.edges.len() != nodes - 1 {
            return Err(Error::domain("a tree on k nodes has k - 1 edges"));
        }
        if self
            .edges
            .iter()
            .any(|&(a, b)| a >= nodes || b >= nodes || a == b)
        {
            return Err(Error::domain("edge endpoint out of range"));
        }
        for (v, nb) in self.adj.iter().enumerate() {
            let ok = if v < self.n {
                nb.len() == 1 || (nodes == 1 && nb.is_empty())
            } else {
                nb.len() == 3
            };
            if !ok {
                return Err(Error::domain(format!("node {v} has degree {}", nb.len())));
            }
        }
        if nodes > 0 && self.side(0, usize::MAX).len() != nodes {
            return Err(Error::domain("tree is disconnected"));
        }
        Ok(())
    }

    /// Nodes reachable from `start` without passing through `blocked`.
    fn side(&self, start: usize, blocked: usize) -> Vec<usize> {
        let mut seen = vec![false; self.adj.len()];
        seen[start] = true;
        if blocked < seen.len() {
            seen[blocked] = true;
        }
        let mut stack = vec![start];
        let mut out = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    out.push(w);
                    stack.push(w);
                }
            }
        }
        out
    }

    pub fn leaf_count(&self) -> usize {
        self.n
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The partition `(U, V)` displayed by edge `e = (u, v)`: `U` holds the
    /// elements on the `u` side.
    pub fn displayed_sets(&self, e: usize) -> Result<(Subset, Subset)> {
        let &(u, v) = self
            .edges
            .get(e)
            .ok_or_else(|| Error::domain(format!("no tree edge {e}")))?;
        let side = Subset::from_positions(self.side(u, v).into_iter().filter(|&x| x < self.n));
        Ok((side, Subset::full(self.n).difference(side)))
    }

    /// Both sides of every edge, in edge order.
    /// The tree grown from the three-leaf star where leaf `k` (from 3) subdivides
    /// edge `choices[k - 3]`, which must be below `2k - 3`.
    pub fn grown(n: usize, choices: &[usize]) -> Result<Decomposition> {
        if choices.len() != n.saturating_sub(3)
            || choices
                .iter()
                .enumerate()
                .any(|(i, &c)| c >= 2 * (i + 3) - 3)
        {
            return Err(Error::domain("invalid growth choices"));
        }
        Ok(grow(n, choices))
    }

    pub fn all_displayed(&self) -> Vec<(Subset, Subset)> {
        (0..self.edges.len())
            .map(|e| self.displayed_sets(e).unwrap())
            .collect()
    }
}

/// Every leaf-labelled subcubic tree on `n` leaves, each exactly once.
///
/// Trees are grown from the three-leaf star by attaching leaf `k` to the
/// subdivision of one of the `2k - 3` existing edges; the choices run as an
/// odometer with the last leaf varying fastest.
pub fn enumerate_decompositions(n: usize) -> Result<Decompositions> {
    Error::guard("decomposition enumeration", n, ENUMERATION_LIMIT)?;
    Ok(Decompositions {
        n,
        choices: vec![0; n.saturating_sub(3)],
        done: false,
    })
}

pub struct Decompositions {
    n: usize,
    choices: Vec<usize>,
    done: bool,
}

impl Decompositions {
    fn build(&self) -> Decomposition {
        grow(self.n, &self.choices)
    }
}

fn grow(n: usize, choices: &[usize]) -> Decomposition {
    match n {
        0 => return Decomposition::unchecked(0, 0, vec![]),
        1 => return Decomposition::unchecked(1, 1, vec![]),
        2 => return Decomposition::unchecked(2, 2, vec![(0, 1)]),
        _ => {}
    }
    let mut edges = vec![(0, n), (1, n), (2, n)];
    let mut next = n + 1;
    for (k, &c) in (3..n).zip(choices) {
        let (a, b) = edges[c];
        edges[c] = (a, next);
        edges.push((next, b));
        edges.push((k, next));
        next += 1;
    }
    Decomposition::unchecked(n, next, edges)
}

impl Iterator for Decompositions {
    type Item = Decomposition;

    fn next(&mut self) -> Option<Decomposition> {
        if self.done {
            return None;
        }
        let out = self.build();
        // Leaf k = i + 3 chooses among 2k - 3 edges.
        let mut i = self.choices.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.choices[i] += 1;
            if self.choices[i] < 2 * (i + 3) - 3 {
                break;
            }
            self.choices[i] = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn double_factorial(k: i64) -> usize {
        if k <= 1 {
            1
        } else {
            k as usize * double_factorial(k - 2)
        }
    }

    #[test]
    fn counts_match_double_factorial() {
        assert_eq!(enumerate_decompositions(2).unwrap().count(), 1);
        assert_eq!(enumerate_decompositions(3).unwrap().count(), 1);
        for n in 3..=8 {
            let trees: Vec<_> = enumerate_decompositions(n).unwrap().collect();
            assert_eq!(trees.len(), double_factorial(2 * n as i64 - 5));
            for t in &trees {
                t.validate().unwrap();
            }
            // Distinct trees display distinct split systems.
            let splits: HashSet<Vec<u64>> = trees
                .iter()
                .map(|t| {
                    let mut s: Vec<u64> = t
                        .all_displayed()
                        .into_iter()
                        .map(|(u, v)| u.0.min(v.0))
                        .collect();
                    s.sort_unstable();
                    s
                })
                .collect();
            assert_eq!(splits.len(), trees.len());
        }
        assert!(enumerate_decompositions(11).is_err());
    }

    #[test]
    fn displayed_sets_of_two_cherries() {
        // Leaves 0,1 on node 4; leaves 2,3 on node 5; middle edge 4-5.
        let d = Decomposition::new(4, 6, vec![(0, 4), (1, 4), (2, 5), (3, 5), (4, 5)]).unwrap();
        assert_eq!(
            d.displayed_sets(4).unwrap(),
            (Subset(0b0011), Subset(0b1100))
        );
        assert_eq!(
            d.displayed_sets(0).unwrap(),
            (Subset(0b0001), Subset(0b1110))
        );
        assert!(d.displayed_sets(5).is_err());
        let union = (0..4).fold(Subset::EMPTY, |acc, e| {
            acc.union(d.displayed_sets(e).unwrap().0)
        });
        assert_eq!(union, Subset::full(4));
        assert!(Decomposition::new(4, 5, vec![(0, 4), (1, 4), (2, 4), (3, 4)]).is_err());
    }
}
