//! Maximum bipartite matching by augmenting paths, and König vertex covers.

/// A bipartite graph with `left` and `right` vertices indexed from zero.
#[derive(Clone, Debug, Default)]
pub struct Bipartite {
    adj: Vec<Vec<usize>>,
    right: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub left_mate: Vec<Option<usize>>,
    pub right_mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.left_mate.iter().flatten().count()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.left_mate
            .iter()
            .enumerate()
            .filter_map(|(l, r)| r.map(|r| (l, r)))
    }
}

impl Bipartite {
    pub fn new(left: usize, right: usize) -> Self {
        Bipartite {
            adj: vec![Vec::new(); left],
            right,
        }
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        debug_assert!(r < self.right);
        if !self.adj[l].contains(&r) {
            self.adj[l].push(r);
        }
    }

    pub fn left(&self) -> usize {
        self.adj.len()
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn neighbours(&self, l: usize) -> &[usize] {
        &self.adj[l]
    }

    fn augment(
        &self,
        l: usize,
        seen: &mut [bool],
        left_mate: &mut [Option<usize>],
        right_mate: &mut [Option<usize>],
        allowed_left: &dyn Fn(usize) -> bool,
    ) -> bool {
        for &r in &self.adj[l] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            let free = match right_mate[r] {
                None => true,
                Some(l2) => {
                    allowed_left(l2) && self.augment(l2, seen, left_mate, right_mate, allowed_left)
                }
            };
            if free {
                left_mate[l] = Some(r);
                right_mate[r] = Some(l);
                return true;
            }
        }
        false
    }

    /// Maximum matching using only left vertices accepted by `allowed_left`.
    pub fn max_matching_restricted(&self, allowed_left: &dyn Fn(usize) -> bool) -> Matching {
        let mut left_mate = vec![None; self.left()];
        let mut right_mate = vec![None; self.right];
        for l in 0..self.left() {
            if allowed_left(l) {
                let mut seen = vec![false; self.right];
                self.augment(l, &mut seen, &mut left_mate, &mut right_mate, allowed_left);
            }
        }
        Matching {
            left_mate,
            right_mate,
        }
    }

    pub fn max_matching(&self) -> Matching {
        self.max_matching_restricted(&|_| true)
    }

    /// The transposed graph: right vertices become left vertices.
    pub fn transpose(&self) -> Bipartite {
        let mut t = Bipartite::new(self.right, self.left());
        for (l, rs) in self.adj.iter().enumerate() {
            for &r in rs {
                t.add_edge(r, l);
            }
        }
        t
    }

    /// König cover from a maximum matching: with `Z` the vertices reachable from
    /// unmatched left vertices along alternating paths, the cover is
    /// `(L - Z) ∪ (R ∩ Z)`. Returns `(left_cover, right_cover)`.
    pub fn konig_cover(&self, m: &Matching) -> (Vec<usize>, Vec<usize>) {
        let mut left_z = vec![false; self.left()];
        let mut right_z = vec![false; self.right];
        let mut stack: Vec<usize> = (0..self.left())
            .filter(|&l| m.left_mate[l].is_none())
            .collect();
        for &l in &stack {
            left_z[l] = true;
        }
        while let Some(l) = stack.pop() {
            for &r in &self.adj[l] {
                if right_z[r] || m.left_mate[l] == Some(r) {
                    continue;
                }
                right_z[r] = true;
                if let Some(l2) = m.right_mate[r] {
                    if !left_z[l2] {
                        left_z[l2] = true;
                        stack.push(l2);
                    }
                }
            }
        }
        let left_cover = (0..self.left()).filter(|&l| !left_z[l]).collect();
        let right_cover = (0..self.right).filter(|&r| right_z[r]).collect();
        (left_cover, right_cover)
    }

    /// Whether one matching covers every listed left and right vertex.
    ///
    /// By the Mendelsohn–Dulmage theorem this holds iff some matching covers the
    /// required left vertices and some (possibly different) matching covers the
    /// required right vertices, so two restricted matchings decide it.
    pub fn has_matching_covering(&self, left_req: &[usize], right_req: &[usize]) -> bool {
        let lm = self.max_matching_restricted(&|l| left_req.contains(&l));
        if lm.size() < left_req.len() {
            return false;
        }
        let t = self.transpose();
        let rm = t.max_matching_restricted(&|r| right_req.contains(&r));
        rm.size() == right_req.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_max(g: &Bipartite) -> usize {
        fn go(g: &Bipartite, l: usize, used: &mut Vec<bool>) -> usize {
            if l == g.left() {
                return 0;
            }
            let mut best = go(g, l + 1, used);
            for &r in g.neighbours(l) {
                if !used[r] {
                    used[r] = true;
                    best = best.max(1 + go(g, l + 1, used));
                    used[r] = false;
                }
            }
            best
        }
        go(g, 0, &mut vec![false; g.right()])
    }

    fn graph_from_bits(l: usize, r: usize, bits: u32) -> Bipartite {
        let mut g = Bipartite::new(l, r);
        for i in 0..l {
            for j in 0..r {
                if bits >> (i * r + j) & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    #[test]
    fn matching_size_and_konig_cover_agree_with_brute_force() {
        for bits in 0u32..(1 << 9) {
            let g = graph_from_bits(3, 3, bits);
            let m = g.max_matching();
            assert_eq!(m.size(), brute_max(&g), "bits {bits:b}");
            let (lc, rc) = g.konig_cover(&m);
            assert_eq!(lc.len() + rc.len(), m.size());
            for l in 0..3 {
                for &r in g.neighbours(l) {
                    assert!(lc.contains(&l) || rc.contains(&r));
                }
            }
        }
    }

    #[test]
    fn covering_requirements_on_both_sides() {
        // Path l0 - r0 - l1 - r1: covering l0 and r1 needs {l0r0, l1r1}.
        let mut g = Bipartite::new(2, 2);
        g.add_edge(0, 0);
        g.add_edge(1, 0);
        g.add_edge(1, 1);
        assert!(g.has_matching_covering(&[0], &[1]));
        // Star l0 - {r0, r1}: cannot cover both right vertices.
        let mut s = Bipartite::new(1, 2);
        s.add_edge(0, 0);
        s.add_edge(0, 1);
        assert!(!s.has_matching_covering(&[], &[0, 1]));
        assert!(s.has_matching_covering(&[0], &[1]));
    }
}
