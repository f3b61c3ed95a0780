use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset};

/// A lattice point: `x` east steps and `y` north steps from the origin.
pub type Point = (u32, u32);

/// Two monotone lattice paths `P` (lower) and `Q` (upper) from `(0,0)` to `(m,r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePathPresentation {
    p: String,
    q: String,
    /// `lower[t]` and `upper[t]`: north steps among the first `t` steps of P and Q.
    lower: Vec<u32>,
    upper: Vec<u32>,
}

fn north_prefix(path: &str) -> Result<Vec<u32>> {
    let mut out = vec![0];
    for c in path.chars() {
        let last = *out.last().unwrap();
        match c {
            'N' => out.push(last + 1),
            'E' => out.push(last),
            _ => return Err(Error::domain(format!("step {c:?} is neither N nor E"))),
        }
    }
    Ok(out)
}

impl LatticePathPresentation {
    pub fn new(p: &str, q: &str) -> Result<Self> {
        let lower = north_prefix(p)?;
        let upper = north_prefix(q)?;
        if lower.len() != upper.len() || lower.last() != upper.last() {
            return Err(Error::domain(
                "P and Q must have the same numbers of N and E steps",
            ));
        }
        if lower.iter().zip(&upper).any(|(a, b)| a > b) {
            return Err(Error::domain("P goes above Q"));
        }
        Ok(LatticePathPresentation {
            p: p.to_string(),
            q: q.to_string(),
            lower,
            upper,
        })
    }

    pub fn p(&self) -> &str {
        &self.p
    }

    pub fn q(&self) -> &str {
        &self.q
    }

    /// Total number of steps, `m + r`.
    pub fn len(&self) -> usize {
        self.lower.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of north steps.
    pub fn r(&self) -> u32 {
        *self.lower.last().unwrap()
    }

    /// Number of east steps.
    pub fn m(&self) -> u32 {
        self.len() as u32 - self.r()
    }

    /// North steps among the first `t` steps of P.
    pub fn lower_height(&self, t: usize) -> u32 {
        self.lower[t]
    }

    pub fn upper_height(&self, t: usize) -> u32 {
        self.upper[t]
    }

    /// Whether the point lies on some intermediate path.
    pub fn in_region(&self, (x, y): Point) -> bool {
        let t = (x + y) as usize;
        t <= self.len() && self.lower[t] <= y && y <= self.upper[t]
    }

    /// Region points with `x + y = t`, from the top-left.
    pub fn diagonal(&self, t: usize) -> Vec<Point> {
        let t32 = t as u32;
        (self.lower[t]..=self.upper[t])
            .rev()
            .map(|y| (t32 - y, y))
            .collect()
    }

    /// Heights of the lowest path through the N steps of `y` (positions
    /// `0..len`, element `i + 1` at position `i`), or `None` once it must leave
    /// the region.
    pub fn greedy_heights(&self, y: Subset) -> Option<Vec<u32>> {
        let mut h = vec![0u32];
        for t in 1..=self.len() {
            let step = u32::from(y.contains(t - 1));
            let next = (h[t - 1] + step).max(self.lower[t]);
            if next > self.upper[t] {
                return None;
            }
            h.push(next);
        }
        Some(h)
    }

    /// Every intermediate path as a string over `{N, E}`.
    pub fn intermediate_paths(&self) -> Vec<String> {
        fn go(l: &LatticePathPresentation, cur: &mut String, y: u32, out: &mut Vec<String>) {
            let t = cur.len();
            if t == l.len() {
                out.push(cur.clone());
                return;
            }
            for (c, ny) in [('E', y), ('N', y + 1)] {
                if l.lower[t + 1] <= ny && ny <= l.upper[t + 1] {
                    cur.push(c);
                    go(l, cur, ny, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut String::new(), 0, &mut out);
        out
    }

    /// Staircase `k` (`1 ≤ k ≤ m + r`): the region edges from diagonal `k - 1`
    /// to diagonal `k`, with all incident vertices ordered from the top-left.
    pub fn staircase(&self, k: usize) -> Staircase {
        let mut edges = Vec::new();
        for (x, y) in self.diagonal(k - 1) {
            for to in [(x + 1, y), (x, y + 1)] {
                if self.in_region(to) {
                    edges.push(((x, y), to));
                }
            }
        }
        let mut vertices: Vec<Point> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        vertices.sort_by_key(|&(x, y)| x as i64 - y as i64);
        vertices.dedup();
        Staircase { k, edges, vertices }
    }

    pub fn staircases(&self) -> Vec<Staircase> {
        (1..=self.len()).map(|k| self.staircase(k)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    pub k: usize,
    pub edges: Vec<(Point, Point)>,
    /// Incident vertices, ordered from the top-left corner.
    pub vertices: Vec<Point>,
}

impl Staircase {
    /// Index of a vertex in [`Staircase::vertices`].
    pub fn position(&self, pt: Point) -> Option<usize> {
        self.vertices.iter().position(|&v| v == pt)
    }

    /// Vertices on the far diagonal `x + y = k`.
    pub fn upper_level(&self) -> Vec<Point> {
        self.vertices
            .iter()
            .copied()
            .filter(|&(x, y)| (x + y) as usize == self.k)
            .collect()
    }
}

pub struct LatticePathOracle {
    presentation: LatticePathPresentation,
    ground: GroundSet,
}

impl LatticePathOracle {
    pub fn presentation(&self) -> &LatticePathPresentation {
        &self.presentation
    }
}

impl Matroid for LatticePathOracle {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// `Y` is independent iff the lowest path taking a north step at every
    /// element of `Y` stays below `Q`.
    fn is_independent(&self, y: Subset) -> bool {
        y.len() <= self.presentation.r() as usize && self.presentation.greedy_heights(y).is_some()
    }
}

pub fn lattice_path_oracle(l: &LatticePathPresentation) -> Result<LatticePathOracle> {
    Ok(LatticePathOracle {
        presentation: l.clone(),
        ground: GroundSet::one_based(l.len())?,
    })
}
