use std::collections::{BTreeMap, BTreeSet};

use super::engine::{SigmaTree, State, Symbol, TreeAutomaton, TreeNode};
use crate::decomp::{branch_width, WIDTH_LIMIT};
use crate::error::{Error, Result};
use crate::zoo::{lattice_path_oracle, LatticePathPresentation, Point};

/// Whether every staircase has at most `3λ - 1` vertices.
pub fn staircase_bound_check(l: &LatticePathPresentation, lambda: usize) -> bool {
    let cap = (3 * lambda).saturating_sub(1);
    l.staircases().iter().all(|s| s.vertices.len() <= cap)
}

/// A caterpillar-shaped parse tree for a lattice path matroid together with
/// an automaton accepting exactly the encodings of its independent sets.
#[derive(Clone, Debug)]
pub struct LatticeParse {
    pub tree: SigmaTree,
    /// `phi[p]` is the leaf of element `p + 1`.
    pub phi: Vec<usize>,
    pub automaton: TreeAutomaton,
    pub lambda: usize,
}

const LEAF: &str = "id";

/// A step character as `((left state, right state), image)` entries.
type Table = Vec<((State, State), State)>;

/// Builds the parse. Leaves `0..n` carry the elements in order; internal node
/// `n` joins leaves 0 and 1, and each later internal node joins the previous
/// one with the next leaf. The state after reading elements `1..=k` is the
/// index, within staircase `k`, of the lowest path's vertex on diagonal `k`.
///
/// Without an explicit `lambda`, branch-width is used when the ground set is
/// small enough, and otherwise the least value meeting the staircase bound.
pub fn lattice_parse(l: &LatticePathPresentation, lambda: Option<usize>) -> Result<LatticeParse> {
    let n = l.len();
    if n == 0 {
        return Err(Error::domain("lattice path matroid on an empty ground set"));
    }
    let stairs = l.staircases();
    let widest = stairs.iter().map(|s| s.vertices.len()).max().unwrap_or(0);
    let lambda = match lambda {
        Some(k) => k,
        None if n <= WIDTH_LIMIT => branch_width(&lattice_path_oracle(l)?)?,
        None => (widest + 1).div_ceil(3).max(1),
    };
    if !staircase_bound_check(l, lambda) {
        return Err(Error::domain(format!(
            "a staircase has {widest} vertices, more than 3*{lambda}-1"
        )));
    }
    let positions = 3 * lambda - 1;
    let dep = positions;
    let bit = |b: bool| positions + 1 + usize::from(b);

    let mut a = TreeAutomaton {
        states: (1..=positions)
            .map(|i| i.to_string())
            .chain(["dep".into(), "bit0".into(), "bit1".into()])
            .collect(),
        accepting: (0..positions).collect(),
        ..Default::default()
    };

    // Destination of one step from `from` onto diagonal `k`, as a state.
    let step = |k: usize, (x, y): Point, b: bool| -> State {
        let to = if !b && l.in_region((x + 1, y)) {
            (x + 1, y)
        } else {
            (x, y + 1)
        };
        if l.in_region(to) {
            stairs[k - 1]
                .position(to)
                .expect("step lands in its staircase")
        } else {
            dep
        }
    };

    // Transition tables, deduplicated so equal tables share a character.
    let mut names: BTreeMap<Table, String> = BTreeMap::new();
    let mut chars = Vec::with_capacity(n.saturating_sub(1));
    let mut intern = |table: Table| {
        let next = format!("f{}", names.len() + 1);
        names.entry(table).or_insert(next).clone()
    };

    let leaf_char = if n == 1 {
        let table = [false, true].map(|b| ((bit(b), bit(b)), step(1, (0, 0), b)));
        let c = intern(table.to_vec());
        for (b, q) in [false, true].into_iter().zip(table.map(|t| t.1)) {
            a.delta0
                .insert(Symbol::tagged(c.clone(), b), BTreeSet::from([q]));
        }
        c
    } else {
        for b in [false, true] {
            a.delta0
                .insert(Symbol::tagged(LEAF, b), BTreeSet::from([bit(b)]));
        }
        LEAF.to_string()
    };
    a.alphabet.insert(Symbol::plain(leaf_char.clone()));
    for b in [false, true] {
        a.alphabet.insert(Symbol::tagged(leaf_char.clone(), b));
    }

    for k in 2..=n {
        let mut table = Vec::new();
        if k == 2 {
            for b1 in [false, true] {
                for b2 in [false, true] {
                    let mid = step(1, (0, 0), b1);
                    let q = if mid == dep {
                        dep
                    } else {
                        step(2, stairs[0].vertices[mid], b2)
                    };
                    table.push(((bit(b1), bit(b2)), q));
                }
            }
        } else {
            let prev = &stairs[k - 2];
            for (j, &pt) in prev.vertices.iter().enumerate() {
                if (pt.0 + pt.1) as usize != k - 1 {
                    continue;
                }
                for b in [false, true] {
                    table.push(((j, bit(b)), step(k, pt, b)));
                }
            }
            for b in [false, true] {
                table.push(((dep, bit(b)), dep));
            }
        }
        chars.push(intern(table.clone()));
        let c = Symbol::plain(chars.last().unwrap().clone());
        a.alphabet.insert(c.clone());
        for ((p, q), img) in table {
            a.delta2.insert((c.clone(), p, q), BTreeSet::from([img]));
        }
    }

    let mut nodes: Vec<TreeNode> = (0..n)
        .map(|_| TreeNode {
            label: Symbol::plain(leaf_char.clone()),
            children: None,
        })
        .collect();
    for (i, c) in chars.iter().enumerate() {
        let left = if i == 0 { 0 } else { n + i - 1 };
        nodes.push(TreeNode {
            label: Symbol::plain(c.clone()),
            children: Some((left, i + 1)),
        });
    }
    let root = nodes.len() - 1;
    let tree = SigmaTree::new(nodes, root)?;
    a.validate()?;
    Ok(LatticeParse {
        tree,
        phi: (0..n).collect(),
        automaton: a,
        lambda,
    })
}
