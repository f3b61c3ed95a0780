use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::matroid::SetSystem;
use crate::set::{GroundSet, Subset};

/// Largest ground set for which the accepted family is enumerated.
pub const FAMILY_LIMIT: usize = 16;

/// A character, or a character paired with one membership bit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Plain(String),
    Tagged(String, bool),
}

impl Symbol {
    pub fn plain(s: impl Into<String>) -> Symbol {
        Symbol::Plain(s.into())
    }

    pub fn tagged(s: impl Into<String>, bit: bool) -> Symbol {
        Symbol::Tagged(s.into(), bit)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Plain(s) => f.write_str(s),
            Symbol::Tagged(s, b) => write!(f, "{s}:{}", u8::from(*b)),
        }
    }
}

impl std::str::FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Symbol> {
        let bad = || Error::domain(format!("bad symbol {s:?}"));
        if s.is_empty() || s.contains(char::is_whitespace) {
            return Err(bad());
        }
        match s.rsplit_once(':') {
            Some((c, "0")) if !c.is_empty() => Ok(Symbol::tagged(c, false)),
            Some((c, "1")) if !c.is_empty() => Ok(Symbol::tagged(c, true)),
            Some(_) => Err(bad()),
            None => Ok(Symbol::plain(s)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub label: Symbol,
    /// `(left, right)` for internal nodes.
    pub children: Option<(usize, usize)>,
}

/// A rooted binary tree with a label on every node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaTree {
    nodes: Vec<TreeNode>,
    root: usize,
}

impl SigmaTree {
    pub fn new(nodes: Vec<TreeNode>, root: usize) -> Result<SigmaTree> {
        let t = SigmaTree { nodes, root };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let n = self.nodes.len();
        if self.root >= n {
            return Err(Error::domain("root out of range"));
        }
        let mut parent_count = vec![0usize; n];
        for node in &self.nodes {
            if let Some((l, r)) = node.children {
                if l >= n || r >= n || l == r {
                    return Err(Error::domain("bad child indices"));
                }
                parent_count[l] += 1;
                parent_count[r] += 1;
            }
        }
        for (i, &c) in parent_count.iter().enumerate() {
            let expected = usize::from(i != self.root);
            if c != expected {
                return Err(Error::domain(format!("node {i} has {c} parents")));
            }
        }
        // Every node reachable from the root, so no cycles.
        let mut seen = 0;
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            seen += 1;
            if seen > n {
                return Err(Error::domain("tree has a cycle"));
            }
            if let Some((l, r)) = self.nodes[v].children {
                stack.extend([l, r]);
            }
        }
        if seen != n {
            return Err(Error::domain("tree is disconnected"));
        }
        Ok(())
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.nodes[v].children.is_none()
    }

    /// Leaves from left to right.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            match self.nodes[v].children {
                Some((l, r)) => stack.extend([r, l]),
                None => out.push(v),
            }
        }
        out
    }

    /// Nodes with every child before its parent.
    fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((v, expanded)) = stack.pop() {
            match (self.nodes[v].children, expanded) {
                (Some((l, r)), false) => {
                    stack.push((v, true));
                    stack.push((r, false));
                    stack.push((l, false));
                }
                _ => out.push(v),
            }
        }
        out
    }

    /// One line per node: `node <i> <label>` plus `<left> <right>` when internal.
    pub fn to_text(&self) -> String {
        let mut s = format!("tree {} root {}\n", self.nodes.len(), self.root);
        for (i, n) in self.nodes.iter().enumerate() {
            match n.children {
                Some((l, r)) => s += &format!("node {i} {} {l} {r}\n", n.label),
                None => s += &format!("node {i} {}\n", n.label),
            }
        }
        s
    }

    pub fn from_text(text: &str) -> Result<SigmaTree> {
        let mut lines = text.lines().enumerate();
        let (_, head) = lines.next().ok_or_else(|| Error::parse(1, "empty tree"))?;
        let h: Vec<&str> = head.split_whitespace().collect();
        let (count, root) = match h.as_slice() {
            ["tree", n, "root", r] => (parse_num(n, 1)?, parse_num(r, 1)?),
            _ => return Err(Error::parse(1, "expected `tree <n> root <r>`")),
        };
        let mut nodes = Vec::with_capacity(count);
        for (i, line) in lines {
            let ln = i + 1;
            let w: Vec<&str> = line.split_whitespace().collect();
            let (idx, label, children) = match w.as_slice() {
                ["node", idx, label] => (idx, label, None),
                ["node", idx, label, l, r] => {
                    (idx, label, Some((parse_num(l, ln)?, parse_num(r, ln)?)))
                }
                _ => {
                    return Err(Error::parse(
                        ln,
                        "expected `node <i> <label> [<left> <right>]`",
                    ))
                }
            };
            if parse_num(idx, ln)? != nodes.len() {
                return Err(Error::parse(ln, "nodes must be listed in order"));
            }
            let label = label
                .parse()
                .map_err(|e: Error| Error::parse(ln, e.to_string()))?;
            nodes.push(TreeNode { label, children });
        }
        if nodes.len() != count {
            return Err(Error::parse(
                1,
                format!("expected {count} nodes, found {}", nodes.len()),
            ));
        }
        SigmaTree::new(nodes, root)
    }
}

fn parse_num(s: &str, line: usize) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::parse(line, format!("expected a number, found {s:?}")))
}

pub type State = usize;

/// A bottom-up tree automaton with partial transition rules.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TreeAutomaton {
    pub alphabet: BTreeSet<Symbol>,
    /// State names; a state is its index.
    pub states: Vec<String>,
    pub accepting: BTreeSet<State>,
    pub delta0: BTreeMap<Symbol, BTreeSet<State>>,
    pub delta2: BTreeMap<(Symbol, State, State), BTreeSet<State>>,
}

/// States assigned to every node by a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Run {
    pub states: Vec<BTreeSet<State>>,
    pub root: usize,
}

impl Run {
    pub fn root_states(&self) -> &BTreeSet<State> {
        &self.states[self.root]
    }
}

impl TreeAutomaton {
    /// Checks that accepting states and transition images are states and that
    /// transitions only mention alphabet symbols.
    pub fn validate(&self) -> Result<()> {
        let n = self.states.len();
        let ok = |s: &BTreeSet<State>| s.iter().all(|&q| q < n);
        if !ok(&self.accepting) {
            return Err(Error::domain("accepting state out of range"));
        }
        for (c, img) in &self.delta0 {
            if !self.alphabet.contains(c) || !ok(img) {
                return Err(Error::domain(format!("bad leaf transition on {c}")));
            }
        }
        for ((c, a, b), img) in &self.delta2 {
            if !self.alphabet.contains(c) || *a >= n || *b >= n || !ok(img) {
                return Err(Error::domain(format!("bad transition on {c}")));
            }
        }
        Ok(())
    }

    pub fn state_index(&self, name: &str) -> Option<State> {
        self.states.iter().position(|s| s == name)
    }

    pub fn to_text(&self) -> String {
        let names = |set: &BTreeSet<State>| {
            set.iter()
                .map(|&q| self.states[q].as_str())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut s = String::new();
        s += &format!(
            "alphabet {}\n",
            self.alphabet
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
        s += &format!("states {}\n", self.states.join(" "));
        s += &format!("accepting {}\n", names(&self.accepting));
        for (c, img) in &self.delta0 {
            s += &format!("delta0 {c} -> {}\n", names(img));
        }
        for ((c, a, b), img) in &self.delta2 {
            s += &format!(
                "delta2 {c} {} {} -> {}\n",
                self.states[*a],
                self.states[*b],
                names(img)
            );
        }
        s
    }

    pub fn from_text(text: &str) -> Result<TreeAutomaton> {
        let mut a = TreeAutomaton::default();
        for (i, line) in text.lines().enumerate() {
            let ln = i + 1;
            let w: Vec<&str> = line.split_whitespace().collect();
            let state = |a: &TreeAutomaton, s: &str| {
                a.state_index(s)
                    .ok_or_else(|| Error::parse(ln, format!("unknown state {s:?}")))
            };
            let symbol = |s: &str| {
                s.parse::<Symbol>()
                    .map_err(|e| Error::parse(ln, e.to_string()))
            };
            match w.split_first() {
                Some((&"alphabet", rest)) => {
                    for c in rest {
                        a.alphabet.insert(symbol(c)?);
                    }
                }
                Some((&"states", rest)) => a.states = rest.iter().map(|s| s.to_string()).collect(),
                Some((&"accepting", rest)) => {
                    for s in rest {
                        a.accepting.insert(state(&a, s)?);
                    }
                }
                Some((&"delta0", [c, "->", img @ ..])) => {
                    let img = img.iter().map(|s| state(&a, s)).collect::<Result<_>>()?;
                    a.delta0.insert(symbol(c)?, img);
                }
                Some((&"delta2", [c, p, q, "->", img @ ..])) => {
                    let key = (symbol(c)?, state(&a, p)?, state(&a, q)?);
                    let img = img.iter().map(|s| state(&a, s)).collect::<Result<_>>()?;
                    a.delta2.insert(key, img);
                }
                None => {}
                _ => return Err(Error::parse(ln, format!("unrecognised line {line:?}"))),
            }
        }
        a.validate()?;
        Ok(a)
    }
}

/// The run of `a` on `t`: leaves take their leaf transition (or nothing), and an
/// internal node takes the union of its transitions over all child-state pairs,
/// or nothing if any of those transitions is undefined.
pub fn run(a: &TreeAutomaton, t: &SigmaTree) -> Result<Run> {
    let mut states = vec![BTreeSet::new(); t.nodes.len()];
    for v in t.post_order() {
        let node = &t.nodes[v];
        if !a.alphabet.contains(&node.label) {
            return Err(Error::domain(format!(
                "label {} is not in the alphabet",
                node.label
            )));
        }
        states[v] = match node.children {
            None => a.delta0.get(&node.label).cloned().unwrap_or_default(),
            Some((l, r)) => {
                let mut out = BTreeSet::new();
                let mut defined = true;
                'pairs: for &ql in &states[l] {
                    for &qr in &states[r] {
                        match a.delta2.get(&(node.label.clone(), ql, qr)) {
                            Some(img) => out.extend(img),
                            None => {
                                defined = false;
                                break 'pairs;
                            }
                        }
                    }
                }
                if defined {
                    out
                } else {
                    BTreeSet::new()
                }
            }
        };
    }
    Ok(Run {
        states,
        root: t.root,
    })
}

pub fn accepts(a: &TreeAutomaton, t: &SigmaTree) -> Result<bool> {
    Ok(run(a, t)?
        .root_states()
        .iter()
        .any(|q| a.accepting.contains(q)))
}

/// Relabels each leaf `v` with `(σ(v), bit)`, the bit saying whether the
/// element mapped to `v` by `phi` lies in `y`. `phi[p]` is the leaf of
/// ground position `p`.
pub fn encode(t: &SigmaTree, phi: &[usize], y: Subset) -> Result<SigmaTree> {
    let leaves: BTreeSet<usize> = t.leaves().into_iter().collect();
    let image: BTreeSet<usize> = phi.iter().copied().collect();
    if image != leaves || phi.len() != leaves.len() {
        return Err(Error::domain("leaf map is not a bijection onto the leaves"));
    }
    let mut out = t.clone();
    for (p, &leaf) in phi.iter().enumerate() {
        let node = &mut out.nodes[leaf];
        node.label = match &node.label {
            Symbol::Plain(c) => Symbol::tagged(c.clone(), y.contains(p)),
            Symbol::Tagged(..) => return Err(Error::domain("leaf is already encoded")),
        };
    }
    Ok(out)
}

/// Every subset whose encoding is accepted.
pub fn accepted_family(
    a: &TreeAutomaton,
    t: &SigmaTree,
    phi: &[usize],
    ground: &GroundSet,
) -> Result<SetSystem> {
    Error::guard("accepted family", ground.len(), FAMILY_LIMIT)?;
    if phi.len() != ground.len() {
        return Err(Error::domain("leaf map does not match the ground set"));
    }
    let mut family = Vec::new();
    for y in ground.full().subsets() {
        if accepts(a, &encode(t, phi, y)?)? {
            family.push(y);
        }
    }
    SetSystem::new(ground.clone(), family)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(c: &str) -> TreeNode {
        TreeNode {
            label: Symbol::plain(c),
            children: None,
        }
    }

    /// Two states `even`/`odd` counting leaves with bit 1 modulo 2.
    fn parity() -> TreeAutomaton {
        let mut a = TreeAutomaton {
            states: vec!["even".into(), "odd".into()],
            accepting: BTreeSet::from([0]),
            ..Default::default()
        };
        for c in [
            Symbol::plain("x"),
            Symbol::tagged("x", false),
            Symbol::tagged("x", true),
        ] {
            a.alphabet.insert(c);
        }
        a.delta0
            .insert(Symbol::tagged("x", false), BTreeSet::from([0]));
        a.delta0
            .insert(Symbol::tagged("x", true), BTreeSet::from([1]));
        for p in 0..2 {
            for q in 0..2 {
                a.delta2
                    .insert((Symbol::plain("x"), p, q), BTreeSet::from([(p + q) % 2]));
            }
        }
        a
    }

    fn cherry() -> SigmaTree {
        SigmaTree::new(
            vec![
                leaf("x"),
                leaf("x"),
                TreeNode {
                    label: Symbol::plain("x"),
                    children: Some((0, 1)),
                },
            ],
            2,
        )
        .unwrap()
    }

    #[test]
    fn leaf_runs() {
        let a = parity();
        let single = SigmaTree::new(
            vec![TreeNode {
                label: Symbol::tagged("x", true),
                children: None,
            }],
            0,
        )
        .unwrap();
        assert_eq!(
            run(&a, &single).unwrap().root_states(),
            &BTreeSet::from([1])
        );
        let bare = SigmaTree::new(vec![leaf("x")], 0).unwrap();
        assert!(run(&a, &bare).unwrap().root_states().is_empty());
        assert!(!accepts(&a, &bare).unwrap());
    }

    #[test]
    fn parity_family_on_a_cherry() {
        let a = parity();
        let t = cherry();
        let g = GroundSet::one_based(2).unwrap();
        let fam = accepted_family(&a, &t, &[0, 1], &g).unwrap();
        assert_eq!(fam.members(), vec![Subset(0b00), Subset(0b11)]);
        let e = encode(&t, &[0, 1], Subset(0b10)).unwrap();
        assert_eq!(e.nodes()[1].label, Symbol::tagged("x", true));
        assert_eq!(e.nodes()[0].label, Symbol::tagged("x", false));
        assert!(encode(&t, &[0, 0], Subset::EMPTY).is_err());
    }

    #[test]
    fn undefined_transition_empties_the_union() {
        let mut a = parity();
        a.delta2.remove(&(Symbol::plain("x"), 1, 1));
        let t = cherry();
        let enc = encode(&t, &[0, 1], Subset(0b11)).unwrap();
        assert!(run(&a, &enc).unwrap().root_states().is_empty());
        // A node whose children have nondeterministic states unions the images.
        a.delta0
            .insert(Symbol::tagged("x", false), BTreeSet::from([0, 1]));
        a.delta2
            .insert((Symbol::plain("x"), 1, 1), BTreeSet::from([0]));
        let enc = encode(&t, &[0, 1], Subset(0b00)).unwrap();
        assert_eq!(
            run(&a, &enc).unwrap().root_states(),
            &BTreeSet::from([0, 1])
        );
    }

    #[test]
    fn rejects_foreign_labels_and_bad_trees() {
        let a = parity();
        let t = SigmaTree::new(vec![leaf("y")], 0).unwrap();
        assert!(run(&a, &t).is_err());
        assert!(SigmaTree::new(vec![leaf("x"), leaf("x")], 0).is_err());
    }

    #[test]
    fn text_round_trips() {
        let a = parity();
        assert_eq!(TreeAutomaton::from_text(&a.to_text()).unwrap(), a);
        let t = cherry();
        assert_eq!(SigmaTree::from_text(&t.to_text()).unwrap(), t);
    }
}
