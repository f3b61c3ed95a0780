//! Line-oriented text format for instances.
//!
//! The first line names the kind and the body depends on it. For example
//!
//! ```text
//! gaingraph
//! group table 2 identity 0
//! 0 1
//! 1 0
//! vertices 2
//! edge 1 1 2 1
//! edge 2 1 2 0
//! ```
//!
//! Other bodies: `linear` has `p <prime>` and then matrix rows; `uniform` has
//! `r=<r> n=<n>`; `ftransversal` has `A: ids`, `B: ids` and `edge a b` lines;
//! `latticepath` has `P=...` and `Q=...`; `bicircular` has vertices,
//! `edge id u v` lines and `balancedloops: ids`; `gammoid` has `vertices: ids`,
//! `arc u v` lines and `targets: ids`; `sparsepaving` has `vertices n` and
//! `edge u v` lines with `u < v`.
//!
//! A gain graph may use `group integers` instead of a table. Graph vertex
//! sets are written `vertices n` when they are `1..=n` and `vertices: ids`
//! otherwise. [`write_instance`] emits exactly the form [`parse_instance`]
//! reads, so canonical files round-trip byte for byte.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::zoo::{
    BicircularGraph, BipartitePresentation, Edge, Elem, GainGraph, GammoidPresentation, Group,
    Instance, LatticePathPresentation, LinearRep, Multigraph, SimpleGraph,
};

struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    at: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        Lines { lines, at: 0 }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.at).copied()
    }

    fn last_line(&self) -> usize {
        self.lines.last().map_or(1, |l| l.0)
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let l = self
            .peek()
            .ok_or_else(|| Error::parse(self.last_line(), format!("missing {what}")))?;
        self.at += 1;
        Ok(l)
    }

    /// Consumes the next line if it starts with the word `key`.
    fn next_if(&mut self, key: &str) -> Option<(usize, &'a str)> {
        let l = self.peek()?;
        (l.1.split_whitespace().next() == Some(key)).then(|| {
            self.at += 1;
            l
        })
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            Some((ln, l)) => Err(Error::parse(ln, format!("unexpected line {l:?}"))),
            None => Ok(()),
        }
    }
}

fn num<T: FromStr>(s: &str, ln: usize) -> Result<T> {
    s.parse()
        .map_err(|_| Error::parse(ln, format!("expected a number, found {s:?}")))
}

fn nums<T: FromStr>(words: &[&str], ln: usize) -> Result<Vec<T>> {
    words.iter().map(|w| num(w, ln)).collect()
}

fn words(l: &str) -> Vec<&str> {
    l.split_whitespace().collect()
}

/// `<key>: ids` with a possibly empty list.
fn labelled_ids(l: (usize, &str), key: &str) -> Result<Vec<u32>> {
    let (ln, text) = l;
    let rest = text
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix(':'))
        .ok_or_else(|| Error::parse(ln, format!("expected `{key}: ids`")))?;
    nums(&words(rest), ln)
}

/// Attaches the line number to a domain error from a constructor.
fn at<T>(ln: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => Error::parse(ln, other.to_string()),
    })
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = Lines::new(text);
    let (hl, header) = lines.next("header")?;
    let inst = match header {
        "linear" => parse_linear(&mut lines, hl)?,
        "uniform" => {
            let (ln, l) = lines.next("`r=<r> n=<n>`")?;
            match words(l).as_slice() {
                [r, n] => match (r.strip_prefix("r="), n.strip_prefix("n=")) {
                    (Some(r), Some(n)) => {
                        let (r, n) = (num(r, ln)?, num(n, ln)?);
                        if r > n {
                            return Err(Error::parse(ln, "rank exceeds size"));
                        }
                        Instance::Uniform { r, n }
                    }
                    _ => return Err(Error::parse(ln, "expected `r=<r> n=<n>`")),
                },
                _ => return Err(Error::parse(ln, "expected `r=<r> n=<n>`")),
            }
        }
        "ftransversal" => {
            let a = labelled_ids(lines.next("A side")?, "A")?;
            let b = labelled_ids(lines.next("B side")?, "B")?;
            let mut edges = Vec::new();
            while let Some((ln, l)) = lines.next_if("edge") {
                match words(l).as_slice() {
                    [_, x, y] => edges.push((num(x, ln)?, num(y, ln)?)),
                    _ => return Err(Error::parse(ln, "expected `edge <a> <b>`")),
                }
            }
            Instance::FTransversal(at(hl, BipartitePresentation::new(a, b, edges))?)
        }
        "latticepath" => {
            let (lp, p) = lines.next("P")?;
            let p = p
                .strip_prefix("P=")
                .ok_or_else(|| Error::parse(lp, "expected `P=...`"))?;
            let (lq, q) = lines.next("Q")?;
            let q = q
                .strip_prefix("Q=")
                .ok_or_else(|| Error::parse(lq, "expected `Q=...`"))?;
            Instance::LatticePath(at(lq, LatticePathPresentation::new(p, q))?)
        }
        "bicircular" => {
            let g = parse_graph(&mut lines, false)?.0;
            let (ln, l) = lines.next("balanced loops")?;
            let loops = labelled_ids((ln, l), "balancedloops")?;
            Instance::Bicircular(at(ln, BicircularGraph::new(g, loops))?)
        }
        "gaingraph" => {
            let group = parse_group(&mut lines)?;
            let (g, labels) = parse_graph(&mut lines, true)?;
            let labels = labels.into_iter().map(Elem).collect();
            Instance::GainGraph(at(hl, GainGraph::new(g, group, labels))?)
        }
        "gammoid" => {
            let vertices = labelled_ids(lines.next("vertices")?, "vertices")?;
            let mut arcs = Vec::new();
            while let Some((ln, l)) = lines.next_if("arc") {
                match words(l).as_slice() {
                    [_, u, v] => arcs.push((num(u, ln)?, num(v, ln)?)),
                    _ => return Err(Error::parse(ln, "expected `arc <u> <v>`")),
                }
            }
            let (ln, l) = lines.next("targets")?;
            let targets = labelled_ids((ln, l), "targets")?;
            Instance::Gammoid(at(ln, GammoidPresentation::new(vertices, arcs, targets))?)
        }
        "sparsepaving" => {
            let (ln, l) = lines.next("vertices")?;
            let n = match words(l).as_slice() {
                ["vertices", n] => num(n, ln)?,
                _ => return Err(Error::parse(ln, "expected `vertices <n>`")),
            };
            let mut edges = Vec::new();
            while let Some((ln, l)) = lines.next_if("edge") {
                match words(l).as_slice() {
                    [_, u, v] => {
                        let e: (u32, u32) = (num(u, ln)?, num(v, ln)?);
                        if e.0 >= e.1 || edges.last().is_some_and(|&l| l >= e) {
                            return Err(Error::parse(ln, "edges must be sorted pairs u < v"));
                        }
                        edges.push(e);
                    }
                    _ => return Err(Error::parse(ln, "expected `edge <u> <v>`")),
                }
            }
            Instance::SparsePaving(at(ln, SimpleGraph::new(n, edges))?)
        }
        other => return Err(Error::parse(hl, format!("unknown instance kind {other:?}"))),
    };
    lines.finish()?;
    Ok(inst)
}

fn parse_linear(lines: &mut Lines, hl: usize) -> Result<Instance> {
    let (ln, l) = lines.next("`p <prime>`")?;
    let p = match words(l).as_slice() {
        ["p", p] => num(p, ln)?,
        _ => return Err(Error::parse(ln, "expected `p <prime>`")),
    };
    let mut rows = Vec::new();
    while let Some((ln, l)) = lines.peek() {
        rows.push(nums(&words(l), ln)?);
        lines.at += 1;
    }
    Ok(Instance::Linear(at(hl, LinearRep::new(p, rows))?))
}

fn parse_group(lines: &mut Lines) -> Result<Group> {
    let (ln, l) = lines.next("group")?;
    match words(l).as_slice() {
        ["group", "integers"] => Ok(Group::Integers),
        ["group", "table", n, "identity", id] => {
            let n: usize = num(n, ln)?;
            let id = num(id, ln)?;
            let mut table = Vec::with_capacity(n);
            for _ in 0..n {
                let (rl, row) = lines.next("group table row")?;
                table.push(nums(&words(row), rl)?);
            }
            at(ln, Group::from_table(id, table))
        }
        _ => Err(Error::parse(
            ln,
            "expected `group integers` or `group table <n> identity <k>`",
        )),
    }
}

/// A vertex line and `edge id u v [g]` lines.
fn parse_graph(lines: &mut Lines, labelled: bool) -> Result<(Multigraph, Vec<i64>)> {
    let (ln, l) = lines.next("vertices")?;
    let vertices: Vec<u32> = match words(l).as_slice() {
        ["vertices", n] => (1..=num::<u32>(n, ln)?).collect(),
        _ => labelled_ids((ln, l), "vertices")?,
    };
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    let mut last = ln;
    while let Some((ln, l)) = lines.next_if("edge") {
        last = ln;
        let w = words(l);
        match (w.as_slice(), labelled) {
            ([_, _, _, _], false) => {}
            ([_, _, _, _, g], true) => labels.push(num(g, ln)?),
            _ if labelled => return Err(Error::parse(ln, "expected `edge <id> <u> <v> <gain>`")),
            _ => return Err(Error::parse(ln, "expected `edge <id> <u> <v>`")),
        }
        edges.push(Edge {
            id: num(w[1], ln)?,
            u: num(w[2], ln)?,
            v: num(w[3], ln)?,
        });
    }
    Ok((at(last, Multigraph::new(vertices, edges))?, labels))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn labelled_line(key: &str, ids: &[u32]) -> String {
    if ids.is_empty() {
        format!("{key}:\n")
    } else {
        format!("{key}: {}\n", join(ids))
    }
}

fn write_vertices(out: &mut String, vertices: &[u32]) {
    let n = vertices.len() as u32;
    if vertices.iter().copied().eq(1..=n) {
        let _ = writeln!(out, "vertices {n}");
    } else {
        out.push_str(&labelled_line("vertices", vertices));
    }
}

pub fn write_instance(inst: &Instance) -> String {
    let mut s = format!("{}\n", inst.kind());
    match inst {
        Instance::Linear(rep) => {
            let _ = writeln!(s, "p {}", rep.prime());
            for row in rep.rows() {
                let _ = writeln!(s, "{}", join(row));
            }
        }
        Instance::Uniform { r, n } => {
            let _ = writeln!(s, "r={r} n={n}");
        }
        Instance::FTransversal(g) => {
            s += &labelled_line("A", g.a_ids());
            s += &labelled_line("B", g.b_ids());
            for (a, b) in g.edges() {
                let _ = writeln!(s, "edge {a} {b}");
            }
        }
        Instance::LatticePath(l) => {
            let _ = writeln!(s, "P={}\nQ={}", l.p(), l.q());
        }
        Instance::Bicircular(b) => {
            write_vertices(&mut s, b.graph().vertices());
            for e in b.graph().edges() {
                let _ = writeln!(s, "edge {} {} {}", e.id, e.u, e.v);
            }
            s += &labelled_line("balancedloops", b.balanced_loops());
        }
        Instance::GainGraph(g) => {
            match g.group() {
                Group::Integers => s += "group integers\n",
                Group::Table {
                    identity, table, ..
                } => {
                    let _ = writeln!(s, "group table {} identity {identity}", table.len());
                    for row in table {
                        let _ = writeln!(s, "{}", join(row));
                    }
                }
            }
            write_vertices(&mut s, g.graph().vertices());
            for (e, l) in g.graph().edges().iter().zip(g.labels()) {
                let _ = writeln!(s, "edge {} {} {} {l}", e.id, e.u, e.v);
            }
        }
        Instance::Gammoid(g) => {
            s += &labelled_line("vertices", g.vertices());
            for (u, v) in g.arcs() {
                let _ = writeln!(s, "arc {u} {v}");
            }
            s += &labelled_line("targets", g.targets());
        }
        Instance::SparsePaving(g) => {
            let _ = writeln!(s, "vertices {}", g.vertex_count());
            for (u, v) in g.edges() {
                let _ = writeln!(s, "edge {u} {v}");
            }
        }
    }
    s
}
