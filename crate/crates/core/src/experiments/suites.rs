use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use rayon::prelude::*;

use crate::automata::{accepts, encode, lattice_parse, staircase_bound_check};
use crate::decomp::{
    branch_width, check_refines_by_key, count_classes_by_key, sim_classes, Decomposition,
};
use crate::error::{Error, Result};
use crate::io::write_instance;
use crate::matroid::{
    closure, connectivity, is_n_connected, minor, same_matroid, small_circuits, verify_axioms,
    Matroid, MinorSpec, SetSystem, SharedMatroid,
};
use crate::pigeonhole::{
    frame_vertex_bound, ft_boundary_cover, ft_signature, ft_signatures_compatible, Refiner, Side,
};
use crate::set::{GroundSet, Subset};
use crate::zoo::{
    courcelle_gadget, frame_minor, frame_oracle, fundamental_transversal_oracle, gadget_loops,
    lattice_path_oracle, m_of_graph, object_construction, principal_extension, raunch_sets,
    strict_gammoid_oracle, uniform_oracle, BipartitePresentation, FrameGraph, Instance,
    LatticePathPresentation, MinorKind, SimpleGraph,
};

use super::gen::{self, Family};
use super::report::{Report, Row};
use super::rng::Lcg;

/// Instances per family in the refinement and bound suites.
pub const DEFAULT_CLASS_INSTANCES: usize = 200;
/// Lattice presentations in the parse suite.
pub const DEFAULT_PARSE_INSTANCES: usize = 24;
/// Steps of the longest generated lattice presentation in the parse suite.
pub const DEFAULT_PARSE_STEPS: usize = 14;
/// Longest presentation checked against path enumeration.
pub const PATH_ENUMERATION_STEPS: usize = 12;
/// Lattice presentations up to this length are all checked in the width suite.
pub const DEFAULT_WIDTH_STEPS: usize = 10;
/// Elements of the bipartite presentations in the compatibility suite.
pub const DEFAULT_FT_ELEMENTS: usize = 8;
/// Edge sets are enumerated for shapes with at most this many possible edges.
pub const FT_EXHAUSTIVE_EDGES: usize = 12;
/// Seeded presentations in the compatibility suite.
pub const DEFAULT_FT_SAMPLE: usize = 100;
/// Graphs of each kind (bicircular, gain) in the minor suite.
pub const DEFAULT_MINOR_INSTANCES: usize = 100;
pub const DEFAULT_MINOR_EDGES: usize = 9;
pub const DEFAULT_COURCELLE_VERTICES: usize = 5;
pub const DEFAULT_NU_PAIRS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Refinement,
    Bounds,
    Parse,
    Widths,
    FtCompat,
    Minors,
    Constructions,
    Courcelle,
    Nu,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Refinement,
        Suite::Bounds,
        Suite::Parse,
        Suite::Widths,
        Suite::FtCompat,
        Suite::Minors,
        Suite::Constructions,
        Suite::Courcelle,
        Suite::Nu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Refinement => "refinement",
            Suite::Bounds => "bounds",
            Suite::Parse => "parse",
            Suite::Widths => "widths",
            Suite::FtCompat => "ftcompat",
            Suite::Minors => "minors",
            Suite::Constructions => "constructions",
            Suite::Courcelle => "courcelle",
            Suite::Nu => "nu",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

/// Suite parameters. `None` fields take the suite's documented default.
#[derive(Clone, Debug, Default)]
pub struct Config {
    pub seed: u64,
    /// Caps the size of every generated instance.
    pub max_elements: Option<usize>,
    /// Number of seeded instances (per family where families apply).
    pub instances: Option<usize>,
}

impl Config {
    fn cap(&self, default: usize) -> usize {
        self.max_elements.map_or(default, |m| m.min(default))
    }

    fn count(&self, default: usize) -> usize {
        self.instances.unwrap_or(default)
    }
}

pub fn run_suite(suite: Suite, cfg: &Config) -> Report {
    let rows = match suite {
        Suite::Refinement => class_suite(cfg, false),
        Suite::Bounds => class_suite(cfg, true),
        Suite::Parse => parse_suite(cfg),
        Suite::Widths => width_suite(cfg),
        Suite::FtCompat => ft_suite(cfg),
        Suite::Minors => minor_suite(cfg),
        Suite::Constructions => construction_suite(cfg),
        Suite::Courcelle => courcelle_suite(cfg),
        Suite::Nu => nu_suite(cfg),
    };
    Report {
        experiment: suite.name().to_string(),
        seed: cfg.seed,
        rows: rows
            .into_iter()
            .enumerate()
            .map(|(i, r)| Row { index: i, ..r })
            .collect(),
    }
}

fn errored(name: &str, hashed: &str, e: Error) -> Row {
    let mut r = Row::new(0, name, hashed);
    r.fail(format!("error: {e}"));
    r
}

/// The `U` sides of every edge of a random decomposition, plus two random sets.
pub fn boundaries(rng: &mut Lcg, n: usize) -> Vec<Subset> {
    let mut out = BTreeSet::new();
    if n >= 2 {
        let choices: Vec<usize> = (3..n).map(|k| rng.below(2 * k - 3)).collect();
        let d = Decomposition::grown(n, &choices).expect("valid choices");
        out.extend(d.all_displayed().into_iter().map(|(u, _)| u));
    }
    for _ in 0..2 {
        out.insert(Subset(rng.subset(n)));
    }
    out.into_iter().collect()
}

fn class_suite(cfg: &Config, bounds: bool) -> Vec<Row> {
    let count = cfg.count(DEFAULT_CLASS_INSTANCES);
    let jobs: Vec<(Family, usize)> = Family::REFINABLE
        .iter()
        .flat_map(|&f| (0..count).map(move |i| (f, i)))
        .collect();
    jobs.par_iter()
        .map(|&(f, i)| {
            let inst = match f.generate(cfg.seed, i as u64, cfg.cap(f.default_max())) {
                Ok(inst) => inst,
                Err(e) => return errored(f.name(), "", e),
            };
            let text = write_instance(&inst);
            let mut rng = Lcg::stream(cfg.seed ^ 0xB0, (f.index() << 32) | i as u64);
            let mut row = Row::new(0, f.name(), &text);
            if let Err(e) = evaluate_classes(&inst, &mut rng, bounds, &mut row) {
                row.fail(format!("error: {e}"));
            }
            if !row.pass {
                row.detail = format!("instance #{i}: {}", row.detail);
            }
            row
        })
        .collect()
}

/// Checks every sampled boundary of one instance; the row keeps the boundary
/// with the most refined classes.
fn evaluate_classes(inst: &Instance, rng: &mut Lcg, bounds: bool, row: &mut Row) -> Result<()> {
    let m = inst.oracle()?;
    let g = m.ground().clone();
    let three_connected = bounds && inst.frame().is_some() && is_n_connected(&*m, 3)?;
    for u in boundaries(rng, m.size()) {
        let lambda = connectivity(&*m, u)?;
        let refiner = Refiner::new(inst, u)?;
        let sigs: HashMap<Subset, _> = u.subsets().map(|x| (x, refiner.signature(x))).collect();
        let refined = count_classes_by_key(u, |x| sigs[&x].clone());
        let sim = sim_classes(&*m, u)?.count();
        let bound = refiner.bound(lambda);
        if row.refined.is_none_or(|r| refined > r) {
            row.lambda = Some(lambda);
            row.sim = Some(sim);
            row.refined = Some(refined);
            row.bound = Some(bound.to_string());
        }
        let at_u = || format!("U={}", g.display(u));
        if !bounds {
            if let Some(v) = check_refines_by_key(&*m, u, |x| sigs[&x].clone())? {
                row.fail(format!(
                    "{} X={} X'={} Z={}",
                    at_u(),
                    g.display(v.x),
                    g.display(v.x_prime),
                    g.display(v.z)
                ));
            }
            continue;
        }
        row.check(bound.admits(refined), || {
            format!("{}: {refined} refined classes exceed bound {bound}", at_u())
        });
        match (&refiner, inst) {
            (Refiner::Transversal { cover, .. }, _) => row.check(cover.len() <= lambda, || {
                format!(
                    "{}: cover of size {} exceeds lambda={lambda}",
                    at_u(),
                    cover.len()
                )
            }),
            (Refiner::Frame { frame, .. }, _) if three_connected => {
                let n = frame.graph().boundary(u).len();
                row.check(n <= frame_vertex_bound(lambda), || {
                    format!("{}: {n} boundary vertices exceed 14*{lambda}-12", at_u())
                });
            }
            _ => {}
        }
    }
    if three_connected {
        row.detail = "3-connected".into();
    }
    Ok(())
}

/// Independence by enumerating intermediate paths: `Y` is independent iff it
/// is contained in the north-step set of some path.
pub fn lattice_by_paths(l: &LatticePathPresentation) -> Vec<bool> {
    let n = l.len();
    let bases: Vec<u64> = l
        .intermediate_paths()
        .iter()
        .map(|p| {
            p.chars()
                .enumerate()
                .filter(|&(_, c)| c == 'N')
                .fold(0, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    (0u64..1 << n)
        .map(|y| bases.iter().any(|&b| y & !b == 0))
        .collect()
}

fn parse_suite(cfg: &Config) -> Vec<Row> {
    let max = cfg.cap(DEFAULT_PARSE_STEPS);
    (0..cfg.count(DEFAULT_PARSE_INSTANCES))
        .into_par_iter()
        .map(|i| {
            let mut rng = Lcg::stream(cfg.seed ^ 0x9A, i as u64);
            // Lengths cycle downwards from the maximum so every length is covered.
            let l = match gen::lattice_with_len(&mut rng, max - i % max) {
                Ok(l) => l,
                Err(e) => return errored("latticepath", "", e),
            };
            let text = write_instance(&Instance::LatticePath(l.clone()));
            let mut row = Row::new(0, "latticepath", &text);
            if let Err(e) = check_parse(&l, &mut row) {
                row.fail(format!("error: {e}"));
            }
            if !row.pass {
                row.detail = format!("P={} Q={}: {}", l.p(), l.q(), row.detail);
            }
            row
        })
        .collect()
}

fn check_parse(l: &LatticePathPresentation, row: &mut Row) -> Result<()> {
    let oracle = lattice_path_oracle(l)?;
    let parse = lattice_parse(l, None)?;
    row.lambda = Some(parse.lambda);
    let n = l.len();
    for y in Subset::full(n).subsets() {
        let t = encode(&parse.tree, &parse.phi, y)?;
        let got = accepts(&parse.automaton, &t)?;
        if got != oracle.is_independent(y) {
            row.fail(format!(
                "automaton disagrees with the oracle on {}",
                oracle.ground().display(y)
            ));
            return Ok(());
        }
    }
    if n <= PATH_ENUMERATION_STEPS {
        let by_paths = lattice_by_paths(l);
        if let Some(y) =
            (0..1u64 << n).find(|&y| by_paths[y as usize] != oracle.is_independent(Subset(y)))
        {
            row.fail(format!(
                "oracle disagrees with path enumeration on {}",
                oracle.ground().display(Subset(y))
            ));
        }
        row.detail = format!("m+r={n}, paths checked");
    } else {
        row.detail = format!("m+r={n}");
    }
    Ok(())
}

/// Every presentation with `n` steps.
pub fn all_lattice_presentations(n: usize) -> Vec<LatticePathPresentation> {
    let mut out = Vec::new();
    for r in 0..=n {
        let paths: Vec<String> = (0u32..1 << n)
            .filter(|b| b.count_ones() as usize == r)
            .map(|b| {
                (0..n)
                    .map(|i| if b >> i & 1 == 1 { 'N' } else { 'E' })
                    .collect()
            })
            .collect();
        for p in &paths {
            for q in &paths {
                if let Ok(l) = LatticePathPresentation::new(p, q) {
                    out.push(l);
                }
            }
        }
    }
    out
}

fn width_suite(cfg: &Config) -> Vec<Row> {
    let mut rows = Vec::new();

    let u24 = "uniform\nr=2 n=4\n";
    let mut row = Row::new(0, "u24-bw", u24);
    match uniform_oracle(2, 4).and_then(|m| branch_width(&m)) {
        Ok(bw) => {
            row.lambda = Some(bw);
            row.check(bw == 3, || format!("bw(U24)={bw}, expected 3"));
        }
        Err(e) => row.fail(e.to_string()),
    }
    rows.push(row);

    let k3 = SimpleGraph::complete(3);
    let mut row = Row::new(
        0,
        "mk3-bw",
        &write_instance(&Instance::SparsePaving(k3.clone())),
    );
    match m_of_graph(&k3).and_then(|m| branch_width(&m)) {
        Ok(bw) => {
            row.lambda = Some(bw);
            row.check(bw <= 4, || format!("bw(m(K3))={bw}, expected at most 4"));
        }
        Err(e) => row.fail(e.to_string()),
    }
    rows.push(row);

    for n in 1..=cfg.cap(DEFAULT_WIDTH_STEPS) {
        let all = all_lattice_presentations(n);
        let mut row = Row::new(
            0,
            format!("staircases-{n}"),
            &format!("all lattice presentations, {n} steps"),
        );
        let failures: Vec<String> = all
            .par_iter()
            .filter_map(|l| {
                let bw = match lattice_path_oracle(l).and_then(|m| branch_width(&m)) {
                    Ok(bw) => bw,
                    Err(e) => return Some(format!("P={} Q={}: {e}", l.p(), l.q())),
                };
                (!staircase_bound_check(l, bw)).then(|| format!("P={} Q={} bw={bw}", l.p(), l.q()))
            })
            .collect();
        row.refined = Some(all.len());
        match failures.first() {
            Some(f) => row.fail(format!("{} violations, first {f}", failures.len())),
            None => row.detail = format!("{} presentations", all.len()),
        }
        rows.push(row);
    }
    rows
}

/// Compares independence of `X ∪ Y` with compatibility of the certificate
/// signatures of `X ⊆ U` and `Y ⊆ E - U`, returning the first disagreement.
pub fn ft_compat_mismatch(g: &BipartitePresentation, u: Subset) -> Option<(Subset, Subset)> {
    let m = fundamental_transversal_oracle(g);
    let v = g.ground().full().difference(u);
    let cover = ft_boundary_cover(g, u);
    let sx: Vec<_> = u
        .subsets()
        .map(|x| (x, ft_signature(g, cover, u, Side::U, x)))
        .collect();
    let sy: Vec<_> = v
        .subsets()
        .map(|y| (y, ft_signature(g, cover, u, Side::V, y)))
        .collect();
    for (x, a) in &sx {
        for (y, b) in &sy {
            if m.is_independent(x.union(*y)) != ft_signatures_compatible(a, b) {
                return Some((*x, *y));
            }
        }
    }
    None
}

fn ft_suite(cfg: &Config) -> Vec<Row> {
    let total = cfg.cap(DEFAULT_FT_ELEMENTS);
    let mut rows = Vec::new();
    let mut shapes = Vec::new();
    for a in 1..total {
        for b in 1..=total - a {
            if a * b <= FT_EXHAUSTIVE_EDGES {
                shapes.push((a, b));
            }
        }
    }
    for (a, b) in shapes {
        let name = format!("ft-all-{a}x{b}");
        let mut row = Row::new(0, name.clone(), &name);
        let stream = ((a as u64) << 40) | ((b as u64) << 32);
        let found = (0u64..1 << (a * b)).into_par_iter().find_map_first(|mask| {
            let g = match gen::bipartite(a as u32, b as u32, |k| mask >> k & 1 == 1) {
                Ok(g) => g,
                Err(e) => return Some(format!("edges {mask:#x}: {e}")),
            };
            let u = Subset(Lcg::stream(cfg.seed ^ 0xF7, stream | mask).subset(a + b));
            ft_compat_mismatch(&g, u).map(|(x, y)| {
                let d = |s| g.ground().display(s);
                format!("edges {mask:#x} U={} X={} Y={}", d(u), d(x), d(y))
            })
        });
        row.refined = Some(1 << (a * b));
        match found {
            Some(f) => row.fail(f),
            None => row.detail = format!("{} edge sets", 1u64 << (a * b)),
        }
        rows.push(row);
    }
    let sampled: Vec<Row> = (0..cfg.count(DEFAULT_FT_SAMPLE))
        .into_par_iter()
        .map(|i| {
            let mut rng = Lcg::stream(cfg.seed ^ 0xF8, i as u64);
            let b = rng.range(1, total - 1);
            let g = match gen::bipartite((total - b) as u32, b as u32, |_| rng.chance(1, 2)) {
                Ok(g) => g,
                Err(e) => return errored("ftransversal", "", e),
            };
            let text = write_instance(&Instance::FTransversal(g.clone()));
            let mut row = Row::new(0, "ftransversal", &text);
            for _ in 0..4 {
                let u = Subset(rng.subset(total));
                if let Some((x, y)) = ft_compat_mismatch(&g, u) {
                    let d = |s| g.ground().display(s);
                    row.fail(format!("sample #{i} U={} X={} Y={}", d(u), d(x), d(y)));
                    break;
                }
            }
            row
        })
        .collect();
    rows.extend(sampled);
    rows
}

/// Compares every single-edge deletion and contraction of `frame` with the
/// matroid minor, returning a description of the first disagreement.
pub fn frame_minor_mismatch(frame: &FrameGraph) -> Result<Option<String>> {
    let m: SharedMatroid = Arc::new(frame_oracle(frame.clone()));
    for &id in m.ground().ids() {
        for (kind, spec) in [
            (MinorKind::Delete, MinorSpec::delete(vec![id])),
            (MinorKind::Contract, MinorSpec::contract(vec![id])),
        ] {
            let graph_level = frame_oracle(frame_minor(frame, id, kind)?);
            let matroid_level = minor(m.clone(), &spec)?;
            if !same_matroid(&graph_level, &matroid_level) {
                return Ok(Some(format!("{kind:?} edge {id}")));
            }
        }
    }
    Ok(None)
}

fn minor_suite(cfg: &Config) -> Vec<Row> {
    let max = cfg.cap(DEFAULT_MINOR_EDGES);
    let count = cfg.count(DEFAULT_MINOR_INSTANCES);
    let families = [
        Family::Bicircular,
        Family::GainZ2,
        Family::GainZ3,
        Family::GainS3,
    ];
    (0..2 * count)
        .into_par_iter()
        .map(|i| {
            // Even indices are bicircular, odd ones cycle through the groups.
            let f = if i % 2 == 0 {
                families[0]
            } else {
                families[1 + (i / 2) % 3]
            };
            let inst = match f.generate(cfg.seed ^ 0x31, i as u64, max) {
                Ok(inst) => inst,
                Err(e) => return errored(f.name(), "", e),
            };
            let text = write_instance(&inst);
            let mut row = Row::new(0, f.name(), &text);
            match frame_minor_mismatch(&inst.frame().expect("frame family")) {
                Ok(Some(msg)) => row.fail(format!("instance #{i}: {msg}")),
                Ok(None) => {}
                Err(e) => row.fail(format!("instance #{i}: {e}")),
            }
            row
        })
        .collect()
}

fn axioms_row(name: &str, m: &dyn Matroid) -> Row {
    let mut row = Row::new(0, name, name);
    match SetSystem::from_oracle(m).and_then(|s| verify_axioms(&s)) {
        Ok(ok) => row.check(ok, || "independence axioms fail".into()),
        Err(e) => row.fail(e.to_string()),
    }
    row
}

/// Circuits with at most three elements expected in the object construction.
pub fn object_small_circuits(q: usize) -> BTreeSet<Vec<u32>> {
    let q32 = q as u32;
    let mut out = BTreeSet::new();
    let blocks = [
        1..=q32,
        q32 + 1..=2 * q32,
        2 * q32 + 1..=2 * q32 + q32 * q32,
    ];
    for block in blocks {
        let ids: Vec<u32> = block.collect();
        for i in 0..ids.len() {
            for j in i + 1..ids.len() {
                for k in j + 1..ids.len() {
                    out.insert(vec![ids[i], ids[j], ids[k]]);
                }
            }
        }
    }
    for i in 0..q32 {
        for j in 0..q32 {
            out.insert(vec![i + 1, q32 + j + 1, 2 * q32 + 1 + i * q32 + j]);
        }
    }
    out
}

fn construction_suite(cfg: &Config) -> Vec<Row> {
    let mut rows = Vec::new();
    // m(G) needs at least three vertices.
    for n in 3..=5 {
        let g = SimpleGraph::complete(n);
        match m_of_graph(&g) {
            Ok(m) => rows.push(axioms_row(&format!("m(K{n})"), &m)),
            Err(e) => rows.push(errored(&format!("m(K{n})"), "", e)),
        }
    }
    for q in [2, 3] {
        let name = format!("object-{q}");
        match object_construction(q) {
            Ok((_, m)) => {
                let mut row = axioms_row(&name, &m);
                let got: BTreeSet<Vec<u32>> = small_circuits(&m, 3)
                    .into_iter()
                    .map(|c| m.ground().ids_of(c))
                    .collect();
                row.check(got == object_small_circuits(q), || {
                    "non-spanning circuits differ from the expected family".into()
                });
                rows.push(row);
            }
            Err(e) => rows.push(errored(&name, "", e)),
        }
    }
    match uniform_oracle(2, 3) {
        Ok(u23) => rows.extend(extension_rows("ext-u23", Arc::new(u23))),
        Err(e) => rows.push(errored("ext-u23", "", e)),
    }
    let max = cfg.cap(10).saturating_sub(1).max(1);
    for i in 0..cfg.count(20) {
        let mut rng = Lcg::stream(cfg.seed ^ 0xC0, i as u64);
        match gen::gammoid(&mut rng, max) {
            Ok(g) => {
                let text = write_instance(&Instance::Gammoid(g.clone()));
                let mut row = Row::new(0, "ext-gammoid", &text);
                for r in extension_rows("ext-gammoid", Arc::new(strict_gammoid_oracle(&g))) {
                    if !r.pass {
                        row.fail(format!("gammoid #{i}: {}", r.detail));
                    }
                }
                rows.push(row);
            }
            Err(e) => rows.push(errored("ext-gammoid", "", e)),
        }
    }
    for m in 1..=6 {
        for n in 1..=6 {
            let name = format!("raunch-{m}x{n}");
            let mut row = Row::new(0, name.clone(), &name);
            match raunch_sets(m, n) {
                Ok(s) => {
                    let sums = s.sums();
                    let distinct: BTreeSet<i64> = sums.iter().copied().collect();
                    let ab: BTreeSet<i64> = s.a.iter().chain(&s.b).copied().collect();
                    row.check(
                        s.a.len() == m && s.b.len() == n && ab.len() == m + n,
                        || "wrong set sizes".into(),
                    );
                    row.check(distinct.len() == m * n, || "sums are not distinct".into());
                    row.check(distinct.is_disjoint(&ab), || "a sum lies in A or B".into());
                }
                Err(e) => row.fail(e.to_string()),
            }
            rows.push(row);
        }
    }
    rows
}

/// One row per flat: the principal extension must satisfy the axioms.
fn extension_rows(name: &str, m: SharedMatroid) -> Vec<Row> {
    let flats: BTreeSet<Subset> = m
        .ground()
        .full()
        .subsets()
        .filter_map(|x| closure(&*m, x).ok())
        .collect();
    flats
        .into_iter()
        .map(|f| {
            let ids = m.ground().ids_of(f);
            let label = format!("{name} F={}", m.ground().display(f));
            match principal_extension(m.clone(), &ids, None) {
                Ok(ext) => {
                    let mut row = axioms_row(&label, &ext);
                    if !row.pass {
                        row.detail = format!("{label}: {}", row.detail);
                    }
                    row
                }
                Err(e) => errored(&label, &label, e),
            }
        })
        .collect()
}

fn courcelle_suite(cfg: &Config) -> Vec<Row> {
    (1..=cfg.cap(DEFAULT_COURCELLE_VERTICES) as u32)
        .map(|n| {
            let name = format!("courcelle-{n}");
            let mut row = Row::new(0, name.clone(), &name);
            let graphs: Vec<SimpleGraph> = SimpleGraph::all(n).collect();
            let failure = graphs
                .par_iter()
                .find_map_first(|g| courcelle_mismatch(g).err());
            row.refined = Some(graphs.len());
            match failure {
                Some(f) => row.fail(f),
                None => row.detail = format!("{} graphs", graphs.len()),
            }
            row
        })
        .collect()
}

fn courcelle_mismatch(g: &SimpleGraph) -> std::result::Result<(), String> {
    let (graph, m) = courcelle_gadget(g).map_err(|e| e.to_string())?;
    let ground: &GroundSet = graph.ground();
    let circuits: BTreeSet<Vec<u32>> = small_circuits(&m, 3)
        .into_iter()
        .map(|c| ground.ids_of(c))
        .collect();
    let edges = g.edges();
    for v in 1..=g.vertex_count() {
        let loops = gadget_loops(edges.len(), v);
        if !circuits.contains(loops.as_slice()) {
            return Err(format!("{edges:?}: loops at {v} are not a circuit"));
        }
        for (k, &(a, b)) in edges.iter().enumerate() {
            let e = k as u32 + 1;
            let witnessed = circuits
                .iter()
                .any(|c| c.len() == 3 && c.contains(&e) && loops.iter().any(|l| c.contains(l)));
            if witnessed != (a == v || b == v) {
                return Err(format!("{edges:?}: edge {e} and vertex {v}"));
            }
        }
    }
    Ok(())
}

fn nu_suite(cfg: &Config) -> Vec<Row> {
    (0..cfg.count(DEFAULT_NU_PAIRS))
        .into_par_iter()
        .map(|i| {
            let mut rng = Lcg::stream(cfg.seed ^ 0x2B, i as u64);
            let g = match gen::multigraph(&mut rng, cfg.cap(10)) {
                Ok(g) => g,
                Err(e) => return errored("nu", "", e),
            };
            let l = gen::bipartition(&mut rng, &g);
            let full = g.ground().full();
            let r = full.difference(l);
            let verts = |s: Subset| -> BTreeSet<u32> {
                s.iter()
                    .flat_map(|p| {
                        let e = g.edge_at(p);
                        [e.u, e.v]
                    })
                    .collect()
            };
            let nu = |s: Subset| s.len() as i64 - verts(s).len() as i64;
            let gamma = verts(l).intersection(&verts(r)).count() as i64;
            let text = format!("{:?} L={:?}", g.edges(), l);
            let mut row = Row::new(0, "nu", &text);
            let (lhs, rhs) = (nu(full), nu(l) + nu(r) + gamma);
            row.check(lhs == rhs, || format!("pair #{i}: {lhs} != {rhs}"));
            row.check(g.nu(full) == lhs, || {
                format!("pair #{i}: graph nu disagrees")
            });
            row
        })
        .collect()
}
