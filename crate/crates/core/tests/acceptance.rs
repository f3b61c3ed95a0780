//! Runs every acceptance criterion and prints one PASS/FAIL line for each.
//! Exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use matdec::experiments::{run_suite, Config, Family, Report, Suite};

const SEED: u64 = 1;

struct Outcome {
    pass: bool,
    detail: String,
}

fn suite(s: Suite) -> (Report, Duration) {
    let start = Instant::now();
    let r = run_suite(
        s,
        &Config {
            seed: SEED,
            ..Config::default()
        },
    );
    (r, start.elapsed())
}

fn first_failure(r: &Report) -> String {
    r.failures()
        .next()
        .map(|f| format!("; first failure #{} {}: {}", f.index, f.instance, f.detail))
        .unwrap_or_default()
}

fn per_family(r: &Report) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for row in &r.rows {
        *m.entry(row.instance.clone()).or_default() += 1;
    }
    m
}

fn class_criterion(s: Suite, time_limit: Option<Duration>) -> Outcome {
    let (r, took) = suite(s);
    let counts = per_family(&r);
    let enough = Family::REFINABLE
        .iter()
        .all(|f| counts.get(f.name()).copied().unwrap_or(0) >= 200);
    let in_time = time_limit.is_none_or(|t| took <= t);
    Outcome {
        pass: r.all_pass() && enough && in_time,
        detail: format!(
            "{} instances over {} families, {} failed, {:.1}s{}",
            r.rows.len(),
            counts.len(),
            r.failed(),
            took.as_secs_f64(),
            first_failure(&r)
        ),
    }
}

fn counted(s: Suite, min_rows: usize, filter: impl Fn(&str) -> bool) -> Outcome {
    let (r, took) = suite(s);
    let n = r.rows.iter().filter(|row| filter(&row.instance)).count();
    Outcome {
        pass: r.all_pass() && n >= min_rows,
        detail: format!(
            "{} rows ({n} counted, need {min_rows}), {} failed, {:.1}s{}",
            r.rows.len(),
            r.failed(),
            took.as_secs_f64(),
            first_failure(&r)
        ),
    }
}

fn main() -> ExitCode {
    type Criterion = Box<dyn Fn() -> Outcome>;
    let criteria: Vec<(&str, Criterion)> = vec![
        (
            "refinement",
            Box::new(|| class_criterion(Suite::Refinement, Some(Duration::from_secs(600)))),
        ),
        ("bounds", Box::new(|| class_criterion(Suite::Bounds, None))),
        (
            "parse-tree equivalence",
            Box::new(|| counted(Suite::Parse, 20, |_| true)),
        ),
        ("widths", Box::new(|| counted(Suite::Widths, 12, |_| true))),
        (
            "ft compatibility",
            Box::new(|| counted(Suite::FtCompat, 100, |i| i == "ftransversal")),
        ),
        (
            "minor compatibility",
            Box::new(|| {
                let gain = counted(Suite::Minors, 100, |i| i.starts_with("gain"));
                let bic = counted(Suite::Minors, 100, |i| i == "bicircular");
                Outcome {
                    pass: gain.pass && bic.pass,
                    detail: format!("gain: {}; bicircular: {}", gain.detail, bic.detail),
                }
            }),
        ),
        (
            "constructions",
            Box::new(|| counted(Suite::Constructions, 1, |_| true)),
        ),
        (
            "courcelle gadget",
            Box::new(|| counted(Suite::Courcelle, 5, |_| true)),
        ),
        (
            "nu identity",
            Box::new(|| counted(Suite::Nu, 1000, |_| true)),
        ),
    ];
    let mut all = true;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        all &= o.pass;
        println!(
            "criterion {} {name}: {} ({})",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
