use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use matdec::automata::lattice_parse;
use matdec::decomp::{branch_width, decomposition_width};
use matdec::experiments::{run_suite, Config, Family, Suite};
use matdec::io::{parse_instance, write_instance};
use matdec::matroid::rank;
use matdec::pigeonhole::{class_count, Relation};
use matdec::zoo::Instance;
use matdec::{Error, Result, Subset};

#[derive(Parser)]
#[command(name = "matdec", version, about = "Matroid decomposition toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rel {
    Sim,
    Refine,
}

#[derive(Clone, Copy, ValueEnum)]
enum Width {
    Bw,
    Dw,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Independence and rank of a subset, given as comma-separated ids.
    Oracle {
        file: String,
        #[arg(default_value = "")]
        subset: String,
    },
    /// Number of classes of subsets of U.
    Classes {
        file: String,
        /// Comma-separated ids of U.
        #[arg(long, short)]
        u: String,
        #[arg(long, value_enum, default_value = "sim")]
        relation: Rel,
    },
    /// Branch-width or decomposition-width, by exhaustive search.
    Width {
        file: String,
        #[arg(long, value_enum, default_value = "bw")]
        which: Width,
    },
    /// Parse tree and tree automaton of a lattice path instance.
    ParseTree {
        file: String,
        #[arg(long)]
        lambda: Option<usize>,
    },
    /// Prints a seeded instance of a family.
    Gen {
        family: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        index: u64,
        #[arg(long)]
        max_elements: Option<usize>,
    },
    /// Runs an experiment suite; exits with status 0 iff every check passes.
    Suite {
        name: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        max_elements: Option<usize>,
        /// Seeded instances (per family where the suite uses families).
        #[arg(long)]
        instances: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

fn load(path: &str) -> Result<Instance> {
    let text = fs::read_to_string(path).map_err(|e| Error::Domain(format!("{path}: {e}")))?;
    parse_instance(&text)
}

fn ids(list: &str) -> Result<Vec<u32>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Error::Domain(format!("bad element id {s:?}")))
        })
        .collect()
}

fn subset(inst: &Instance, list: &str) -> Result<Subset> {
    inst.oracle()?.ground().subset_of_ids(ids(list)?)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Oracle { file, subset: list } => {
            let inst = load(&file)?;
            let m = inst.oracle()?;
            let x = subset(&inst, &list)?;
            println!("independent={}", m.is_independent(x));
            println!("rank={}", rank(&*m, x)?);
        }
        Command::Classes { file, u, relation } => {
            let inst = load(&file)?;
            let u = subset(&inst, &u)?;
            let rel = match relation {
                Rel::Sim => Relation::Sim,
                Rel::Refine => Relation::Refined,
            };
            println!("classes={}", class_count(&inst, u, rel)?);
        }
        Command::Width { file, which } => {
            let m = load(&file)?.oracle()?;
            match which {
                Width::Bw => println!("bw={}", branch_width(&*m)?),
                Width::Dw => println!("dw={}", decomposition_width(&*m)?),
            }
        }
        Command::ParseTree { file, lambda } => match load(&file)? {
            Instance::LatticePath(l) => {
                let p = lattice_parse(&l, lambda)?;
                println!("lambda {}", p.lambda);
                let phi: Vec<String> = p.phi.iter().map(|v| v.to_string()).collect();
                println!("leaves {}", phi.join(" "));
                print!("{}", p.tree.to_text());
                print!("{}", p.automaton.to_text());
            }
            other => {
                return Err(Error::Unsupported(format!(
                    "parse trees are built for latticepath instances, not {}",
                    other.kind()
                )))
            }
        },
        Command::Gen {
            family,
            seed,
            index,
            max_elements,
        } => {
            let f = Family::from_name(&family).ok_or_else(|| {
                let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
                Error::Domain(format!(
                    "unknown family {family:?}; expected one of {}",
                    names.join(", ")
                ))
            })?;
            let inst = f.generate(seed, index, max_elements.unwrap_or(f.default_max()))?;
            print!("{}", write_instance(&inst));
        }
        Command::Suite {
            name,
            seed,
            max_elements,
            instances,
            format,
        } => {
            let suite = Suite::from_name(&name).ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::Domain(format!(
                    "unknown suite {name:?}; expected one of {}",
                    names.join(", ")
                ))
            })?;
            let report = run_suite(
                suite,
                &Config {
                    seed,
                    max_elements,
                    instances,
                },
            );
            match format {
                Format::Csv => print!("{}", report.to_csv()?),
                Format::Text => print!("{}", report.to_text()),
            }
            for r in report.failures() {
                eprintln!(
                    "FAIL {} #{} {}: {}",
                    report.experiment, r.index, r.instance, r.detail
                );
            }
            return Ok(report.all_pass());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
