//! Seeded experiment suites and their reports.

pub mod gen;
mod report;
mod rng;
mod suites;

pub use gen::Family;
pub use report::{short_hash, Report, Row};
pub use rng::Lcg;
pub use suites::{
    all_lattice_presentations, boundaries, frame_minor_mismatch, ft_compat_mismatch,
    lattice_by_paths, object_small_circuits, run_suite, Config, Suite,
};
