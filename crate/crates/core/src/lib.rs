//! Matroid independence oracles, width measures, boundary equivalences and
//! tree-automaton parse trees, all checkable against exhaustive search on
//! small ground sets.

pub mod automata;
pub mod decomp;
pub mod error;
pub mod experiments;
pub mod io;
pub mod matching;
pub mod matroid;
pub mod pigeonhole;
pub mod set;
pub mod zoo;

pub use error::{Error, Result};
pub use matroid::{Matroid, SharedMatroid};
pub use set::{GroundSet, Subset};
