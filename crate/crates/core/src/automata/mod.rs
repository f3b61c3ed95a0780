//! Bottom-up tree automata over labelled binary trees, and parse trees for
//! lattice path matroids.

mod engine;
mod lattice;

pub use engine::{
    accepted_family, accepts, encode, run, Run, SigmaTree, State, Symbol, TreeAutomaton, TreeNode,
    FAMILY_LIMIT,
};
pub use lattice::{lattice_parse, staircase_bound_check, LatticeParse};
