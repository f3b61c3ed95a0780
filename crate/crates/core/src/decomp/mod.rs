//! Decomposition trees, boundary equivalence classes, and exact widths.

mod classes;
mod tree;
mod width;

pub use classes::{
    check_refines, check_refines_by_key, count_classes_by_key, sim_classes, BoundaryClasses,
    RefinementViolation, SIM_LIMIT,
};
pub use tree::{enumerate_decompositions, Decomposition, Decompositions, ENUMERATION_LIMIT};
pub use width::{branch_width, bw_of, decomposition_width, dw_of, WIDTH_LIMIT};
