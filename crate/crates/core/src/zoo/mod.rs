//! Concrete matroid representations and generators for example families.

mod constructions;
mod extension;
mod frame;
mod gammoid;
mod gf;
mod graph;
mod group;
mod instance;
mod lattice;
mod linear;
mod sparse_paving;
mod transversal;
mod uniform;

pub use constructions::{
    courcelle_gadget, gadget_loops, object_construction, raunch_sets, RaunchSets,
};
pub use extension::{principal_extension, PrincipalExtension};
pub use frame::{
    balance_and_gain, bicircular_minor, bicircular_oracle, frame_boundary, frame_minor,
    frame_oracle, gain_minor, gain_oracle, switch, Balance, BicircularGraph, FrameGraph,
    FrameOracle, GainGraph, MinorKind,
};
pub use gammoid::{strict_gammoid_oracle, GammoidPresentation, StrictGammoidOracle};
pub use gf::{is_prime, PrimeField};
pub use graph::{Edge, Multigraph, SimpleGraph};
pub use group::{Elem, Group};
pub use instance::Instance;
pub use lattice::{
    lattice_path_oracle, LatticePathOracle, LatticePathPresentation, Point, Staircase,
};
pub use linear::{linear_oracle, LinearOracle, LinearRep};
pub use sparse_paving::{m_of_graph, SparsePavingOracle};
pub use transversal::{
    fundamental_transversal_oracle, BipartitePresentation, FundamentalTransversalOracle,
    StandardTransversal,
};
pub use uniform::{uniform_oracle, UniformOracle};
