//! Efficiently computable refinements of the boundary equivalence, with their
//! class-count bounds.

mod bounds;
mod frame;
mod linear;
mod transversal;
mod uniform;

pub use bounds::{
    dw_bound, frame_class_bound, frame_vertex_bound, ft_cover_bound, ft_lambda_bound, linear_bound,
    uniform_bound, Bound, BoundsTable,
};
pub use frame::{frame_signature, FrameBlock, FrameSignature};
pub use linear::{linear_signature, LinearSignature};
pub use transversal::{
    ft_boundary_cover, ft_certificate_test, ft_compatible, ft_signature, ft_signatures_compatible,
    FtCertificate, FtSignature, Side,
};
pub use uniform::{uniform_refinement, UniformBucket, UniformRefinement};

use crate::decomp::{count_classes_by_key, sim_classes};
use crate::error::{Error, Result};
use crate::matroid::connectivity;
use crate::set::Subset;
use crate::zoo::{BipartitePresentation, FrameGraph, Instance, LinearRep};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RefinedSignature {
    Uniform(UniformBucket),
    Linear(LinearSignature),
    Transversal(FtSignature),
    Frame(FrameSignature),
}

/// The refinement for one instance and one boundary `U`.
pub enum Refiner {
    Uniform(UniformRefinement),
    Linear {
        rep: LinearRep,
        u: Subset,
    },
    Transversal {
        g: BipartitePresentation,
        u: Subset,
        cover: Subset,
    },
    Frame {
        frame: FrameGraph,
        u: Subset,
    },
}

impl Refiner {
    pub fn new(instance: &Instance, u: Subset) -> Result<Refiner> {
        let m = instance.oracle()?;
        m.ground().check(u)?;
        Ok(match instance {
            Instance::Uniform { r, n } => {
                Refiner::Uniform(uniform_refinement(*r, *n, u, connectivity(&*m, u)?)?)
            }
            Instance::Linear(rep) => Refiner::Linear {
                rep: rep.clone(),
                u,
            },
            Instance::FTransversal(g) => Refiner::Transversal {
                g: g.clone(),
                u,
                cover: ft_boundary_cover(g, u),
            },
            Instance::Bicircular(_) | Instance::GainGraph(_) => Refiner::Frame {
                frame: instance.frame().unwrap(),
                u,
            },
            other => {
                return Err(Error::Unsupported(format!(
                    "no efficient refinement for {} instances",
                    other.kind()
                )))
            }
        })
    }

    pub fn signature(&self, x: Subset) -> RefinedSignature {
        match self {
            Refiner::Uniform(f) => RefinedSignature::Uniform(f.bucket(x)),
            Refiner::Linear { rep, u } => RefinedSignature::Linear(linear_signature(rep, *u, x)),
            Refiner::Transversal { g, u, cover } => {
                RefinedSignature::Transversal(ft_signature(g, *cover, *u, Side::U, x))
            }
            Refiner::Frame { frame, u } => RefinedSignature::Frame(frame_signature(frame, *u, x)),
        }
    }

    /// Class-count bound at connectivity `lambda`.
    pub fn bound(&self, lambda: usize) -> Bound {
        match self {
            Refiner::Uniform(_) => uniform_bound(lambda),
            Refiner::Linear { rep, .. } => linear_bound(rep.prime(), lambda),
            Refiner::Transversal { cover, .. } => ft_cover_bound(cover.len()),
            Refiner::Frame { frame, u } => {
                let order = match frame {
                    FrameGraph::Bicircular(_) => Some(1),
                    FrameGraph::Gain(g) => g.group().order(),
                };
                frame_class_bound(frame.graph().boundary(*u).len(), order)
            }
        }
    }

    pub fn boundary(&self) -> Subset {
        match self {
            Refiner::Uniform(_) => unreachable!("uniform refiners do not keep U"),
            Refiner::Linear { u, .. }
            | Refiner::Transversal { u, .. }
            | Refiner::Frame { u, .. } => *u,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// The exact boundary equivalence.
    Sim,
    /// The instance's efficient refinement.
    Refined,
}

/// Number of classes of subsets of `U` under the chosen relation.
pub fn class_count(instance: &Instance, u: Subset, relation: Relation) -> Result<usize> {
    match relation {
        Relation::Sim => Ok(sim_classes(&*instance.oracle()?, u)?.count()),
        Relation::Refined => {
            let f = Refiner::new(instance, u)?;
            Ok(count_classes_by_key(u, |x| f.signature(x)))
        }
    }
}

/// The refinement's bound at the connectivity of `U`, computed from the oracle.
pub fn class_bound(instance: &Instance, u: Subset) -> Result<(usize, Bound)> {
    let lambda = connectivity(&*instance.oracle()?, u)?;
    Ok((lambda, Refiner::new(instance, u)?.bound(lambda)))
}
