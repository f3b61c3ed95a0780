use std::sync::Arc;

use crate::error::Result;
use crate::matroid::SharedMatroid;
use crate::zoo::frame::{frame_oracle, BicircularGraph, FrameGraph, GainGraph};
use crate::zoo::gammoid::{strict_gammoid_oracle, GammoidPresentation};
use crate::zoo::graph::SimpleGraph;
use crate::zoo::lattice::{lattice_path_oracle, LatticePathPresentation};
use crate::zoo::linear::{linear_oracle, LinearRep};
use crate::zoo::sparse_paving::m_of_graph;
use crate::zoo::transversal::{fundamental_transversal_oracle, BipartitePresentation};
use crate::zoo::uniform::uniform_oracle;

/// Any presentation the toolkit can read, write and evaluate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Linear(LinearRep),
    Uniform { r: usize, n: usize },
    FTransversal(BipartitePresentation),
    LatticePath(LatticePathPresentation),
    Bicircular(BicircularGraph),
    GainGraph(GainGraph),
    Gammoid(GammoidPresentation),
    SparsePaving(SimpleGraph),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Linear(_) => "linear",
            Instance::Uniform { .. } => "uniform",
            Instance::FTransversal(_) => "ftransversal",
            Instance::LatticePath(_) => "latticepath",
            Instance::Bicircular(_) => "bicircular",
            Instance::GainGraph(_) => "gaingraph",
            Instance::Gammoid(_) => "gammoid",
            Instance::SparsePaving(_) => "sparsepaving",
        }
    }

    pub fn oracle(&self) -> Result<SharedMatroid> {
        Ok(match self {
            Instance::Linear(rep) => Arc::new(linear_oracle(rep)?),
            Instance::Uniform { r, n } => Arc::new(uniform_oracle(*r, *n)?),
            Instance::FTransversal(g) => Arc::new(fundamental_transversal_oracle(g)),
            Instance::LatticePath(l) => Arc::new(lattice_path_oracle(l)?),
            Instance::Bicircular(b) => Arc::new(frame_oracle(FrameGraph::Bicircular(b.clone()))),
            Instance::GainGraph(g) => Arc::new(frame_oracle(FrameGraph::Gain(g.clone()))),
            Instance::Gammoid(g) => Arc::new(strict_gammoid_oracle(g)),
            Instance::SparsePaving(g) => Arc::new(m_of_graph(g)?),
        })
    }

    pub fn frame(&self) -> Option<FrameGraph> {
        match self {
            Instance::Bicircular(b) => Some(FrameGraph::Bicircular(b.clone())),
            Instance::GainGraph(g) => Some(FrameGraph::Gain(g.clone())),
            _ => None,
        }
    }
}
