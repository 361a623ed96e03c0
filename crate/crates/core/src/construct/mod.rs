//! End-to-end builders: every graph from the complete-graph VPG, and
//! representations of height linear in the pathwidth.

mod complete;
mod pathwidth;

use thiserror::Error;

use crate::graph::VertexId;
use crate::interval::IntervalError;
use crate::transform::TransformError;

pub use complete::{complete_vpg, epg_any_graph};
pub use pathwidth::{
    farthest_path, pathwidth_epg, pathwidth_vpg, structural_conditions, Anchor, FarthestPath,
    PathwidthVpgResult,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("at least one vertex is required")]
    Empty,
    #[error("interval representation must be normalised")]
    NotNormalized,
    #[error("interval representation must be connected")]
    Disconnected,
    #[error("vertex sets of the graph and the intervals differ")]
    VertexMismatch,
    #[error("edge ({0}, {1}) is not an edge of the interval supergraph")]
    NotSubgraph(VertexId, VertexId),
    #[error("postcondition failed: {0}")]
    Postcondition(String),
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error(transparent)]
    Transform(#[from] TransformError),
}
