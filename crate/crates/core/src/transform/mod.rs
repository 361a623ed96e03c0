//! Representation transformations: bumps on a proper VPG, the skew map with
//! edge rerouting, and tracing orthogonal drawings into EPG paths of a minor.

mod bump;
mod orthogonal;
mod skew;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, VertexId};
use crate::grid::{BoundingBox, GridEdge, GridError, GridPath, GridPoint};
use crate::representation::{
    induced_graph_vpg, is_proper_vpg, GridRepresentation, ProperViolation,
};

pub use bump::{bump_transform, bump_transform_scheduled};
pub use orthogonal::{check_drawing, orth_to_epg, DrawingError, OrthogonalDrawing, Port};
pub use skew::{skew, skew_point, xyplus_transform, xyplus_transform_scheduled};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("input is not a proper VPG-representation: {0}")]
    NotProper(ProperViolation),
    #[error("edge ({0}, {1}) is not an edge of the represented graph")]
    NotSubgraph(VertexId, VertexId),
    #[error("vertex {0} has no path in the representation")]
    MissingPath(VertexId),
    #[error("path of vertex {0} is not xy+-monotone")]
    NotXyPlus(VertexId),
    #[error("output box {got} exceeds {width}x{height}")]
    BoundExceeded {
        got: BoundingBox,
        width: u64,
        height: u64,
    },
    #[error("postcondition failed: {0}")]
    Postcondition(String),
    #[error("schedule does not list every edge exactly once")]
    BadSchedule,
    #[error(transparent)]
    Drawing(#[from] DrawingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Grid(#[from] GridError),
}

/// The shared point chosen for one graph-edge and the role of each path there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub point: GridPoint,
    /// Uses the rightward grid-edge at `point`.
    pub rightward: VertexId,
    /// Uses the upward grid-edge at `point`.
    pub upward: VertexId,
}

/// One crossing per edge of the target subgraph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CrossingAssignment {
    pub crossings: BTreeMap<Edge, Crossing>,
}

impl CrossingAssignment {
    /// Checks properness and that `g_sub` is a subgraph of the induced VPG
    /// graph on the same vertex set; picks the lexicographically smallest
    /// shared point of every edge.
    pub fn compute(rv: &GridRepresentation, g_sub: &Graph) -> Result<Self, TransformError> {
        let cert = is_proper_vpg(rv);
        if let Some(v) = cert.violation {
            return Err(TransformError::NotProper(v));
        }
        if let Some(v) = g_sub.vertices().find(|&v| rv.path(v).is_none()) {
            return Err(TransformError::MissingPath(v));
        }
        let h = induced_graph_vpg(rv);
        let mut crossings = BTreeMap::new();
        for (u, v) in g_sub.edges() {
            if !h.has_edge(u, v) {
                return Err(TransformError::NotSubgraph(u, v));
            }
            let (pu, pv) = (&rv.paths[&u], &rv.paths[&v]);
            let (eu, ev) = (pu.edge_set(), pv.edge_set());
            let point = *pu
                .point_set()
                .intersection(&pv.point_set())
                .next()
                .expect("adjacent paths share a point");
            let (rightward, upward) = if eu.contains(&GridEdge::rightward(point))
                && ev.contains(&GridEdge::upward(point))
            {
                (u, v)
            } else {
                (v, u)
            };
            crossings.insert(
                (u, v),
                Crossing {
                    point,
                    rightward,
                    upward,
                },
            );
        }
        Ok(Self { crossings })
    }
}

/// Drops repeated consecutive points (and a repeated start on closed paths)
/// before building a simplified path.
pub(crate) fn path_from_points(
    mut pts: Vec<GridPoint>,
    closed: bool,
) -> Result<GridPath, GridError> {
    pts.dedup();
    if closed && pts.len() > 1 && pts.first() == pts.last() {
        pts.pop();
    }
    GridPath::from_points(pts, closed)
}

/// Unit-step point list of a path with every coordinate doubled.
pub(crate) fn doubled_points(path: &GridPath) -> Vec<GridPoint> {
    let pts = path.points();
    let mut out = vec![double(pts[0])];
    for w in pts.windows(2) {
        let (a, b) = (double(w[0]), double(w[1]));
        out.push(GridPoint::new((a.x + b.x) / 2, (a.y + b.y) / 2));
        out.push(b);
    }
    out
}

fn double(p: GridPoint) -> GridPoint {
    GridPoint::new(2 * p.x, 2 * p.y)
}

/// Replaces the unit step `from -> to` (in either traversal direction) by
/// `from, via.., to`. Returns false when the step is absent.
pub(crate) fn splice(
    pts: &mut Vec<GridPoint>,
    from: GridPoint,
    to: GridPoint,
    via: &[GridPoint],
) -> bool {
    for i in 0..pts.len().saturating_sub(1) {
        if pts[i] == from && pts[i + 1] == to {
            pts.splice(i + 1..i + 1, via.iter().copied());
            return true;
        }
        if pts[i] == to && pts[i + 1] == from {
            pts.splice(i + 1..i + 1, via.iter().rev().copied());
            return true;
        }
    }
    false
}

/// Schedules must be permutations of the assignment's edges.
pub(crate) fn check_schedule(
    assignment: &CrossingAssignment,
    schedule: &[Edge],
) -> Result<(), TransformError> {
    let mut listed: Vec<Edge> = schedule.to_vec();
    listed.sort_unstable();
    listed.dedup();
    if listed.len() != schedule.len()
        || !listed
            .iter()
            .copied()
            .eq(assignment.crossings.keys().copied())
    {
        return Err(TransformError::BadSchedule);
    }
    Ok(())
}

pub(crate) fn require_fits(
    rep: &GridRepresentation,
    width: u64,
    height: u64,
) -> Result<(), TransformError> {
    match rep.bounding_box() {
        Some(got) if !got.fits(width, height) => {
            Err(TransformError::BoundExceeded { got, width, height })
        }
        _ => Ok(()),
    }
}

pub(crate) fn require_exact(rep: &GridRepresentation, g: &Graph) -> Result<(), TransformError> {
    let report = crate::representation::validate(rep, g)
        .map_err(|e| TransformError::Postcondition(e.to_string()))?;
    if !report.is_exact() {
        return Err(TransformError::Postcondition(format!(
            "missing {:?}, excess {:?}",
            report.missing, report.excess
        )));
    }
    Ok(())
}
