use std::collections::BTreeMap;

use crate::graph::{Edge, Graph, VertexId};
use crate::grid::{GridPath, GridPoint};
use crate::representation::{is_proper_vpg, GridRepresentation, Mode};

use super::{
    check_schedule, path_from_points, require_exact, require_fits, CrossingAssignment,
    TransformError,
};

/// The skew map `(i, j) -> (2i + j, 2j)`.
pub fn skew_point(p: GridPoint) -> GridPoint {
    GridPoint::new(2 * p.x + p.y, 2 * p.y)
}

/// Unit-step points of the skewed image of an open `path`.
///
/// A horizontal unit edge becomes a straight run of length 2; a vertical one
/// becomes the zig-zag `up, right, up` starting at the image of its lower end.
fn skewed_points(path: &GridPath) -> Vec<GridPoint> {
    let pts = path.points();
    let mut out = vec![skew_point(pts[0])];
    for w in pts.windows(2) {
        out.extend(step_image(w[0], w[1]));
    }
    out
}

/// Image points of the unit step `a -> b`, excluding the image of `a`.
fn step_image(a: GridPoint, b: GridPoint) -> Vec<GridPoint> {
    let (s, t) = (skew_point(a), skew_point(b));
    if a.y == b.y {
        vec![GridPoint::new((s.x + t.x) / 2, s.y), t]
    } else if b.y > a.y {
        vec![s.offset(0, 1), s.offset(1, 1), t]
    } else {
        vec![t.offset(1, 1), t.offset(0, 1), t]
    }
}

fn require_xy_plus(rv: &GridRepresentation) -> Result<(), TransformError> {
    let cert = is_proper_vpg(rv);
    if let Some(v) = cert.violation {
        return Err(TransformError::NotProper(v));
    }
    for (&v, p) in &rv.paths {
        if !p.is_xy_plus_monotone().unwrap_or(false) {
            return Err(TransformError::NotXyPlus(v));
        }
    }
    Ok(())
}

fn skew_unchecked(rv: &GridRepresentation) -> BTreeMap<VertexId, Vec<GridPoint>> {
    rv.paths
        .iter()
        .map(|(&v, p)| (v, skewed_points(p)))
        .collect()
}

fn build(
    points: BTreeMap<VertexId, Vec<GridPoint>>,
    mode: Mode,
) -> Result<GridRepresentation, TransformError> {
    let mut out = GridRepresentation::new(mode);
    for (v, pts) in points {
        out.insert(v, path_from_points(pts, false)?);
    }
    Ok(out)
}

/// Skewed proper VPG-representation; adjacency, properness and
/// xy+-monotonicity are preserved.
pub fn skew(rv: &GridRepresentation) -> Result<GridRepresentation, TransformError> {
    require_xy_plus(rv)?;
    build(skew_unchecked(rv), Mode::ProperVpg)
}

/// xy+-monotone EPG-representation of `g_sub` from a proper xy+-monotone
/// VPG-representation.
///
/// After skewing, for each edge the upward path's zig-zag at the image
/// `(X, Y)` of the crossing is rerouted through `(X+1, Y)`, so both paths
/// share exactly the grid-edge `(X, Y)-(X+1, Y)`. A `w x h` input yields at
/// most `(2w + h) x 2h`.
pub fn xyplus_transform(
    rv: &GridRepresentation,
    g_sub: &Graph,
) -> Result<GridRepresentation, TransformError> {
    require_xy_plus(rv)?;
    let assignment = CrossingAssignment::compute(rv, g_sub)?;
    let schedule: Vec<Edge> = assignment.crossings.keys().copied().collect();
    apply(rv, g_sub, &assignment, &schedule)
}

/// As [`xyplus_transform`], rerouting in the given edge order.
pub fn xyplus_transform_scheduled(
    rv: &GridRepresentation,
    g_sub: &Graph,
    schedule: &[Edge],
) -> Result<GridRepresentation, TransformError> {
    require_xy_plus(rv)?;
    let assignment = CrossingAssignment::compute(rv, g_sub)?;
    check_schedule(&assignment, schedule)?;
    apply(rv, g_sub, &assignment, schedule)
}

fn apply(
    rv: &GridRepresentation,
    g_sub: &Graph,
    assignment: &CrossingAssignment,
    schedule: &[Edge],
) -> Result<GridRepresentation, TransformError> {
    let mut points = skew_unchecked(rv);
    for e in schedule {
        let c = assignment.crossings[e];
        let s = skew_point(c.point);
        let pts = points.get_mut(&c.upward).unwrap();
        let i = pts
            .windows(3)
            .position(|w| {
                (w[0] == s && w[1] == s.offset(0, 1) && w[2] == s.offset(1, 1))
                    || (w[2] == s && w[1] == s.offset(0, 1) && w[0] == s.offset(1, 1))
            })
            .expect("upward path has a zig-zag at the crossing");
        pts[i + 1] = s.offset(1, 0);
    }
    let out = build(points, Mode::Epg)?;

    if let Some(bb) = rv.bounding_box() {
        require_fits(&out, 2 * bb.width + bb.height, 2 * bb.height)?;
    }
    if let Some((&v, _)) = out
        .paths
        .iter()
        .find(|(_, p)| !p.is_xy_plus_monotone().unwrap_or(false))
    {
        return Err(TransformError::Postcondition(format!(
            "path of vertex {v} lost xy+-monotonicity"
        )));
    }
    require_exact(&out, g_sub)?;
    Ok(out)
}
