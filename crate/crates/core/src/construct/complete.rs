use crate::graph::Graph;
use crate::grid::{GridPath, GridPoint};
use crate::representation::{GridRepresentation, Mode};
use crate::transform::xyplus_transform;

use super::ConstructError;

/// Proper xy+-monotone VPG-representation of `K_n` in an `n x n` box.
///
/// Vertex `i` (0-based) is the Γ with corner `(i, i+1)`: up from `(i, 1)`,
/// then right to `(n, i+1)`. Vertex 0 starts at `(1, 1)`.
pub fn complete_vpg(n: usize) -> Result<GridRepresentation, ConstructError> {
    if n == 0 {
        return Err(ConstructError::Empty);
    }
    let n = n as i64;
    let mut rep = GridRepresentation::new(Mode::ProperVpg);
    rep.insert(
        0,
        if n == 1 {
            GridPath::point(GridPoint::new(1, 1))
        } else {
            GridPath::open([(1, 1), (n, 1)]).unwrap()
        },
    );
    for i in 1..n {
        rep.insert(
            i as usize,
            GridPath::open([(i, 1), (i, i + 1), (n, i + 1)]).unwrap(),
        );
    }
    Ok(rep)
}

/// xy+-monotone EPG-representation of any graph in a `3n x 2n` box.
///
/// Vertices are matched to the Γ-paths of `complete_vpg(n)` by ascending id.
pub fn epg_any_graph(g: &Graph) -> Result<GridRepresentation, ConstructError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(GridRepresentation::new(Mode::Epg));
    }
    let base = complete_vpg(n)?;
    let rv =
        GridRepresentation::with_paths(Mode::ProperVpg, g.vertices().zip(base.paths.into_values()));
    let out = xyplus_transform(&rv, g)?;
    let bb = out.bounding_box().unwrap();
    if !bb.fits(3 * n as u64, 2 * n as u64) {
        return Err(ConstructError::Postcondition(format!(
            "box {bb} exceeds {}x{}",
            3 * n,
            2 * n
        )));
    }
    Ok(out)
}
