use std::collections::BTreeMap;

use crate::graph::{Edge, Graph, VertexId};
use crate::grid::{GridPath, GridPoint};
use crate::representation::{GridRepresentation, Mode};

use super::{
    check_schedule, doubled_points, path_from_points, require_exact, require_fits, splice,
    CrossingAssignment, TransformError,
};

/// EPG-representation of `g_sub` from a proper VPG-representation.
///
/// Coordinates are doubled; for every edge the rightward path at the chosen
/// crossing `(i, j)` detours through `(2i, 2j+1)` and `(2i+1, 2j+1)`, so the
/// two paths share exactly the grid-edge `(2i, 2j)-(2i, 2j+1)`.
/// A `w x h` input yields at most `2w x 2h`; x-monotone paths stay x-monotone.
pub fn bump_transform(
    rv: &GridRepresentation,
    g_sub: &Graph,
) -> Result<GridRepresentation, TransformError> {
    let assignment = CrossingAssignment::compute(rv, g_sub)?;
    let schedule: Vec<Edge> = assignment.crossings.keys().copied().collect();
    apply(rv, g_sub, &assignment, &schedule)
}

/// As [`bump_transform`], inserting the bumps in the given edge order.
pub fn bump_transform_scheduled(
    rv: &GridRepresentation,
    g_sub: &Graph,
    schedule: &[Edge],
) -> Result<GridRepresentation, TransformError> {
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
    let mut points: BTreeMap<VertexId, Vec<GridPoint>> = rv
        .paths
        .iter()
        .map(|(&v, p)| (v, doubled_points(p)))
        .collect();
    for e in schedule {
        let c = assignment.crossings[e];
        let (x, y) = (2 * c.point.x, 2 * c.point.y);
        let found = splice(
            points.get_mut(&c.rightward).unwrap(),
            GridPoint::new(x, y),
            GridPoint::new(x + 1, y),
            &[GridPoint::new(x, y + 1), GridPoint::new(x + 1, y + 1)],
        );
        debug_assert!(found, "rightward edge present at the crossing");
    }

    let mut out = GridRepresentation::new(Mode::Epg);
    for (v, pts) in points {
        let closed = rv.paths[&v].is_closed();
        out.insert(v, path_from_points(pts, closed)?);
    }

    if let Some(bb) = rv.bounding_box() {
        require_fits(&out, 2 * bb.width, 2 * bb.height)?;
    }
    let all_x = |r: &GridRepresentation| {
        r.paths
            .values()
            .all(|p: &GridPath| p.is_x_monotone().unwrap_or(false))
    };
    if all_x(rv) && !all_x(&out) {
        return Err(TransformError::Postcondition(
            "x-monotonicity was lost".into(),
        ));
    }
    require_exact(&out, g_sub)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridEdge;
    use crate::representation::{validate, GridRepresentation};

    fn rep(paths: &[&[(i64, i64)]]) -> GridRepresentation {
        GridRepresentation::with_paths(
            Mode::ProperVpg,
            paths
                .iter()
                .enumerate()
                .map(|(v, c)| (v, GridPath::open(c.iter().copied()).unwrap())),
        )
    }

    #[test]
    fn empty_subgraph_only_doubles() {
        let rv = rep(&[&[(0, 1), (2, 1)], &[(1, 0), (1, 2)]]);
        let out = bump_transform(&rv, &Graph::with_vertices(2)).unwrap();
        assert_eq!(
            out.paths[&0].corners(),
            &[GridPoint::new(0, 2), GridPoint::new(4, 2)]
        );
        assert_eq!(
            out.paths[&1].corners(),
            &[GridPoint::new(2, 0), GridPoint::new(2, 4)]
        );
        assert_eq!(out.induced_graph().edge_count(), 0);
    }

    #[test]
    fn plus_crossing_shares_the_vertical_edge() {
        let rv = rep(&[&[(0, 1), (2, 1)], &[(1, 0), (1, 2)]]);
        let out = bump_transform(&rv, &Graph::complete(2)).unwrap();
        let shared: Vec<GridEdge> = out.paths[&0]
            .edge_set()
            .intersection(&out.paths[&1].edge_set())
            .copied()
            .collect();
        assert_eq!(shared, vec![GridEdge::upward(GridPoint::new(2, 2))]);
        assert_eq!(
            out.paths[&0].corners(),
            &[(0, 2), (2, 2), (2, 3), (3, 3), (3, 2), (4, 2)].map(GridPoint::from)
        );
        assert!(validate(&out, &Graph::complete(2)).unwrap().is_exact());
    }

    #[test]
    fn reversed_rightward_path_gets_the_same_bump() {
        let rv = rep(&[&[(2, 1), (0, 1)], &[(1, 2), (1, 0)]]);
        let out = bump_transform(&rv, &Graph::complete(2)).unwrap();
        assert_eq!(
            out.paths[&0].edge_set(),
            GridPath::open([(0, 2), (2, 2), (2, 3), (3, 3), (3, 2), (4, 2)])
                .unwrap()
                .edge_set()
        );
    }

    #[test]
    fn rejects_bad_input() {
        let overlap = rep(&[&[(0, 0), (2, 0)], &[(1, 0), (3, 0)]]);
        assert!(matches!(
            bump_transform(&overlap, &Graph::with_vertices(2)),
            Err(TransformError::NotProper(_))
        ));
        let apart = rep(&[&[(0, 0), (1, 0)], &[(3, 0), (3, 1)]]);
        assert_eq!(
            bump_transform(&apart, &Graph::complete(2)),
            Err(TransformError::NotSubgraph(0, 1))
        );
    }

    #[test]
    fn schedules_commute() {
        // Three horizontal paths crossed by two vertical ones.
        let rv = rep(&[
            &[(0, 1), (4, 1)],
            &[(0, 2), (4, 2)],
            &[(0, 3), (4, 3)],
            &[(1, 0), (1, 4)],
            &[(3, 0), (3, 4)],
        ]);
        let g = Graph::from_edges(5, [(0, 3), (1, 4), (2, 3), (2, 4), (0, 4)]).unwrap();
        let forward = bump_transform(&rv, &g).unwrap();
        let mut order: Vec<Edge> = g.edges().collect();
        order.reverse();
        let backward = bump_transform_scheduled(&rv, &g, &order).unwrap();
        assert_eq!(forward, backward);
        assert_eq!(
            bump_transform_scheduled(&rv, &g, &order[1..]),
            Err(TransformError::BadSchedule)
        );
    }
}
