//! Tracing an orthogonal drawing into closed or open EPG paths of a minor.
//!
//! Grid-point `p` of the drawing becomes the unit cell with lower-left corner
//! `2p`. A route becomes a ribbon of unit cells alternating between point
//! cells and corridor cells; the two boundary walls of the ribbon are only
//! ever used by the path of the edge's tail.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{edge, orient_with_out_edges, Edge, Graph, MinorRecipe, Orientation, VertexId};
use crate::grid::{GridEdge, GridPath, GridPoint};
use crate::representation::{GridRepresentation, Mode};

use super::{path_from_points, require_exact, require_fits, TransformError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrawingError {
    #[error("vertex {vertex} has degree {degree}; drawings need degree at most 4")]
    DegreeTooLarge { vertex: VertexId, degree: usize },
    #[error("vertex {0} has no position")]
    MissingPosition(VertexId),
    #[error("position given for vertex {0}, which is not in the graph")]
    ExtraPosition(VertexId),
    #[error("vertices {0} and {1} share position {2}")]
    SharedPosition(VertexId, VertexId, GridPoint),
    #[error("edge ({0}, {1}) has no route")]
    MissingRoute(VertexId, VertexId),
    #[error("route given for ({0}, {1}), which is not an edge of the graph")]
    ExtraRoute(VertexId, VertexId),
    #[error("route of ({0}, {1}) does not join the positions of its endpoints")]
    BadEndpoints(VertexId, VertexId),
    #[error("route of ({0}, {1}) is closed or revisits a grid-point")]
    NotSimple(VertexId, VertexId),
    #[error("routes of {0:?} and {1:?} share grid-edge {2}")]
    SharedEdge(Edge, Edge, GridEdge),
    #[error("routes of {0:?} and {1:?} meet at {2} without crossing")]
    NotACrossing(Edge, Edge, GridPoint),
    #[error("route of {0:?} passes through the position of vertex {1}")]
    ThroughVertex(Edge, VertexId),
}

/// Lattice positions for vertices and axis-aligned routes for edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrthogonalDrawing {
    pub positions: BTreeMap<VertexId, GridPoint>,
    /// Keyed by normalised edge; a route may run in either direction.
    pub routes: BTreeMap<Edge, GridPath>,
}

impl OrthogonalDrawing {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn place(&mut self, v: VertexId, p: impl Into<GridPoint>) {
        self.positions.insert(v, p.into());
    }

    pub fn route(&mut self, u: VertexId, v: VertexId, path: GridPath) {
        self.routes.insert(edge(u, v), path);
    }

    /// Unit-step points of the route of `{from, to}`, oriented from `from`.
    fn points_from(&self, from: VertexId, to: VertexId) -> Vec<GridPoint> {
        let mut pts = self.routes[&edge(from, to)].points();
        if pts[0] != self.positions[&from] {
            pts.reverse();
        }
        pts
    }

    /// Box over positions and route corners.
    pub fn bounding_box(&self) -> Option<crate::grid::BoundingBox> {
        let pts: Vec<GridPath> = self
            .positions
            .values()
            .map(|&p| GridPath::point(p))
            .chain(self.routes.values().cloned())
            .collect();
        crate::grid::bounding_box(&pts).ok()
    }
}

/// Side of a vertex cell, in counter-clockwise order from the bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Port {
    Down,
    Right,
    Up,
    Left,
}

impl Port {
    const ALL: [Port; 4] = [Port::Down, Port::Right, Port::Up, Port::Left];

    fn of_step(a: GridPoint, b: GridPoint) -> Port {
        match (b.x - a.x, b.y - a.y) {
            (0, -1) => Port::Down,
            (1, 0) => Port::Right,
            (0, 1) => Port::Up,
            (-1, 0) => Port::Left,
            _ => unreachable!("unit step"),
        }
    }
}

/// Checks that `d` is an orthogonal drawing of `g`.
pub fn check_drawing(d: &OrthogonalDrawing, g: &Graph) -> Result<(), DrawingError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) > 4) {
        return Err(DrawingError::DegreeTooLarge {
            vertex: v,
            degree: g.degree(v),
        });
    }
    if let Some(v) = g.vertices().find(|v| !d.positions.contains_key(v)) {
        return Err(DrawingError::MissingPosition(v));
    }
    if let Some(&v) = d.positions.keys().find(|&&v| !g.contains_vertex(v)) {
        return Err(DrawingError::ExtraPosition(v));
    }
    let mut at: BTreeMap<GridPoint, VertexId> = BTreeMap::new();
    for (&v, &p) in &d.positions {
        if let Some(&u) = at.get(&p) {
            return Err(DrawingError::SharedPosition(u, v, p));
        }
        at.insert(p, v);
    }
    if let Some((u, v)) = g.edges().find(|e| !d.routes.contains_key(e)) {
        return Err(DrawingError::MissingRoute(u, v));
    }
    if let Some(&(u, v)) = d.routes.keys().find(|&&(u, v)| !g.has_edge(u, v)) {
        return Err(DrawingError::ExtraRoute(u, v));
    }

    let mut edge_owner: BTreeMap<GridEdge, Edge> = BTreeMap::new();
    let mut interior: BTreeMap<GridPoint, (Edge, Shape)> = BTreeMap::new();
    for (&e, route) in &d.routes {
        let (u, v) = e;
        let (pu, pv) = (d.positions[&u], d.positions[&v]);
        let joins =
            (route.start(), route.end()) == (pu, pv) || (route.start(), route.end()) == (pv, pu);
        if route.is_closed() || !joins {
            return Err(DrawingError::BadEndpoints(u, v));
        }
        let pts = route.points();
        if pts.iter().collect::<BTreeSet<_>>().len() != pts.len() {
            return Err(DrawingError::NotSimple(u, v));
        }
        for ge in route.unit_edges() {
            if let Some(other) = edge_owner.insert(ge, e) {
                return Err(DrawingError::SharedEdge(other, e, ge));
            }
        }
        for w in pts.windows(3) {
            let p = w[1];
            if let Some(&x) = at.get(&p) {
                return Err(DrawingError::ThroughVertex(e, x));
            }
            let shape = if w[0].y == w[2].y {
                Shape::Horizontal
            } else if w[0].x == w[2].x {
                Shape::Vertical
            } else {
                Shape::Bend
            };
            if let Some((other, other_shape)) = interior.insert(p, (e, shape)) {
                let crossing = matches!(
                    (shape, other_shape),
                    (Shape::Horizontal, Shape::Vertical) | (Shape::Vertical, Shape::Horizontal)
                );
                if !crossing {
                    return Err(DrawingError::NotACrossing(other, e, p));
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Horizontal,
    Vertical,
    Bend,
}

type Vec2 = (i64, i64);

fn left_of(d: Vec2) -> Vec2 {
    (-d.1, d.0)
}

fn right_of(d: Vec2) -> Vec2 {
    (d.1, -d.0)
}

fn add(a: Vec2, b: Vec2) -> Vec2 {
    (a.0 + b.0, a.1 + b.1)
}

fn sub(a: Vec2, b: Vec2) -> Vec2 {
    (a.0 - b.0, a.1 - b.1)
}

/// Lower-left corners of the ribbon cells of a route, from the first vertex
/// cell to the last.
fn ribbon(route: &[GridPoint]) -> Vec<Vec2> {
    let mut cells = vec![(2 * route[0].x, 2 * route[0].y)];
    for w in route.windows(2) {
        let (a, b) = (w[0], w[1]);
        let corridor = if a.y == b.y {
            (2 * a.x.min(b.x) + 1, 2 * a.y)
        } else {
            (2 * a.x, 2 * a.y.min(b.y) + 1)
        };
        cells.push(corridor);
        cells.push((2 * b.x, 2 * b.y));
    }
    cells
}

/// One boundary wall of a ribbon, from the near side of the first cell to the
/// near side of the last. `side` turns a direction towards the wall.
///
/// Coordinates are doubled internally so cell centres are integral.
fn wall(cells: &[Vec2], side: fn(Vec2) -> Vec2) -> Vec<GridPoint> {
    let mut pts: Vec<Vec2> = Vec::new();
    for t in 1..cells.len() - 1 {
        let d_in = sub(cells[t], cells[t - 1]);
        let d_out = sub(cells[t + 1], cells[t]);
        let centre = (2 * cells[t].0 + 1, 2 * cells[t].1 + 1);
        pts.push(add(sub(centre, d_in), side(d_in)));
        if d_out == sub((0, 0), side(d_in)) {
            // Turning away from the wall: it wraps the far corner.
            pts.push(add(add(centre, d_in), side(d_in)));
        }
        pts.push(add(add(centre, d_out), side(d_out)));
    }
    pts.dedup();
    pts.into_iter()
        .map(|(x, y)| GridPoint::new(x / 2, y / 2))
        .collect()
}

/// Corners of the cell of `p`, counter-clockwise from the lower-left, and the
/// side facing each port as a pair of corner indices.
fn square(p: GridPoint) -> [GridPoint; 4] {
    let (x, y) = (2 * p.x, 2 * p.y);
    [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)].map(GridPoint::from)
}

fn side(p: GridPoint, port: Port) -> (GridPoint, GridPoint) {
    let c = square(p);
    let i = port as usize;
    (c[i], c[(i + 1) % 4])
}

/// The balloon along one out-route: right wall to the head's cell, the head's
/// facing side, then the left wall back.
struct Balloon {
    points: Vec<GridPoint>,
    shared: GridEdge,
    first_wall_edge: GridEdge,
}

fn balloon(route: &[GridPoint]) -> Balloon {
    let cells = ribbon(route);
    let right = wall(&cells, right_of);
    let mut left = wall(&cells, left_of);
    let shared = GridEdge::new(*right.last().unwrap(), *left.last().unwrap())
        .expect("walls end on adjacent corners");
    let first_wall_edge = GridEdge::new(right[0], right[1]).expect("corridor side");
    left.reverse();
    let mut points = right;
    points.extend(left);
    Balloon {
        points,
        shared,
        first_wall_edge,
    }
}

/// Removes the unit edge `{from, to}` from a closed point cycle and returns
/// the remaining open walk from `from` to `to`.
fn cut(cycle: &[GridPoint], from: GridPoint, to: GridPoint) -> Vec<GridPoint> {
    let n = cycle.len();
    let find = |pts: &[GridPoint]| (0..n).find(|&i| pts[i] == to && pts[(i + 1) % n] == from);
    let mut pts = cycle.to_vec();
    let i = match find(&pts) {
        Some(i) => i,
        None => {
            pts.reverse();
            find(&pts).expect("edge lies on the cycle")
        }
    };
    pts.rotate_left((i + 1) % n);
    pts
}

/// EPG-representation of the minor `apply_minor(g, r)` traced from an
/// orthogonal drawing of `g`.
///
/// Every vertex `v` starts as the boundary of its cell `□_v`. Edges are
/// oriented so every degree-4 vertex has an out-edge; for `v -> w`, the side
/// of `□_v` facing the route is replaced by a balloon along both walls of the
/// route's ribbon that closes over one side of `□_w`, the only grid-edge
/// shared by `v` and `w`. A contraction removes that shared grid-edge and joins
/// the two cycles. With `open_paths`, every cycle loses one unshared edge.
/// A `w x h` drawing yields at most `2w x 2h`.
pub fn orth_to_epg(
    d: &OrthogonalDrawing,
    g: &Graph,
    r: &MinorRecipe,
    open_paths: bool,
) -> Result<GridRepresentation, TransformError> {
    check_drawing(d, g)?;
    let outcome = r.resolve(g)?;
    let witnesses: BTreeSet<Edge> = outcome.witnesses.iter().map(|&(a, b)| edge(a, b)).collect();

    // Internal edges of a contracted group other than the witnesses would
    // leave repeated grid-edges after merging; dropping them keeps the minor.
    let mut h = r.after_deletions(g)?;
    let internal: Vec<Edge> = h
        .edges()
        .filter(|&(a, b)| {
            outcome.name_map[&a] == outcome.name_map[&b] && !witnesses.contains(&(a, b))
        })
        .collect();
    for (a, b) in internal {
        h.remove_edge(a, b)?;
    }

    let mut orientation = Orientation::new();
    for comp in h.components() {
        let sub = h.induced_subgraph(&comp.into_iter().collect());
        orientation.extend(orient_with_out_edges(&sub)?);
    }

    let mut ports: BTreeMap<VertexId, BTreeMap<Port, VertexId>> = BTreeMap::new();
    for (u, v) in h.edges() {
        for (a, b) in [(u, v), (v, u)] {
            let pts = d.points_from(a, b);
            ports
                .entry(a)
                .or_default()
                .insert(Port::of_step(pts[0], pts[1]), b);
        }
    }

    let mut shared: BTreeMap<Edge, GridEdge> = BTreeMap::new();
    let mut first_wall: BTreeMap<VertexId, Vec<GridEdge>> = BTreeMap::new();
    let mut cycles: BTreeMap<VertexId, Vec<GridPoint>> = BTreeMap::new();
    for v in h.vertices() {
        let p = d.positions[&v];
        let mut pts = Vec::new();
        for port in Port::ALL {
            let (s, e) = side(p, port);
            pts.push(s);
            let head = ports.get(&v).and_then(|m| m.get(&port)).copied();
            if let Some(w) = head.filter(|&w| orientation.arc(v, w) == Some((v, w))) {
                let b = balloon(&d.points_from(v, w));
                pts.extend(b.points);
                shared.insert(edge(v, w), b.shared);
                first_wall.entry(v).or_default().push(b.first_wall_edge);
            }
            pts.push(e);
        }
        pts.dedup();
        pts.pop();
        let path = path_from_points(pts, true)?;
        cycles.insert(v, path.points());
    }

    for (&(keep, absorb), &(a, b)) in r.contractions.iter().zip(&outcome.witnesses) {
        let e = shared[&edge(a, b)];
        let (p, q) = (e.low(), e.high());
        let u = cut(&cycles[&keep], q, p);
        let v = cycles.remove(&absorb).unwrap();
        let v = cut(&v, p, q);
        let mut merged = u;
        merged.extend_from_slice(&v[1..v.len() - 1]);
        cycles.insert(keep, merged);
    }

    let mut members: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for (&v, &rep) in &outcome.name_map {
        members.entry(rep).or_default().push(v);
    }

    let mut out = GridRepresentation::new(Mode::Epg);
    for (rep, cycle) in cycles {
        let path = if open_paths {
            let group = &members[&rep];
            let free_side = group.iter().find_map(|&v| {
                Port::ALL
                    .into_iter()
                    .find(|port| !ports.get(&v).is_some_and(|m| m.contains_key(port)))
                    .map(|port| side(d.positions[&v], port))
            });
            let (from, to) = match free_side {
                Some(s) => s,
                None => {
                    let e = group
                        .iter()
                        .find_map(|v| first_wall.get(v).and_then(|w| w.first()))
                        .expect("a degree-4 vertex has an out-edge");
                    (e.low(), e.high())
                }
            };
            path_from_points(cut(&cycle, from, to), false)?
        } else {
            path_from_points(cycle, true)?
        };
        out.insert(rep, path);
    }

    if let Some(bb) = d.bounding_box() {
        require_fits(&out, 2 * bb.width, 2 * bb.height)?;
    }
    require_exact(&out, &outcome.graph)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::apply_minor;
    use crate::representation::validate;

    type Route<'a> = (VertexId, VertexId, &'a [(i64, i64)]);

    fn drawing(positions: &[(i64, i64)], routes: &[Route]) -> OrthogonalDrawing {
        let mut d = OrthogonalDrawing::new();
        for (v, &p) in positions.iter().enumerate() {
            d.place(v, p);
        }
        for &(u, v, corners) in routes {
            d.route(u, v, GridPath::open(corners.iter().copied()).unwrap());
        }
        d
    }

    fn grid_drawing(rows: usize, cols: usize) -> (Graph, OrthogonalDrawing) {
        let g = Graph::grid(rows, cols);
        let mut d = OrthogonalDrawing::new();
        for v in g.vertices() {
            d.place(v, ((v % cols) as i64, (v / cols) as i64));
        }
        for (u, v) in g.edges() {
            d.route(
                u,
                v,
                GridPath::open([d.positions[&u], d.positions[&v]]).unwrap(),
            );
        }
        (g, d)
    }

    #[test]
    fn single_edge_shares_one_grid_edge() {
        let g = Graph::complete(2);
        let d = drawing(&[(0, 0), (1, 0)], &[(0, 1, &[(0, 0), (1, 0)])]);
        for open in [false, true] {
            let out = orth_to_epg(&d, &g, &MinorRecipe::default(), open).unwrap();
            let common: Vec<GridEdge> = out.paths[&0]
                .edge_set()
                .intersection(&out.paths[&1].edge_set())
                .copied()
                .collect();
            assert_eq!(common.len(), 1);
            assert!(out.paths.values().all(|p| p.is_closed() != open));
            assert!(out.bounding_box().unwrap().fits(4, 2));
        }
    }

    #[test]
    fn balloon_walls_follow_a_bent_route() {
        // Route right then up: the right wall wraps the bend cell's far corner.
        let b = balloon(&[(0, 0), (1, 0), (1, 1)].map(GridPoint::from));
        let expected = [
            (1, 0),
            (2, 0),
            (3, 0),
            (3, 1),
            (3, 2),
            (2, 2),
            (2, 1),
            (1, 1),
        ]
        .map(GridPoint::from);
        assert_eq!(b.points, expected);
        assert_eq!(
            b.shared,
            GridEdge::new((3, 2).into(), (2, 2).into()).unwrap()
        );
    }

    #[test]
    fn square_c4_with_opposite_contractions_gives_k2() {
        let g = Graph::cycle(4);
        let d = drawing(
            &[(0, 0), (1, 0), (1, 1), (0, 1)],
            &[
                (0, 1, &[(0, 0), (1, 0)]),
                (1, 2, &[(1, 0), (1, 1)]),
                (2, 3, &[(1, 1), (0, 1)]),
                (0, 3, &[(0, 0), (0, 1)]),
            ],
        );
        let r = MinorRecipe::default().contract(0, 1).contract(2, 3);
        for open in [false, true] {
            let out = orth_to_epg(&d, &g, &r, open).unwrap();
            assert_eq!(out.vertices().collect::<Vec<_>>(), vec![0, 2]);
            let report = validate(&out, &apply_minor(&g, &r).unwrap()).unwrap();
            assert!(report.is_exact());
        }
    }

    #[test]
    fn grid_graph_with_contraction() {
        let (g, d) = grid_drawing(3, 3);
        let r = MinorRecipe::default().contract(4, 5);
        for open in [false, true] {
            let out = orth_to_epg(&d, &g, &r, open).unwrap();
            assert_eq!(out.len(), 8);
            assert!(out.bounding_box().unwrap().fits(6, 6));
            assert!(validate(&out, &apply_minor(&g, &r).unwrap())
                .unwrap()
                .is_exact());
        }
    }

    #[test]
    fn degree_four_vertices_open_on_a_wall() {
        let (g, d) = grid_drawing(5, 5);
        let out = orth_to_epg(&d, &g, &MinorRecipe::default(), true).unwrap();
        assert!(out.paths.values().all(|p| !p.is_closed()));
        let r = MinorRecipe::default()
            .contract(12, 13)
            .contract(12, 7)
            .delete_vertex(0)
            .delete_edge(6, 11);
        let out = orth_to_epg(&d, &g, &r, true).unwrap();
        assert!(validate(&out, &apply_minor(&g, &r).unwrap())
            .unwrap()
            .is_exact());
    }

    #[test]
    fn crossing_routes() {
        // 0 and 1 joined below, 2 and 3 joined by a route crossing it.
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let d = drawing(
            &[(0, 1), (2, 1), (1, 0), (1, 2)],
            &[(0, 1, &[(0, 1), (2, 1)]), (2, 3, &[(1, 0), (1, 2)])],
        );
        let out = orth_to_epg(&d, &g, &MinorRecipe::default(), true).unwrap();
        assert_eq!(out.induced_graph(), g);
    }

    #[test]
    fn rejects_invalid_drawings() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let through = drawing(
            &[(0, 0), (2, 0), (1, 0)],
            &[
                (0, 1, &[(0, 0), (2, 0)]),
                (1, 2, &[(2, 0), (2, 1), (1, 1), (1, 0)]),
            ],
        );
        assert_eq!(
            check_drawing(&through, &g),
            Err(DrawingError::ThroughVertex((0, 1), 2))
        );

        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let touching = drawing(
            &[(0, 0), (2, 0), (1, 1), (3, 1)],
            &[
                (0, 1, &[(0, 0), (2, 0)]),
                (2, 3, &[(1, 1), (1, 0), (3, 0), (3, 1)]),
            ],
        );
        assert!(matches!(
            check_drawing(&touching, &g),
            Err(DrawingError::SharedEdge(..))
        ));

        let bend = drawing(
            &[(0, 0), (2, 0), (1, 2), (3, 1)],
            &[
                (0, 1, &[(0, 0), (2, 0)]),
                (2, 3, &[(1, 2), (1, 0), (3, 0), (3, 1)]),
            ],
        );
        assert!(check_drawing(&bend, &g).is_err());

        let corner = drawing(
            &[(0, 0), (1, 1), (2, 0), (1, -1)],
            &[
                (0, 1, &[(0, 0), (1, 0), (1, 1)]),
                (2, 3, &[(2, 0), (1, 0), (1, -1)]),
            ],
        );
        assert_eq!(
            check_drawing(&corner, &g),
            Err(DrawingError::NotACrossing(
                (0, 1),
                (2, 3),
                GridPoint::new(1, 0)
            ))
        );
        assert!(matches!(
            check_drawing(&OrthogonalDrawing::new(), &Graph::complete(1)),
            Err(DrawingError::MissingPosition(0))
        ));
    }
}
