//! Seeded generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use epg_core::graph::{Edge, Graph, MinorRecipe, VertexId};
use epg_core::grid::{GridPath, GridPoint};
use epg_core::interval::{normalize, IntervalRepresentation};
use epg_core::representation::{GridRepresentation, Mode};
use epg_core::transform::OrthogonalDrawing;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// Graphs.

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::with_vertices(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Every labelled graph on `0..n`, one per edge subset.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0..1u64 << pairs.len())
        .map(|mask| {
            Graph::from_edges(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap()
        })
        .collect()
}

/// Same vertices, each edge kept with probability `p`.
pub fn random_spanning_subgraph(rng: &mut impl Rng, g: &Graph, p: f64) -> Graph {
    let mut h = Graph::new();
    for v in g.vertices() {
        h.add_vertex(v);
    }
    for (u, v) in g.edges() {
        if rng.gen_bool(p) {
            h.add_edge(u, v).unwrap();
        }
    }
    h
}

// Proper VPG-representations.

/// Proper VPG-representation built from private lines.
///
/// Every vertex owns its rows and columns outright and bends only on them,
/// so two paths meet only where a horizontal of one passes strictly through
/// a vertical of the other: a plus-shaped crossing of exactly two paths.
/// `x_monotone` sorts each path's columns; `xy_plus` sorts rows too.
pub fn random_proper_vpg(
    rng: &mut impl Rng,
    n: usize,
    x_monotone: bool,
    xy_plus: bool,
) -> GridRepresentation {
    let turns: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=4)).collect();
    // Segments alternate, so `t` segments need at most t/2 + 1 lines each way.
    let lines = |t: &usize| t.div_ceil(2) + 1;
    let need_cols: usize = turns.iter().map(lines).sum();
    let need_rows = need_cols;
    let mut cols: Vec<i64> = (0..need_cols as i64).collect();
    let mut rows: Vec<i64> = (0..need_rows as i64).collect();
    cols.shuffle(rng);
    rows.shuffle(rng);

    let mut rep = GridRepresentation::new(Mode::ProperVpg);
    for (v, &t) in turns.iter().enumerate() {
        let mut my_cols: Vec<i64> = cols.drain(..lines(&t)).collect();
        let mut my_rows: Vec<i64> = rows.drain(..lines(&t)).collect();
        if x_monotone || xy_plus {
            my_cols.sort_unstable();
        }
        if xy_plus {
            my_rows.sort_unstable();
        }
        let (mut ci, mut ri) = (0, 0);
        let mut corners = vec![GridPoint::new(my_cols[0], my_rows[0])];
        let mut horizontal = rng.gen_bool(0.5);
        for _ in 0..t {
            let last = *corners.last().unwrap();
            let next = if horizontal && ci + 1 < my_cols.len() {
                ci += 1;
                GridPoint::new(my_cols[ci], last.y)
            } else if !horizontal && ri + 1 < my_rows.len() {
                ri += 1;
                GridPoint::new(last.x, my_rows[ri])
            } else {
                break;
            };
            corners.push(next);
            horizontal = !horizontal;
        }
        rep.insert(v, GridPath::new(corners, false).unwrap());
    }
    rep
}

// Interval representations.

/// Random interval representation on `0..n` with clique number at most
/// `k + 1`, endpoints the distinct values `1..=2n`. With `connected`, some
/// interval is open at every moment between the first start and last end.
pub fn random_intervals(
    rng: &mut impl Rng,
    n: usize,
    k: usize,
    connected: bool,
) -> IntervalRepresentation {
    let mut open: Vec<VertexId> = Vec::new();
    let mut next = 0;
    let mut pairs: BTreeMap<VertexId, (i64, i64)> = BTreeMap::new();
    for t in 1..=2 * n as i64 {
        let can_open = next < n && open.len() < k + 1;
        let can_close = !open.is_empty() && !(connected && open.len() == 1 && next < n);
        let do_open = can_open && (!can_close || rng.gen_bool(0.5));
        if do_open {
            pairs.insert(next, (t, 0));
            open.push(next);
            next += 1;
        } else {
            let i = rng.gen_range(0..open.len());
            let v = open.swap_remove(i);
            pairs.get_mut(&v).unwrap().1 = t;
        }
    }
    let ir = IntervalRepresentation::from_pairs(pairs);
    debug_assert_eq!(normalize(&ir).unwrap(), ir);
    ir
}

// Trails.

/// Random open trail. The step set is drawn first (staircase, x-monotone or
/// unrestricted) so every monotonicity class shows up.
pub fn random_trail(rng: &mut impl Rng, steps: usize) -> GridPath {
    let dirs: &[(i64, i64)] = match rng.gen_range(0..4) {
        0 => &[(1, 0), (0, 1)],
        1 => &[(1, 0), (0, 1), (0, -1)],
        2 => &[(1, 0), (0, -1)],
        _ => &[(1, 0), (-1, 0), (0, 1), (0, -1)],
    };
    let mut at = GridPoint::new(rng.gen_range(-5..5), rng.gen_range(-5..5));
    let mut points = vec![at];
    let mut used = BTreeSet::new();
    for _ in 0..steps {
        let options: Vec<GridPoint> = dirs
            .iter()
            .map(|&(dx, dy)| at.offset(dx, dy))
            .filter(|&q| !used.contains(&unit(at, q)))
            .collect();
        let Some(&q) = options.choose(rng) else { break };
        used.insert(unit(at, q));
        points.push(q);
        at = q;
    }
    if rng.gen_bool(0.5) {
        points.reverse();
    }
    GridPath::from_points(points, false).unwrap()
}

fn unit(a: GridPoint, b: GridPoint) -> (GridPoint, GridPoint) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Random representation of unconstrained trails in a small window.
pub fn random_trail_rep(rng: &mut impl Rng, n: usize, mode: Mode) -> GridRepresentation {
    let mut rep = GridRepresentation::new(mode);
    for v in 0..n {
        let steps = rng.gen_range(0..8);
        rep.insert(v, random_trail(rng, steps));
    }
    rep
}

// Oracles.

/// Unit-step points of a path, computed from its corners.
pub fn unit_points(path: &GridPath) -> Vec<GridPoint> {
    let c = path.corners();
    let mut out = vec![c[0]];
    let mut legs: Vec<(GridPoint, GridPoint)> = c.windows(2).map(|w| (w[0], w[1])).collect();
    if path.is_closed() {
        legs.push((c[c.len() - 1], c[0]));
    }
    for (a, b) in legs {
        let (dx, dy) = ((b.x - a.x).signum(), (b.y - a.y).signum());
        let mut p = a;
        while p != b {
            p = p.offset(dx, dy);
            out.push(p);
        }
    }
    out
}

pub fn unit_edges(path: &GridPath) -> BTreeSet<(GridPoint, GridPoint)> {
    unit_points(path)
        .windows(2)
        .map(|w| unit(w[0], w[1]))
        .collect()
}

/// EPG graph by intersecting unit-edge sets pairwise.
pub fn brute_epg_graph(rep: &GridRepresentation) -> Graph {
    let sets: Vec<(VertexId, BTreeSet<_>)> =
        rep.paths.iter().map(|(&v, p)| (v, unit_edges(p))).collect();
    brute_graph(&sets)
}

/// VPG graph by intersecting unit-point sets pairwise.
pub fn brute_vpg_graph(rep: &GridRepresentation) -> Graph {
    let sets: Vec<(VertexId, BTreeSet<GridPoint>)> = rep
        .paths
        .iter()
        .map(|(&v, p)| (v, unit_points(p).into_iter().collect()))
        .collect();
    brute_graph(&sets)
}

fn brute_graph<T: Ord>(sets: &[(VertexId, BTreeSet<T>)]) -> Graph {
    let mut g = Graph::new();
    for (v, _) in sets {
        g.add_vertex(*v);
    }
    for (i, (u, a)) in sets.iter().enumerate() {
        for (v, b) in &sets[i + 1..] {
            if !a.is_disjoint(b) {
                g.add_edge(*u, *v).unwrap();
            }
        }
    }
    g
}

/// Monotonicity by sweeping half-integer lines: a trail is x-monotone iff
/// every vertical line `x = i + 1/2` inside its x-range is crossed exactly
/// once; likewise for y. Returns `(x, xy, xy+)`.
pub fn sweep_monotone(path: &GridPath) -> (bool, bool, bool) {
    let pts = unit_points(path);
    let mut vertical_lines: BTreeMap<i64, usize> = BTreeMap::new();
    let mut horizontal_lines: BTreeMap<i64, usize> = BTreeMap::new();
    for w in pts.windows(2) {
        if w[0].y == w[1].y {
            *vertical_lines.entry(w[0].x.min(w[1].x)).or_default() += 1;
        } else {
            *horizontal_lines.entry(w[0].y.min(w[1].y)).or_default() += 1;
        }
    }
    let once = |lines: &BTreeMap<i64, usize>, lo: i64, hi: i64| {
        (lo..hi).all(|i| lines.get(&i) == Some(&1))
    };
    let xs = pts.iter().map(|p| p.x);
    let ys = pts.iter().map(|p| p.y);
    let x = once(
        &vertical_lines,
        xs.clone().min().unwrap(),
        xs.max().unwrap(),
    );
    let y = once(
        &horizontal_lines,
        ys.clone().min().unwrap(),
        ys.max().unwrap(),
    );
    let (s, e) = (pts[0], pts[pts.len() - 1]);
    let plus = x && y && (e.x - s.x) * (e.y - s.y) >= 0;
    (x, x && y, plus)
}

// Orthogonal drawings.

/// Positions `(c, r)` with straight unit routes.
pub fn grid_drawing(rows: usize, cols: usize) -> (Graph, OrthogonalDrawing) {
    let g = Graph::grid(rows, cols);
    let mut d = OrthogonalDrawing::new();
    for r in 0..rows {
        for c in 0..cols {
            d.place(r * cols + c, (c as i64, r as i64));
        }
    }
    route_straight(&g, &mut d);
    (g, d)
}

/// `C_8` around the boundary of a 3 x 3 block of lattice points.
pub fn c8_drawing() -> (Graph, OrthogonalDrawing) {
    let g = Graph::cycle(8);
    let mut d = OrthogonalDrawing::new();
    let ring = [
        (0, 0),
        (1, 0),
        (2, 0),
        (2, 1),
        (2, 2),
        (1, 2),
        (0, 2),
        (0, 1),
    ];
    for (v, p) in ring.into_iter().enumerate() {
        d.place(v, p);
    }
    route_straight(&g, &mut d);
    (g, d)
}

fn route_straight(g: &Graph, d: &mut OrthogonalDrawing) {
    for (u, v) in g.edges() {
        let path = GridPath::open([d.positions[&u], d.positions[&v]]).unwrap();
        d.route(u, v, path);
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Side {
    Left,
    Right,
    Down,
    Up,
}

/// Random 4-graph on `0..n` together with an orthogonal drawing of it.
///
/// Each vertex owns one row and one column; each route bends only on the
/// lines of its endpoints or on a private line of its own. A line carries
/// at most one route on each side of its owner, so routes never share a
/// grid-edge, never pass through a vertex, and meet only in true crossings.
/// Edges whose ports cannot be assigned are dropped from the graph.
pub fn random_drawn_4graph(rng: &mut impl Rng, n: usize, p: f64) -> (Graph, OrthogonalDrawing) {
    const GAP: i64 = 1000;
    let mut xs: Vec<i64> = (0..n as i64).map(|i| i * GAP).collect();
    let mut ys = xs.clone();
    xs.shuffle(rng);
    ys.shuffle(rng);
    let pos = |v: VertexId| (xs[v], ys[v]);

    let mut candidates: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    candidates.shuffle(rng);
    let mut used: BTreeSet<(VertexId, Side)> = BTreeSet::new();
    let mut taken_x: BTreeSet<i64> = xs.iter().copied().collect();
    let mut taken_y: BTreeSet<i64> = ys.iter().copied().collect();
    let mut routes: Vec<(Edge, Vec<(i64, i64)>)> = Vec::new();

    let toward = |from: i64, to: i64, lo: Side, hi: Side| if to > from { hi } else { lo };

    for (u, v) in candidates {
        if !rng.gen_bool(p) {
            continue;
        }
        let ((ux, uy), (vx, vy)) = (pos(u), pos(v));
        // (u port, v port, corners), private coordinate filled in below.
        let mut options: Vec<(Side, Side, u8)> = Vec::new();
        options.push((
            toward(ux, vx, Side::Left, Side::Right),
            toward(vy, uy, Side::Down, Side::Up),
            0,
        ));
        options.push((
            toward(uy, vy, Side::Down, Side::Up),
            toward(vx, ux, Side::Left, Side::Right),
            1,
        ));
        for su in [Side::Left, Side::Right] {
            for sv in [Side::Left, Side::Right] {
                options.push((su, sv, 2));
            }
        }
        for su in [Side::Down, Side::Up] {
            for sv in [Side::Down, Side::Up] {
                options.push((su, sv, 3));
            }
        }
        options.retain(|&(su, sv, kind)| {
            !used.contains(&(u, su))
                && !used.contains(&(v, sv))
                && private_range(kind, su, sv, (ux, uy), (vx, vy), n as i64 * GAP).is_some()
        });
        let Some(&(su, sv, kind)) = options.choose(rng) else {
            continue;
        };
        let corners = match kind {
            0 => vec![(ux, uy), (vx, uy), (vx, vy)],
            1 => vec![(ux, uy), (ux, vy), (vx, vy)],
            _ => {
                let (lo, hi) =
                    private_range(kind, su, sv, (ux, uy), (vx, vy), n as i64 * GAP).unwrap();
                let taken = if kind == 2 {
                    &mut taken_x
                } else {
                    &mut taken_y
                };
                let c = loop {
                    let c = rng.gen_range(lo + 1..hi);
                    if taken.insert(c) {
                        break c;
                    }
                };
                if kind == 2 {
                    vec![(ux, uy), (c, uy), (c, vy), (vx, vy)]
                } else {
                    vec![(ux, uy), (ux, c), (vx, c), (vx, vy)]
                }
            }
        };
        used.insert((u, su));
        used.insert((v, sv));
        routes.push(((u, v), corners));
    }

    // Compress coordinates to consecutive integers; order, hence sides, is kept.
    let rank = |set: &BTreeSet<i64>| -> BTreeMap<i64, i64> {
        set.iter()
            .enumerate()
            .map(|(i, &c)| (c, i as i64))
            .collect()
    };
    let (rx, ry) = (rank(&taken_x), rank(&taken_y));
    let mut g = Graph::with_vertices(n);
    let mut d = OrthogonalDrawing::new();
    for v in 0..n {
        d.place(v, (rx[&xs[v]], ry[&ys[v]]));
    }
    for ((u, v), corners) in routes {
        g.add_edge(u, v).unwrap();
        let path = GridPath::open(corners.into_iter().map(|(x, y)| (rx[&x], ry[&y]))).unwrap();
        d.route(u, v, path);
    }
    debug_assert!(g.max_degree() <= 4);
    (g, d)
}

/// Open range for the private line of a three-segment route, if the sides
/// are compatible.
fn private_range(
    kind: u8,
    su: Side,
    sv: Side,
    u: (i64, i64),
    v: (i64, i64),
    far: i64,
) -> Option<(i64, i64)> {
    let (a, b) = match kind {
        0 | 1 => return Some((0, 0)),
        2 => (u.0, v.0),
        _ => (u.1, v.1),
    };
    let high = |s: Side| matches!(s, Side::Right | Side::Up);
    let lo_u = if high(su) { a } else { -far };
    let hi_u = if high(su) { far * 2 } else { a };
    let lo_v = if high(sv) { b } else { -far };
    let hi_v = if high(sv) { far * 2 } else { b };
    let (lo, hi) = (lo_u.max(lo_v), hi_u.min(hi_v));
    (hi - lo >= 2).then_some((lo, hi))
}

/// Random minor recipe: a few deletions, then contractions of edges of the
/// current graph.
pub fn random_recipe(rng: &mut impl Rng, g: &Graph) -> MinorRecipe {
    let mut r = MinorRecipe::default();
    let mut h = g.clone();
    if rng.gen_bool(0.3) {
        if let Some(&(u, v)) = h.edges().collect::<Vec<_>>().choose(rng) {
            r = r.delete_edge(u, v);
            h.remove_edge(u, v).unwrap();
        }
    }
    if rng.gen_bool(0.2) && h.vertex_count() > 2 {
        let v = *h.vertices().collect::<Vec<_>>().choose(rng).unwrap();
        r = r.delete_vertex(v);
        h.remove_vertex(v).unwrap();
    }
    for _ in 0..rng.gen_range(0..=3) {
        let Some(&(u, v)) = h.edges().collect::<Vec<_>>().choose(rng) else {
            break;
        };
        let (keep, absorb) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
        r = r.contract(keep, absorb);
        let moved: Vec<VertexId> = h.neighbors(absorb).filter(|&w| w != keep).collect();
        h.remove_vertex(absorb).unwrap();
        for w in moved {
            if !h.has_edge(keep, w) {
                h.add_edge(keep, w).unwrap();
            }
        }
    }
    r
}
