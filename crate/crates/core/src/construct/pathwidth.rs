use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{Graph, VertexId};
use crate::grid::{GridPath, GridPoint};
use crate::interval::{
    clique_number, components, induced_interval_graph, normalize, IntervalRepresentation,
};
use crate::representation::{induced_graph_vpg, is_proper_vpg, GridRepresentation, Mode};
use crate::transform::xyplus_transform;

use super::ConstructError;

/// The farthest-reaching induced path of a connected interval representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarthestPath {
    pub path: Vec<VertexId>,
    /// `candidates[i]` holds every `v` with `l(a_i) < l(v) < r(a_i) < r(v)`;
    /// the last set is empty.
    pub candidates: Vec<BTreeSet<VertexId>>,
}

impl FarthestPath {
    /// Induced path from the leftmost to the rightmost interval, each step
    /// taking the candidate reaching farthest right.
    pub fn check(&self, ir: &IntervalRepresentation) -> Result<(), String> {
        let iv = |v: VertexId| ir.intervals[&v];
        let p = &self.path;
        let min_l = ir.intervals.values().map(|i| i.left).min().unwrap();
        let max_r = ir.intervals.values().map(|i| i.right).max().unwrap();
        if iv(p[0]).left != min_l {
            return Err(format!("a_1 = {} does not start leftmost", p[0]));
        }
        if iv(*p.last().unwrap()).right != max_r {
            return Err(format!(
                "a_p = {} does not end rightmost",
                p.last().unwrap()
            ));
        }
        for w in p.windows(2) {
            if !iv(w[0]).intersects(&iv(w[1])) {
                return Err(format!("{} and {} do not intersect", w[0], w[1]));
            }
        }
        for w in p.windows(3) {
            if iv(w[0]).right >= iv(w[2]).left {
                return Err(format!("{} and {} intersect; path not induced", w[0], w[2]));
            }
        }
        for (j, set) in self.candidates.iter().enumerate() {
            if let Some(&next) = p.get(j + 1) {
                if let Some(&v) = set.iter().find(|&&v| iv(v).right > iv(next).right) {
                    return Err(format!("candidate {v} reaches beyond a_{}", j + 2));
                }
            } else if !set.is_empty() {
                return Err("path stopped with candidates left".into());
            }
        }
        Ok(())
    }
}

/// Farthest-reaching path of a normalised, connected representation.
pub fn farthest_path(ir: &IntervalRepresentation) -> Result<FarthestPath, ConstructError> {
    if ir.is_empty() {
        return Err(ConstructError::Empty);
    }
    if !ir.is_normalized() {
        return Err(ConstructError::NotNormalized);
    }
    if components(ir).len() != 1 {
        return Err(ConstructError::Disconnected);
    }
    let fp = farthest_path_unchecked(ir);
    fp.check(ir).map_err(ConstructError::Postcondition)?;
    Ok(fp)
}

/// Endpoints must be distinct so argmin and argmax are unique.
fn farthest_path_unchecked(ir: &IntervalRepresentation) -> FarthestPath {
    let mut a = *ir.intervals.iter().min_by_key(|(_, i)| i.left).unwrap().0;
    let mut path = vec![a];
    let mut candidates = Vec::new();
    loop {
        let cur = ir.intervals[&a];
        let set: BTreeSet<VertexId> = ir
            .intervals
            .iter()
            .filter(|(_, i)| cur.left < i.left && i.left < cur.right && cur.right < i.right)
            .map(|(&v, _)| v)
            .collect();
        let next = set.iter().copied().max_by_key(|v| ir.intervals[v].right);
        candidates.push(set);
        match next {
            Some(v) => {
                a = v;
                path.push(v);
            }
            None => break,
        }
    }
    FarthestPath { path, candidates }
}

/// Where the construction guarantees each vertex-path to reach.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Anchor {
    /// Horizontal segment `[2l(v), 2r(v)] x {y}` with `y < 0`.
    pub horizontal_y: i64,
    pub left: i64,
    pub right: i64,
    /// A vertical segment at `x = 2r(v)` covers `y` in `[-1, 1]`.
    pub vertical_x: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathwidthVpgResult {
    pub representation: GridRepresentation,
    /// Clique number minus one.
    pub k: usize,
    pub anchors: BTreeMap<VertexId, Anchor>,
    /// Farthest paths removed at each depth, outermost first.
    pub levels: Vec<Vec<Vec<VertexId>>>,
}

/// Proper xy+-monotone VPG-representation of a supergraph of the interval
/// graph of `ir`, with rows `[-2k-2, 2k+1]` where `k = clique_number - 1`.
///
/// Components are handled side by side. At depth `k >= 1` the farthest path
/// of each component is laid out around the x-axis after the recursive
/// representation of the rest has moved two rows outward on both sides.
pub fn pathwidth_vpg(ir: &IntervalRepresentation) -> Result<PathwidthVpgResult, ConstructError> {
    if ir.is_empty() {
        return Err(ConstructError::Empty);
    }
    if !ir.is_normalized() {
        return Err(ConstructError::NotNormalized);
    }
    let k = clique_number(ir) - 1;
    let mut levels = Vec::new();
    let corners = build(ir, k, &mut levels);
    let representation = GridRepresentation::with_paths(
        Mode::ProperVpg,
        corners
            .into_iter()
            .map(|(v, c)| (v, GridPath::new(c, false).unwrap().simplified())),
    );
    let anchors = ir
        .intervals
        .iter()
        .map(|(&v, i)| {
            let y = horizontal_row(&representation.paths[&v], 2 * i.left, 2 * i.right);
            (
                v,
                Anchor {
                    horizontal_y: y.unwrap_or(0),
                    left: 2 * i.left,
                    right: 2 * i.right,
                    vertical_x: 2 * i.right,
                },
            )
        })
        .collect();
    let result = PathwidthVpgResult {
        representation,
        k,
        anchors,
        levels,
    };
    structural_conditions(&result, ir).map_err(ConstructError::Postcondition)?;
    let cert = is_proper_vpg(&result.representation);
    if let Some(v) = cert.violation {
        return Err(ConstructError::Postcondition(format!("not proper: {v}")));
    }
    if !induced_interval_graph(ir)
        .is_spanning_subgraph_of(&induced_graph_vpg(&result.representation))
    {
        return Err(ConstructError::Postcondition(
            "an interval edge is not represented".into(),
        ));
    }
    Ok(result)
}

fn build(
    ir: &IntervalRepresentation,
    k: usize,
    levels: &mut Vec<Vec<Vec<VertexId>>>,
) -> BTreeMap<VertexId, Vec<GridPoint>> {
    if ir.is_empty() {
        return BTreeMap::new();
    }
    if k == 0 {
        debug_assert!(clique_number(ir) <= 1);
        return ir
            .intervals
            .iter()
            .map(|(&v, i)| {
                let (l, r) = (2 * i.left, 2 * i.right);
                (v, [(l, -1), (r, -1), (r, 1)].map(GridPoint::from).to_vec())
            })
            .collect();
    }

    let paths: Vec<Vec<VertexId>> = components(ir)
        .iter()
        .map(|c| farthest_path_unchecked(c).path)
        .collect();
    let on_path: BTreeSet<VertexId> = paths.iter().flatten().copied().collect();
    levels.push(paths.clone());
    let mut out = build(&ir.without(&on_path), k - 1, levels);
    for corners in out.values_mut() {
        for p in corners.iter_mut() {
            debug_assert!(p.y != 0);
            p.y += 2 * p.y.signum();
        }
    }

    let bottom = -2 * k as i64 - 2;
    for path in paths {
        for (i, &a) in path.iter().enumerate() {
            let iv = ir.intervals[&a];
            let (l, r) = (2 * iv.left, 2 * iv.right);
            // `i` is 0-based: even `i` is an odd position.
            let y = if i % 2 == 0 { 1 } else { 2 };
            let mut corners = vec![(l, bottom), (l, -y), (r, -y), (r, y)];
            if let Some(&next) = path.get(i + 1) {
                corners.push((2 * ir.intervals[&next].right + 1, y));
            }
            out.insert(a, corners.into_iter().map(GridPoint::from).collect());
        }
    }
    out
}

/// Row of a horizontal segment of `path` spanning exactly `[left, right]`
/// below the x-axis.
fn horizontal_row(path: &GridPath, left: i64, right: i64) -> Option<i64> {
    path.segments()
        .find(|(a, b)| a.y == b.y && a.y < 0 && a.x.min(b.x) == left && a.x.max(b.x) == right)
        .map(|(a, _)| a.y)
}

/// The three structural conditions of the recursive construction:
/// (1) all paths lie in `[2 min l, 2 max r + 1] x [-2k-2, 2k+1]`;
/// (2) `path(v)` has a horizontal segment `[2l(v), 2r(v)]` at negative `y`;
/// (3) `path(v)` has a vertical segment containing `{2r(v)} x [-1, 1]`.
pub fn structural_conditions(
    result: &PathwidthVpgResult,
    ir: &IntervalRepresentation,
) -> Result<(), String> {
    let k = result.k as i64;
    let min_l = ir.intervals.values().map(|i| i.left).min().unwrap_or(0);
    let max_r = ir.intervals.values().map(|i| i.right).max().unwrap_or(0);
    for (&v, path) in &result.representation.paths {
        let iv = ir.intervals[&v];
        for p in path.corners() {
            if p.x < 2 * min_l || p.x > 2 * max_r + 1 || p.y < -2 * k - 2 || p.y > 2 * k + 1 {
                return Err(format!("vertex {v}: corner {p} outside the box"));
            }
        }
        if horizontal_row(path, 2 * iv.left, 2 * iv.right).is_none() {
            return Err(format!("vertex {v}: no anchor horizontal"));
        }
        let x = 2 * iv.right;
        let vertical = path
            .segments()
            .any(|(a, b)| a.x == x && b.x == x && a.y.min(b.y) <= -1 && a.y.max(b.y) >= 1);
        if !vertical {
            return Err(format!(
                "vertex {v}: no vertical through [-1, 1] at x = {x}"
            ));
        }
    }
    Ok(())
}

/// xy+-monotone EPG-representation of `g` from an interval representation of
/// a supergraph on the same vertex ids; height at most `8k + 8`.
pub fn pathwidth_epg(
    g: &Graph,
    ir: &IntervalRepresentation,
) -> Result<GridRepresentation, ConstructError> {
    let ids: BTreeSet<VertexId> = ir.vertices().collect();
    if !g.vertices().eq(ids.iter().copied()) {
        return Err(ConstructError::VertexMismatch);
    }
    if g.vertex_count() == 0 {
        return Ok(GridRepresentation::new(Mode::Epg));
    }
    let ir = normalize(ir)?;
    let h = induced_interval_graph(&ir);
    if let Some((u, v)) = g.edges().find(|&(u, v)| !h.has_edge(u, v)) {
        return Err(ConstructError::NotSubgraph(u, v));
    }
    let vpg = pathwidth_vpg(&ir)?;
    let out = xyplus_transform(&vpg.representation, g)?;
    let height = out.bounding_box().unwrap().height;
    if height > 8 * vpg.k as u64 + 8 {
        return Err(ConstructError::Postcondition(format!(
            "height {height} exceeds 8k + 8 for k = {}",
            vpg.k
        )));
    }
    Ok(out.normalized())
}
