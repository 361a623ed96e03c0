//! Interval representations, endpoint normalisation, sweeps and path
//! decompositions.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("interval of vertex {vertex} is [{left}, {right}]; need left < right")]
    Degenerate {
        vertex: VertexId,
        left: i64,
        right: i64,
    },
    #[error("interval representation is not normalised")]
    NotNormalized,
    #[error("vertex {vertex} appears in bags {first} and {later} but not in bag {gap}")]
    NonContiguous {
        vertex: VertexId,
        first: usize,
        gap: usize,
        later: usize,
    },
    #[error("interval representation is not connected")]
    Disconnected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Interval {
    pub left: i64,
    pub right: i64,
}

impl Interval {
    pub const fn new(left: i64, right: i64) -> Self {
        Self { left, right }
    }

    /// Closed-interval intersection.
    pub fn intersects(&self, other: &Interval) -> bool {
        self.left.max(other.left) <= self.right.min(other.right)
    }
}

/// Sweep event order: position first, left ends before right ends (so
/// touching closed intervals overlap), then vertex id.
fn events(ir: &IntervalRepresentation) -> Vec<(i64, bool, VertexId)> {
    let mut ev: Vec<(i64, bool, VertexId)> = ir
        .intervals
        .iter()
        .flat_map(|(&v, iv)| [(iv.left, false, v), (iv.right, true, v)])
        .collect();
    ev.sort_unstable();
    ev
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntervalRepresentation {
    pub intervals: BTreeMap<VertexId, Interval>,
}

impl IntervalRepresentation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (VertexId, (i64, i64))>) -> Self {
        Self {
            intervals: pairs
                .into_iter()
                .map(|(v, (l, r))| (v, Interval::new(l, r)))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn get(&self, v: VertexId) -> Option<Interval> {
        self.intervals.get(&v).copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.intervals.keys().copied()
    }

    /// All `2n` endpoints are distinct, lie in `1..=2n`, and `left < right`.
    pub fn is_normalized(&self) -> bool {
        let n = self.intervals.len() as i64;
        let mut seen = BTreeSet::new();
        self.intervals.values().all(|iv| {
            iv.left < iv.right
                && [iv.left, iv.right]
                    .iter()
                    .all(|&x| (1..=2 * n).contains(&x) && seen.insert(x))
        })
    }

    /// Representation restricted to `keep`, endpoints untouched.
    pub fn restricted(&self, keep: &BTreeSet<VertexId>) -> Self {
        Self {
            intervals: self
                .intervals
                .iter()
                .filter(|(v, _)| keep.contains(v))
                .map(|(&v, &iv)| (v, iv))
                .collect(),
        }
    }

    pub fn without(&self, remove: &BTreeSet<VertexId>) -> Self {
        Self {
            intervals: self
                .intervals
                .iter()
                .filter(|(v, _)| !remove.contains(v))
                .map(|(&v, &iv)| (v, iv))
                .collect(),
        }
    }
}

/// Remaps endpoints order-isomorphically onto `1..=2n`.
///
/// Ties are broken by (value, left-before-right, vertex id), so intervals that
/// touch keep intersecting.
pub fn normalize(ir: &IntervalRepresentation) -> Result<IntervalRepresentation, IntervalError> {
    if let Some((&vertex, iv)) = ir.intervals.iter().find(|(_, iv)| iv.left >= iv.right) {
        return Err(IntervalError::Degenerate {
            vertex,
            left: iv.left,
            right: iv.right,
        });
    }
    let mut out = ir.clone();
    for (rank, (_, is_right, v)) in events(ir).into_iter().enumerate() {
        let iv = out.intervals.get_mut(&v).unwrap();
        let pos = rank as i64 + 1;
        if is_right {
            iv.right = pos;
        } else {
            iv.left = pos;
        }
    }
    Ok(out)
}

/// Edge iff the closed intervals intersect.
pub fn induced_interval_graph(ir: &IntervalRepresentation) -> Graph {
    let mut g = Graph::new();
    for v in ir.vertices() {
        g.add_vertex(v);
    }
    let mut active: BTreeSet<VertexId> = BTreeSet::new();
    for (_, is_right, v) in events(ir) {
        if is_right {
            active.remove(&v);
        } else {
            for &w in &active {
                g.add_edge(w, v).unwrap();
            }
            active.insert(v);
        }
    }
    g
}

/// Largest number of intervals sharing a point.
pub fn clique_number(ir: &IntervalRepresentation) -> usize {
    let mut depth = 0usize;
    let mut best = 0;
    for (_, is_right, _) in events(ir) {
        if is_right {
            depth -= 1;
        } else {
            depth += 1;
            best = best.max(depth);
        }
    }
    best
}

/// Left-to-right first-fit colouring; uses exactly `clique_number` colours.
pub fn greedy_colour(ir: &IntervalRepresentation) -> BTreeMap<VertexId, usize> {
    let mut colour = BTreeMap::new();
    let mut free: BTreeSet<usize> = BTreeSet::new();
    let mut next_new = 0;
    for (_, is_right, v) in events(ir) {
        if is_right {
            free.insert(colour[&v]);
        } else {
            let c = free.pop_first().unwrap_or_else(|| {
                next_new += 1;
                next_new - 1
            });
            colour.insert(v, c);
        }
    }
    colour
}

/// Connected components, ordered left to right. Their x-ranges are disjoint.
pub fn components(ir: &IntervalRepresentation) -> Vec<IntervalRepresentation> {
    let mut out: Vec<IntervalRepresentation> = Vec::new();
    let mut depth = 0usize;
    for (_, is_right, v) in events(ir) {
        if is_right {
            depth -= 1;
        } else {
            if depth == 0 {
                out.push(IntervalRepresentation::new());
            }
            depth += 1;
            out.last_mut()
                .unwrap()
                .intervals
                .insert(v, ir.intervals[&v]);
        }
    }
    out
}

/// An ordered list of bags.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathDecomposition {
    pub bags: Vec<BTreeSet<VertexId>>,
}

impl PathDecomposition {
    pub fn new(bags: Vec<BTreeSet<VertexId>>) -> Self {
        Self { bags }
    }

    /// Largest bag size minus one (`0` when there are no vertices).
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(BTreeSet::len)
            .max()
            .unwrap_or(1)
            .saturating_sub(1)
    }

    /// First and last bag index of every vertex; fails on gaps.
    pub fn spans(&self) -> Result<BTreeMap<VertexId, (usize, usize)>, IntervalError> {
        let mut spans: BTreeMap<VertexId, (usize, usize)> = BTreeMap::new();
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                match spans.get_mut(&v) {
                    Some(span) if span.1 + 1 == i => span.1 = i,
                    Some(span) => {
                        return Err(IntervalError::NonContiguous {
                            vertex: v,
                            first: span.0,
                            gap: span.1 + 1,
                            later: i,
                        })
                    }
                    None => {
                        spans.insert(v, (i, i));
                    }
                }
            }
        }
        Ok(spans)
    }

    /// Every edge of `g` lies inside some bag (and every vertex appears).
    pub fn covers(&self, g: &Graph) -> bool {
        let present: BTreeSet<VertexId> = self.bags.iter().flatten().copied().collect();
        g.vertices().all(|v| present.contains(&v))
            && g.edges()
                .all(|(u, v)| self.bags.iter().any(|b| b.contains(&u) && b.contains(&v)))
    }
}

/// Interval `[first bag, last bag + 1/2]` per vertex, normalised.
///
/// Bag `i` spans `[2i, 2i + 1]` after doubling, so two intervals meet iff the
/// vertices share a bag and the clique number equals the width plus one.
pub fn decomposition_to_intervals(
    pd: &PathDecomposition,
) -> Result<IntervalRepresentation, IntervalError> {
    let spans = pd.spans()?;
    let ir = IntervalRepresentation::from_pairs(
        spans
            .into_iter()
            .map(|(v, (a, b))| (v, (2 * a as i64, 2 * b as i64 + 1))),
    );
    normalize(&ir)
}
