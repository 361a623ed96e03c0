//! Lower-bound checks on EPG-representations and the exact pathwidth oracle.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{triangle_free, Graph, VertexId};
use crate::interval::{clique_number, IntervalRepresentation, PathDecomposition};
use crate::representation::{stats, validate, GridRepresentation, Mode};

/// Largest graph accepted by the exponential oracle.
pub const BRUTE_FORCE_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("{n} vertices exceed the brute-force limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundStatus {
    Holds,
    Violated,
    NotApplicable,
}

impl fmt::Display for BoundStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundStatus::Holds => "holds",
            BoundStatus::Violated => "violated",
            BoundStatus::NotApplicable => "not-applicable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub name: String,
    /// The inequality with measured values substituted, or why it does not apply.
    pub claim: String,
    pub status: BoundStatus,
    pub witness: Option<String>,
}

impl BoundReport {
    fn new(name: &str, claim: String, holds: bool, witness: impl FnOnce() -> String) -> Self {
        Self {
            name: name.into(),
            claim,
            status: if holds {
                BoundStatus::Holds
            } else {
                BoundStatus::Violated
            },
            witness: (!holds).then(witness),
        }
    }

    fn not_applicable(name: &str, reason: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            claim: reason.into(),
            status: BoundStatus::NotApplicable,
            witness: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.status == BoundStatus::Holds
    }

    pub fn is_violated(&self) -> bool {
        self.status == BoundStatus::Violated
    }
}

/// Measured rows `h` and multiplicity `c` (at least 1) of an EPG-representation.
fn rows_and_multiplicity(rep: &GridRepresentation) -> (u64, u64) {
    let s = stats(rep);
    let h = s.bbox.map_or(0, |b| b.height);
    (h, (s.multiplicity as u64).max(1))
}

/// An EPG-representation of a triangle-free graph with `m` edges uses at
/// least `m` distinct grid-edges.
pub fn check_edge_count_bound(rep: &GridRepresentation, g: &Graph) -> BoundReport {
    const NAME: &str = "edge-count";
    if rep.mode != Mode::Epg {
        return BoundReport::not_applicable(NAME, "representation is not in EPG mode");
    }
    if !triangle_free(g) {
        return BoundReport::not_applicable(NAME, "graph has a triangle");
    }
    match validate(rep, g) {
        Ok(r) if r.is_exact() => {}
        _ => return BoundReport::not_applicable(NAME, "representation does not validate exactly"),
    }
    let used = stats(rep).distinct_grid_edges;
    let m = g.edge_count();
    BoundReport::new(
        NAME,
        format!("distinct grid-edges {used} >= m = {m}"),
        used >= m,
        || format!("only {used} grid-edges for {m} graph edges"),
    )
}

/// x-projection of every path owning at least one grid-edge.
pub fn projection_intervals(rep: &GridRepresentation) -> IntervalRepresentation {
    IntervalRepresentation::from_pairs(rep.paths.iter().filter(|(_, p)| !p.is_empty()).map(
        |(&v, p)| {
            let xs = p.corners().iter().map(|c| c.x);
            (v, (xs.clone().min().unwrap(), xs.max().unwrap()))
        },
    ))
}

/// The clique number of the x-projection interval graph is at most
/// `c(3h - 1)`, certifying `pw <= c(3h - 1) - 1` for the represented graph.
pub fn projection_pathwidth_bound(rep: &GridRepresentation) -> BoundReport {
    const NAME: &str = "projection-pathwidth";
    if rep.mode != Mode::Epg {
        return BoundReport::not_applicable(NAME, "representation is not in EPG mode");
    }
    let (h, c) = rows_and_multiplicity(rep);
    let projection = projection_intervals(rep);
    let omega = clique_number(&projection) as u64;
    let cap = c * (3 * h).saturating_sub(1);
    BoundReport::new(
        NAME,
        format!(
            "omega {omega} <= c(3h-1) = {c}*(3*{h}-1) = {cap}, so pw <= {}",
            cap.saturating_sub(1)
        ),
        omega <= cap,
        || {
            let deepest = deepest_point(&projection);
            format!("{omega} projections share x = {deepest}")
        },
    )
}

fn deepest_point(ir: &IntervalRepresentation) -> i64 {
    let mut ev: Vec<(i64, bool)> = ir
        .intervals
        .values()
        .flat_map(|i| [(i.left, false), (i.right, true)])
        .collect();
    ev.sort_unstable();
    let (mut depth, mut best, mut at) = (0i64, -1i64, 0);
    for (x, is_right) in ev {
        depth += if is_right { -1 } else { 1 };
        if depth > best {
            best = depth;
            at = x;
        }
    }
    at
}

/// Exact pathwidth as the vertex separation number, with an optimal order.
///
/// Subset dynamic programme: `f(S) = max(|boundary(S)|, min_v f(S - v))`,
/// where `boundary(S)` holds the vertices of `S` with a neighbour outside.
pub fn brute_force_pathwidth(g: &Graph) -> Result<(usize, Vec<VertexId>), BoundsError> {
    let ids: Vec<VertexId> = g.vertices().collect();
    let n = ids.len();
    if n > BRUTE_FORCE_LIMIT {
        return Err(BoundsError::TooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let nbr: Vec<u32> = ids
        .iter()
        .map(|&v| g.neighbors(v).fold(0, |m, w| m | 1 << index[&w]))
        .collect();
    let full: u32 = if n == 0 { 0 } else { (1 << n) - 1 };
    let boundary = |s: u32| {
        (0..n)
            .filter(|&i| s >> i & 1 == 1 && nbr[i] & !s != 0)
            .count()
    };

    let mut f = vec![0usize; 1 << n];
    let mut choice = vec![0usize; 1 << n];
    for s in 1..=full as usize {
        let (best, v) = (0..n)
            .filter(|&i| s >> i & 1 == 1)
            .map(|i| (f[s & !(1 << i)], i))
            .min()
            .unwrap();
        f[s] = best.max(boundary(s as u32));
        choice[s] = v;
    }

    let mut order = Vec::with_capacity(n);
    let mut s = full as usize;
    while s != 0 {
        order.push(ids[choice[s]]);
        s &= !(1 << choice[s]);
    }
    order.reverse();
    Ok((f[full as usize], order))
}

/// Bag `i` holds `order[i]` and every earlier vertex with a neighbour at or
/// after position `i`; the width equals the separation of the order.
pub fn ordering_to_decomposition(g: &Graph, order: &[VertexId]) -> PathDecomposition {
    let pos: BTreeMap<VertexId, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let last_nbr: BTreeMap<VertexId, usize> = order
        .iter()
        .map(|&v| (v, g.neighbors(v).map(|w| pos[&w]).max().unwrap_or(0)))
        .collect();
    let bags = (0..order.len())
        .map(|i| {
            let mut bag: BTreeSet<VertexId> = order[..i]
                .iter()
                .copied()
                .filter(|u| last_nbr[u] >= i)
                .collect();
            bag.insert(order[i]);
            bag
        })
        .collect();
    PathDecomposition::new(bags)
}

/// Exact pathwidth against `c(3h - 1) - 1` for the measured rows and
/// multiplicity of a validated representation.
pub fn cross_check_pathwidth(rep: &GridRepresentation, g: &Graph) -> BoundReport {
    const NAME: &str = "exact-pathwidth";
    if rep.mode != Mode::Epg {
        return BoundReport::not_applicable(NAME, "representation is not in EPG mode");
    }
    let pw = match brute_force_pathwidth(g) {
        Ok((pw, _)) => pw as u64,
        Err(e) => return BoundReport::not_applicable(NAME, e.to_string()),
    };
    match validate(rep, g) {
        Ok(r) if r.is_exact() => {}
        _ => return BoundReport::not_applicable(NAME, "representation does not validate exactly"),
    }
    let (h, c) = rows_and_multiplicity(rep);
    let cap = (c * (3 * h).saturating_sub(1)).saturating_sub(1);
    BoundReport::new(
        NAME,
        format!("pw {pw} <= c(3h-1)-1 = {c}*(3*{h}-1)-1 = {cap}"),
        pw <= cap,
        || format!("pathwidth {pw} exceeds {cap}"),
    )
}
