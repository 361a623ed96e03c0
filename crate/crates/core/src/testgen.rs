//! Proptest strategies shared by the unit tests.

use std::collections::BTreeSet;

use proptest::prelude::*;

use crate::graph::Graph;
use crate::grid::{GridEdge, GridPath, GridPoint};
use crate::interval::IntervalRepresentation;
use crate::representation::{GridRepresentation, Mode};

/// Graph on `0..n` for `n <= max_n`.
pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Spanning subgraph of `g` chosen by `mask`, cycling through its bits.
pub fn masked(g: &Graph, mask: &[bool]) -> Graph {
    let mut h = Graph::new();
    for v in g.vertices() {
        h.add_vertex(v);
    }
    for (i, (u, v)) in g.edges().enumerate() {
        if mask.is_empty() || mask[i % mask.len()] {
            h.add_edge(u, v).unwrap();
        }
    }
    h
}

/// Open trail of up to 30 unit steps; repeated grid-edges are skipped.
pub fn trail() -> impl Strategy<Value = GridPath> {
    (any::<(i8, i8)>(), prop::collection::vec(0u8..4, 0..30)).prop_map(|((x, y), dirs)| {
        let mut pts = vec![GridPoint::new(x as i64, y as i64)];
        let mut used = BTreeSet::new();
        for d in dirs {
            let last = *pts.last().unwrap();
            let next = match d {
                0 => last.offset(1, 0),
                1 => last.offset(-1, 0),
                2 => last.offset(0, 1),
                _ => last.offset(0, -1),
            };
            if used.insert(GridEdge::new(last, next).unwrap()) {
                pts.push(next);
            }
        }
        GridPath::from_points(pts, false).unwrap()
    })
}

/// Short trails packed into a small window so they overlap often.
pub fn trail_rep(max_n: usize, mode: Mode) -> impl Strategy<Value = GridRepresentation> {
    let small =
        ((-4i64..4, -4i64..4), prop::collection::vec(0u8..4, 0..10)).prop_map(|((x, y), dirs)| {
            let mut pts = vec![GridPoint::new(x, y)];
            let mut used = BTreeSet::new();
            for d in dirs {
                let last = *pts.last().unwrap();
                let next = [(1, 0), (-1, 0), (0, 1), (0, -1)][d as usize];
                let next = last.offset(next.0, next.1);
                if used.insert(GridEdge::new(last, next).unwrap()) {
                    pts.push(next);
                }
            }
            GridPath::from_points(pts, false).unwrap()
        });
    prop::collection::vec(small, 0..=max_n)
        .prop_map(move |paths| GridRepresentation::with_paths(mode, paths.into_iter().enumerate()))
}

/// Proper VPG-representation of straight segments: horizontals on odd rows
/// and verticals on odd columns, all ends on even coordinates, so every
/// shared point is a plus-shaped crossing.
pub fn plus_rep(max_each: usize) -> impl Strategy<Value = GridRepresentation> {
    let span = (0i64..6, 1i64..6).prop_map(|(a, len)| (2 * a, 2 * (a + len)));
    (
        prop::collection::vec(span.clone(), 1..=max_each),
        prop::collection::vec(span, 1..=max_each),
        any::<bool>(),
    )
        .prop_map(|(hs, vs, reverse)| {
            let mut rep = GridRepresentation::new(Mode::ProperVpg);
            for (i, (a, b)) in hs.into_iter().enumerate() {
                let y = 2 * i as i64 + 1;
                rep.insert(rep.len(), GridPath::open([(a, y), (b, y)]).unwrap());
            }
            for (j, (a, b)) in vs.into_iter().enumerate() {
                let x = 2 * j as i64 + 1;
                let path = GridPath::open([(x, a), (x, b)]).unwrap();
                rep.insert(rep.len(), if reverse { path.reversed() } else { path });
            }
            rep
        })
}

/// Intervals with distinct endpoints `1..=2n`, a random pairing of a
/// shuffled endpoint sequence.
pub fn distinct_intervals(max_n: usize) -> impl Strategy<Value = IntervalRepresentation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=2 * n as i64).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|ends| {
            IntervalRepresentation::from_pairs(
                ends.chunks(2)
                    .enumerate()
                    .map(|(v, c)| (v, (c[0].min(c[1]), c[0].max(c[1])))),
            )
        })
}

/// Intervals on a small range; endpoints may coincide.
pub fn loose_intervals(max_n: usize) -> impl Strategy<Value = IntervalRepresentation> {
    prop::collection::vec((0i64..12, 1i64..6), 1..=max_n).prop_map(|v| {
        IntervalRepresentation::from_pairs(
            v.into_iter()
                .enumerate()
                .map(|(i, (a, len))| (i, (a, a + len))),
        )
    })
}
