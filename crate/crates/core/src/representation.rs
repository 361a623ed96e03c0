//! Vertex-path representations and their exact validators.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{edge, Edge, Graph, VertexId};
use crate::grid::{bounding_box, BoundingBox, GridEdge, GridPath, GridPoint, MonotoneClass};

/// How adjacency is read off a representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Mode {
    /// Adjacent iff the paths share a grid-point.
    #[serde(rename = "vpg")]
    Vpg,
    /// As `Vpg`, additionally certified proper.
    #[serde(rename = "proper-vpg")]
    ProperVpg,
    /// Adjacent iff the paths share a unit grid-edge.
    #[serde(rename = "epg")]
    Epg,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Vpg => "vpg",
            Mode::ProperVpg => "proper-vpg",
            Mode::Epg => "epg",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vpg" => Ok(Mode::Vpg),
            "proper-vpg" => Ok(Mode::ProperVpg),
            "epg" => Ok(Mode::Epg),
            other => Err(format!(
                "unknown mode `{other}` (expected epg, vpg or proper-vpg)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepresentationError {
    #[error(
        "vertex sets differ: only in graph {only_graph:?}, only in representation {only_rep:?}"
    )]
    VertexMismatch {
        only_graph: Vec<VertexId>,
        only_rep: Vec<VertexId>,
    },
}

/// An assignment of a grid path to every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridRepresentation {
    pub mode: Mode,
    pub paths: BTreeMap<VertexId, GridPath>,
}

impl GridRepresentation {
    pub fn new(mode: Mode) -> Self {
        Self {
            mode,
            paths: BTreeMap::new(),
        }
    }

    pub fn with_paths(mode: Mode, paths: impl IntoIterator<Item = (VertexId, GridPath)>) -> Self {
        Self {
            mode,
            paths: paths.into_iter().collect(),
        }
    }

    pub fn insert(&mut self, v: VertexId, path: GridPath) -> Option<GridPath> {
        self.paths.insert(v, path)
    }

    pub fn path(&self, v: VertexId) -> Option<&GridPath> {
        self.paths.get(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.paths.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// `None` for an empty representation.
    pub fn bounding_box(&self) -> Option<BoundingBox> {
        bounding_box(self.paths.values()).ok()
    }

    pub fn translated(&self, dx: i64, dy: i64) -> Self {
        Self {
            mode: self.mode,
            paths: self
                .paths
                .iter()
                .map(|(&v, p)| (v, p.translated(dx, dy)))
                .collect(),
        }
    }

    /// Shifts the representation so its bounding box starts at `(1, 1)`.
    pub fn normalized(&self) -> Self {
        match self.bounding_box() {
            Some(bb) => self.translated(1 - bb.origin.x, 1 - bb.origin.y),
            None => self.clone(),
        }
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    /// The graph induced under this representation's own mode.
    pub fn induced_graph(&self) -> Graph {
        match self.mode {
            Mode::Epg => induced_graph_epg(self),
            Mode::Vpg | Mode::ProperVpg => induced_graph_vpg(self),
        }
    }
}

fn empty_graph_on(rep: &GridRepresentation) -> Graph {
    let mut g = Graph::new();
    for v in rep.vertices() {
        g.add_vertex(v);
    }
    g
}

/// Key: (is_vertical, fixed coordinate); value: (lo, hi, vertex) with lo < hi.
type SegmentsByLine = BTreeMap<(bool, i64), Vec<(i64, i64, VertexId)>>;

/// Maximal straight pieces of all paths, grouped by the line they lie on.
fn segments_by_line(rep: &GridRepresentation) -> SegmentsByLine {
    let mut lines = SegmentsByLine::new();
    for (&v, path) in &rep.paths {
        for (a, b) in path.segments() {
            let entry = if a.y == b.y {
                ((false, a.y), (a.x.min(b.x), a.x.max(b.x)))
            } else {
                ((true, a.x), (a.y.min(b.y), a.y.max(b.y)))
            };
            lines
                .entry(entry.0)
                .or_default()
                .push((entry.1 .0, entry.1 .1, v));
        }
    }
    lines
}

/// Edge `(v, w)` iff the paths of `v` and `w` share a unit grid-edge.
///
/// Works on corner segments: two paths share a grid-edge exactly when two of
/// their segments lie on the same line and overlap in positive length.
pub fn induced_graph_epg(rep: &GridRepresentation) -> Graph {
    let mut g = empty_graph_on(rep);
    for (_, mut segs) in segments_by_line(rep) {
        segs.sort_unstable();
        for (i, &(lo, hi, v)) in segs.iter().enumerate() {
            for &(lo2, _, w) in &segs[i + 1..] {
                if lo2 >= hi {
                    break;
                }
                debug_assert!(lo2 >= lo);
                if v != w && !g.has_edge(v, w) {
                    g.add_edge(v, w).unwrap();
                }
            }
        }
    }
    g
}

/// Edge `(v, w)` iff the paths of `v` and `w` share a grid-point.
pub fn induced_graph_vpg(rep: &GridRepresentation) -> Graph {
    let mut g = empty_graph_on(rep);
    for owners in point_owners(rep).values() {
        for (i, &v) in owners.iter().enumerate() {
            for &w in &owners[i + 1..] {
                if !g.has_edge(v, w) {
                    g.add_edge(v, w).unwrap();
                }
            }
        }
    }
    g
}

/// Every visited grid-point with the sorted, distinct vertices visiting it.
fn point_owners(rep: &GridRepresentation) -> BTreeMap<GridPoint, Vec<VertexId>> {
    let mut owners: BTreeMap<GridPoint, Vec<VertexId>> = BTreeMap::new();
    for (&v, path) in &rep.paths {
        for p in path.point_set() {
            owners.entry(p).or_default().push(v);
        }
    }
    owners
}

fn edge_owners(rep: &GridRepresentation) -> HashMap<GridEdge, Vec<VertexId>> {
    let mut owners: HashMap<GridEdge, Vec<VertexId>> = HashMap::new();
    for (&v, path) in &rep.paths {
        for e in path.unit_edges() {
            owners.entry(e).or_default().push(v);
        }
    }
    owners
}

/// Why a representation is not a proper VPG-representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ProperViolation {
    /// A grid-edge used by two paths.
    SharedEdge {
        edge: GridEdge,
        first: VertexId,
        second: VertexId,
    },
    /// Two paths meet at a point without a rightward/upward pair.
    NotACrossing {
        point: GridPoint,
        first: VertexId,
        second: VertexId,
    },
    /// Three or more paths meet at one point.
    MultiwayPoint {
        point: GridPoint,
        vertices: Vec<VertexId>,
    },
}

impl fmt::Display for ProperViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProperViolation::SharedEdge {
                edge,
                first,
                second,
            } => {
                write!(f, "grid-edge {edge} used by {first} and {second}")
            }
            ProperViolation::NotACrossing {
                point,
                first,
                second,
            } => {
                write!(
                    f,
                    "{first} and {second} meet at ({point}) without a right/up crossing"
                )
            }
            ProperViolation::MultiwayPoint { point, vertices } => {
                write!(f, "point ({point}) shared by {vertices:?}")
            }
        }
    }
}

/// Outcome of the properness check; carries the first violation found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProperCertificate {
    pub proper: bool,
    pub violation: Option<ProperViolation>,
}

/// Checks (a) no grid-edge is shared and (b) every shared point is a crossing
/// where one path uses the rightward and the other the upward edge.
/// Points shared by three or more paths are improper.
pub fn is_proper_vpg(rep: &GridRepresentation) -> ProperCertificate {
    let fail = |violation| ProperCertificate {
        proper: false,
        violation: Some(violation),
    };
    let mut used: BTreeMap<GridEdge, VertexId> = BTreeMap::new();
    let edge_sets: BTreeMap<VertexId, BTreeSet<GridEdge>> =
        rep.paths.iter().map(|(&v, p)| (v, p.edge_set())).collect();
    for (&v, edges) in &edge_sets {
        for &e in edges {
            if let Some(&first) = used.get(&e) {
                return fail(ProperViolation::SharedEdge {
                    edge: e,
                    first,
                    second: v,
                });
            }
            used.insert(e, v);
        }
    }
    for (point, owners) in point_owners(rep) {
        match owners.as_slice() {
            [] | [_] => {}
            &[v, w] => {
                let right = GridEdge::rightward(point);
                let up = GridEdge::upward(point);
                let (ev, ew) = (&edge_sets[&v], &edge_sets[&w]);
                let crossing = (ev.contains(&right) && ew.contains(&up))
                    || (ev.contains(&up) && ew.contains(&right));
                if !crossing {
                    return fail(ProperViolation::NotACrossing {
                        point,
                        first: v,
                        second: w,
                    });
                }
            }
            many => {
                return fail(ProperViolation::MultiwayPoint {
                    point,
                    vertices: many.to_vec(),
                })
            }
        }
    }
    ProperCertificate {
        proper: true,
        violation: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentationStats {
    /// `None` for an empty representation.
    #[serde(rename = "box")]
    pub bbox: Option<BoundingBox>,
    pub distinct_grid_edges: usize,
    /// Largest number of paths sharing one grid-edge (0 if no edge is used).
    pub multiplicity: usize,
    pub monotone_class: MonotoneClass,
}

pub fn stats(rep: &GridRepresentation) -> RepresentationStats {
    let owners = edge_owners(rep);
    RepresentationStats {
        bbox: rep.bounding_box(),
        distinct_grid_edges: owners.len(),
        multiplicity: owners.values().map(Vec::len).max().unwrap_or(0),
        monotone_class: common_class(rep),
    }
}

/// Strongest class satisfied by every path (`XyPlus` for an empty set).
pub fn common_class(rep: &GridRepresentation) -> MonotoneClass {
    rep.paths
        .values()
        .map(GridPath::monotone_class)
        .min()
        .unwrap_or(MonotoneClass::XyPlus)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub mode: Mode,
    pub vertices: usize,
    pub graph_edges: usize,
    /// Edges of the graph the representation does not produce.
    pub missing: Vec<Edge>,
    /// Adjacencies produced by the representation but absent from the graph.
    pub excess: Vec<Edge>,
    pub path_classes: BTreeMap<VertexId, MonotoneClass>,
    pub stats: RepresentationStats,
    /// Present for proper-VPG mode.
    pub proper: Option<ProperCertificate>,
}

impl ValidationReport {
    /// Induced graph equals the target graph.
    pub fn is_exact(&self) -> bool {
        self.missing.is_empty() && self.excess.is_empty()
    }

    /// Exact and, in proper-VPG mode, proper.
    pub fn passes(&self) -> bool {
        self.is_exact() && self.proper.as_ref().is_none_or(|c| c.proper)
    }
}

/// Compares the graph induced by `rep` (under its mode) with `g`.
pub fn validate(
    rep: &GridRepresentation,
    g: &Graph,
) -> Result<ValidationReport, RepresentationError> {
    let rv: BTreeSet<_> = rep.vertices().collect();
    let gv: BTreeSet<_> = g.vertices().collect();
    if rv != gv {
        return Err(RepresentationError::VertexMismatch {
            only_graph: gv.difference(&rv).copied().collect(),
            only_rep: rv.difference(&gv).copied().collect(),
        });
    }
    let induced = rep.induced_graph();
    let missing = g
        .edges()
        .filter(|&(u, v)| !induced.has_edge(u, v))
        .collect();
    let excess = induced
        .edges()
        .filter(|&(u, v)| !g.has_edge(u, v))
        .map(|(u, v)| edge(u, v))
        .collect();
    Ok(ValidationReport {
        mode: rep.mode,
        vertices: g.vertex_count(),
        graph_edges: g.edge_count(),
        missing,
        excess,
        path_classes: rep
            .paths
            .iter()
            .map(|(&v, p)| (v, p.monotone_class()))
            .collect(),
        stats: stats(rep),
        proper: (rep.mode == Mode::ProperVpg).then(|| is_proper_vpg(rep)),
    })
}
