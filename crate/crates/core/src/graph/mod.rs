//! Simple undirected graphs and the surgeries used by the constructions:
//! subdivision, degree-reducing vertex splits, minors and orientations.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

mod minor;
mod orient;

pub use minor::{apply_minor, MinorOutcome, MinorRecipe};
pub use orient::{orient_with_out_edges, Orientation};

/// Vertex identifier. Ids are non-negative and, for freshly built graphs, dense.
pub type VertexId = usize;

/// Undirected edge, normalised so that the first endpoint is the smaller one.
pub type Edge = (VertexId, VertexId);

/// Returns the edge with its endpoints in ascending order.
#[inline]
pub fn edge(u: VertexId, v: VertexId) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {0} does not exist")]
    UnknownVertex(VertexId),
    #[error("edge ({0}, {1}) does not exist")]
    UnknownEdge(VertexId, VertexId),
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex {vertex} has degree {degree}, at most {limit} allowed")]
    DegreeTooLarge {
        vertex: VertexId,
        degree: usize,
        limit: usize,
    },
    #[error("minor step {step} ({description}) is invalid: {reason}")]
    InvalidMinorStep {
        step: usize,
        description: String,
        reason: String,
    },
}

/// A simple undirected graph: no loops, no parallel edges.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertices().collect::<Vec<_>>())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Edgeless graph on `0..n`.
    pub fn with_vertices(n: usize) -> Self {
        Self {
            adj: (0..n).map(|v| (v, BTreeSet::new())).collect(),
        }
    }

    /// Builds a graph on `0..n` from an edge list, rejecting loops and duplicates.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::with_vertices(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds a vertex; returns `false` if it was already present.
    pub fn add_vertex(&mut self, v: VertexId) -> bool {
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, BTreeSet::new());
        true
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [u, v] {
            if !self.adj.contains_key(&w) {
                return Err(GraphError::UnknownVertex(w));
            }
        }
        if !self.adj.get_mut(&u).unwrap().insert(v) {
            let (a, b) = edge(u, v);
            return Err(GraphError::DuplicateEdge(a, b));
        }
        self.adj.get_mut(&v).unwrap().insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        let present = self.adj.get(&u).is_some_and(|n| n.contains(&v));
        if !present {
            let (a, b) = edge(u, v);
            return Err(GraphError::UnknownEdge(a, b));
        }
        self.adj.get_mut(&u).unwrap().remove(&v);
        self.adj.get_mut(&v).unwrap().remove(&u);
        Ok(())
    }

    /// Removes a vertex together with its incident edges.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        let nbrs = self.adj.remove(&v).ok_or(GraphError::UnknownVertex(v))?;
        for w in nbrs {
            self.adj.get_mut(&w).unwrap().remove(&v);
        }
        Ok(())
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Vertices in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, n)| n.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Neighbours in ascending order. Empty for unknown vertices.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.get(&v).into_iter().flat_map(|n| n.iter().copied())
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// One past the largest vertex id (0 for the empty graph).
    pub fn next_vertex_id(&self) -> VertexId {
        self.adj.keys().next_back().map_or(0, |&v| v + 1)
    }

    /// True when the vertex set is exactly `0..n`.
    pub fn has_dense_ids(&self) -> bool {
        self.next_vertex_id() == self.vertex_count()
    }

    /// Connected components, each sorted; components ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for s in self.vertices() {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if seen.insert(w) {
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `keep` (unknown ids are ignored).
    pub fn induced_subgraph(&self, keep: &BTreeSet<VertexId>) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, n)| (v, n.intersection(keep).copied().collect()))
            .collect();
        Graph { adj }
    }

    /// Copy with every vertex renamed through `f`, which must be injective.
    pub fn relabelled(&self, f: impl Fn(VertexId) -> VertexId) -> Graph {
        let adj: BTreeMap<_, BTreeSet<_>> = self
            .adj
            .iter()
            .map(|(&v, n)| (f(v), n.iter().map(|&w| f(w)).collect()))
            .collect();
        assert_eq!(adj.len(), self.adj.len(), "relabelling must be injective");
        Graph { adj }
    }

    /// True if every edge of `self` is an edge of `other` and the vertex sets agree.
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.vertices().eq(other.vertices()) && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    /// BFS 2-colouring; `None` when an odd cycle exists.
    pub fn two_colouring(&self) -> Option<BTreeMap<VertexId, u8>> {
        let mut colour = BTreeMap::new();
        for s in self.vertices() {
            if colour.contains_key(&s) {
                continue;
            }
            colour.insert(s, 0u8);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let c = colour[&v];
                for w in self.neighbors(v) {
                    match colour.get(&w) {
                        Some(&cw) if cw == c => return None,
                        Some(_) => {}
                        None => {
                            colour.insert(w, 1 - c);
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        Some(colour)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    // Named families used throughout tests and examples.

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let mut g = Self::path(n);
        g.add_edge(n - 1, 0).unwrap();
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Self::from_edges(a + b, edges).expect("complete bipartite graph is simple")
    }

    /// `rows x cols` grid graph; vertex `(r, c)` has id `r * cols + c`.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let mut g = Self::with_vertices(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    g.add_edge(v, v + 1).unwrap();
                }
                if r + 1 < rows {
                    g.add_edge(v, v + cols).unwrap();
                }
            }
        }
        g
    }

    /// Star `K_{1,leaves}` centred at 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        Self::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }
}

/// True iff no three vertices are mutually adjacent.
pub fn triangle_free(g: &Graph) -> bool {
    g.edges().all(|(u, v)| {
        let nu = &g.adj[&u];
        let nv = &g.adj[&v];
        nu.intersection(nv).next().is_none()
    })
}

/// Replaces every edge `(u, v)` by a path `u - s - v` through a fresh vertex.
///
/// Fresh ids continue after the largest existing id, in edge order.
pub fn subdivide_all_edges(g: &Graph) -> Graph {
    let mut out = Graph {
        adj: g.adj.keys().map(|&v| (v, BTreeSet::new())).collect(),
    };
    for ((u, v), s) in g.edges().zip(g.next_vertex_id()..) {
        out.add_vertex(s);
        out.add_edge(u, s).unwrap();
        out.add_edge(s, v).unwrap();
    }
    out
}

/// Splits vertices until the maximum degree is at most 4.
///
/// A vertex `v` of degree at least 5 hands its three smallest neighbours to a
/// fresh vertex `v'` which is then joined to `v`; this lowers `deg(v)` by two.
/// Vertices are processed in ascending id order. The returned map sends every
/// vertex of the result to the original vertex it came from, so contracting
/// each `(v, v')` pair recovers `g`.
pub fn split_to_4graph(g: &Graph) -> (Graph, BTreeMap<VertexId, VertexId>) {
    let mut out = g.clone();
    let mut origin: BTreeMap<VertexId, VertexId> = g.vertices().map(|v| (v, v)).collect();
    let mut next = g.next_vertex_id();
    let originals: Vec<VertexId> = g.vertices().collect();
    for v in originals {
        while out.degree(v) >= 5 {
            let moved: Vec<VertexId> = out.neighbors(v).take(3).collect();
            let fresh = next;
            next += 1;
            out.add_vertex(fresh);
            for w in moved {
                out.remove_edge(v, w).unwrap();
                out.add_edge(fresh, w).unwrap();
            }
            out.add_edge(v, fresh).unwrap();
            origin.insert(fresh, origin[&v]);
        }
    }
    (out, origin)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        let mut g = Graph::with_vertices(3);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.add_edge(1, 0), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(g.add_edge(0, 7), Err(GraphError::UnknownVertex(7)));
    }

    #[test]
    fn triangle_free_examples() {
        assert!(triangle_free(&Graph::cycle(4)));
        assert!(!triangle_free(&Graph::complete(3)));
        assert!(triangle_free(&Graph::complete_bipartite(2, 3)));
        assert!(triangle_free(&Graph::petersen()));
    }

    #[test]
    fn subdivision_examples() {
        let c6 = subdivide_all_edges(&Graph::complete(3));
        assert_eq!(c6.vertex_count(), 6);
        assert_eq!(c6.edge_count(), 6);
        assert!(c6.vertices().all(|v| c6.degree(v) == 2));
        assert!(c6.is_connected());

        let p3 = subdivide_all_edges(&Graph::path(2));
        assert_eq!(p3.vertex_count(), 3);
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3.degree(2), 2);

        let pet = subdivide_all_edges(&Graph::petersen());
        assert_eq!((pet.vertex_count(), pet.edge_count()), (25, 30));
        assert!(pet.is_bipartite());
    }

    #[test]
    fn split_leaves_4graphs_alone() {
        let k5 = Graph::complete(5);
        let (h, map) = split_to_4graph(&k5);
        assert_eq!(h, k5);
        assert!(map.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn split_star_once() {
        // Centre of degree 5 gives one fresh vertex: 6 + 1 vertices.
        let (h, map) = split_to_4graph(&Graph::star(5));
        assert_eq!(h.vertex_count(), 7);
        assert_eq!(h.max_degree(), 4);
        assert_eq!(map[&6], 0);
        assert_eq!(h.neighbors(6).collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        assert_eq!(h.neighbors(0).collect::<Vec<_>>(), vec![4, 5, 6]);
    }

    #[test]
    fn split_k6() {
        let (h, map) = split_to_4graph(&Graph::complete(6));
        assert_eq!(h.vertex_count(), 12);
        assert!(h.max_degree() <= 4);
        for v in 6..12 {
            assert_eq!(map[&v], v - 6);
        }
    }

    #[test]
    fn split_bounded_by_n_plus_m() {
        let g = Graph::complete(9);
        let (h, _) = split_to_4graph(&g);
        assert!(h.max_degree() <= 4);
        assert!(h.vertex_count() <= g.vertex_count() + g.edge_count());
    }

    #[test]
    fn components_and_bipartite() {
        let mut g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(g.is_bipartite());
        g.add_edge(1, 2).unwrap();
        g.add_edge(0, 2).unwrap();
        assert!(!g.is_bipartite());
    }

    #[test]
    fn named_families() {
        assert_eq!(Graph::petersen().edge_count(), 15);
        assert!(Graph::petersen()
            .vertices()
            .all(|v| Graph::petersen().degree(v) == 3));
        assert_eq!(Graph::grid(3, 3).edge_count(), 12);
        assert_eq!(Graph::complete_bipartite(2, 3).edge_count(), 6);
    }
}
