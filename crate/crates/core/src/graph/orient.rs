use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{edge, Edge, Graph, GraphError, VertexId};

/// A direction `(tail, head)` for every edge of a graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Orientation {
    direction: BTreeMap<Edge, (VertexId, VertexId)>,
}

impl Orientation {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets the direction of `{tail, head}` to `tail -> head`.
    pub fn set(&mut self, tail: VertexId, head: VertexId) {
        self.direction.insert(edge(tail, head), (tail, head));
    }

    /// Direction of the edge `{u, v}`, if oriented.
    pub fn arc(&self, u: VertexId, v: VertexId) -> Option<(VertexId, VertexId)> {
        self.direction.get(&edge(u, v)).copied()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.direction.values().copied()
    }

    pub fn len(&self) -> usize {
        self.direction.len()
    }

    pub fn is_empty(&self) -> bool {
        self.direction.is_empty()
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.arcs().filter(|&(t, _)| t == v).count()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.arcs().filter(|&(_, h)| h == v).count()
    }

    /// True when exactly the edges of `g` are oriented.
    pub fn covers(&self, g: &Graph) -> bool {
        self.direction.keys().copied().eq(g.edges())
    }

    pub(crate) fn extend(&mut self, other: Orientation) {
        self.direction.extend(other.direction);
    }
}

/// Orients a connected graph of maximum degree 4 so that every vertex of
/// degree 4 has an outgoing edge.
///
/// If every vertex has degree 4 the edges follow an Eulerian circuit started
/// at the smallest vertex. Otherwise a BFS spanning tree rooted at the smallest
/// vertex of degree at most 3 is directed toward the root and every other edge
/// points from its lower to its higher endpoint.
pub fn orient_with_out_edges(g: &Graph) -> Result<Orientation, GraphError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) > 4) {
        return Err(GraphError::DegreeTooLarge {
            vertex: v,
            degree: g.degree(v),
            limit: 4,
        });
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let Some(start) = g.vertices().next() else {
        return Ok(Orientation::new());
    };
    let root = g.vertices().find(|&v| g.degree(v) <= 3);
    let orientation = match root {
        None => eulerian(g, start),
        Some(root) => tree_towards(g, root),
    };
    debug_assert!(orientation.covers(g));
    Ok(orientation)
}

/// Hierholzer's algorithm; arcs follow the traversal direction.
fn eulerian(g: &Graph, start: VertexId) -> Orientation {
    let mut unused: BTreeMap<VertexId, BTreeSet<VertexId>> = g
        .vertices()
        .map(|v| (v, g.neighbors(v).collect()))
        .collect();
    let mut stack = vec![start];
    let mut circuit = Vec::with_capacity(g.edge_count() + 1);
    while let Some(&v) = stack.last() {
        let next = unused.get(&v).and_then(|n| n.iter().next().copied());
        match next {
            Some(w) => {
                unused.get_mut(&v).unwrap().remove(&w);
                unused.get_mut(&w).unwrap().remove(&v);
                stack.push(w);
            }
            None => circuit.push(stack.pop().unwrap()),
        }
    }
    circuit.reverse();
    let mut o = Orientation::new();
    for pair in circuit.windows(2) {
        o.set(pair[0], pair[1]);
    }
    o
}

fn tree_towards(g: &Graph, root: VertexId) -> Orientation {
    let mut o = Orientation::new();
    let mut seen = BTreeSet::from([root]);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if seen.insert(w) {
                o.set(w, v);
                queue.push_back(w);
            }
        }
    }
    for (u, v) in g.edges() {
        if o.arc(u, v).is_none() {
            o.set(u, v);
        }
    }
    o
}
