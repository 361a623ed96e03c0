use std::collections::{BTreeMap, BTreeSet};

use super::{edge, Edge, Graph, GraphError, VertexId};

/// Deletions followed by an ordered sequence of contractions.
///
/// `contract u v` merges `v` into `u`: the contraction vertex keeps the id `u`.
/// Edge deletions are applied first, then vertex deletions, then the
/// contractions in order; every step must refer to elements present at the
/// time it is applied.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MinorRecipe {
    pub deleted_vertices: BTreeSet<VertexId>,
    pub deleted_edges: BTreeSet<Edge>,
    pub contractions: Vec<(VertexId, VertexId)>,
}

/// Result of resolving a recipe against a concrete graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorOutcome {
    pub graph: Graph,
    /// Surviving original vertex -> id of the minor vertex it was merged into.
    pub name_map: BTreeMap<VertexId, VertexId>,
    /// For each contraction step, one original edge `(a, b)` joining the two
    /// merged groups, `a` on the keeping side. The smallest such edge is used.
    pub witnesses: Vec<Edge>,
}

impl MinorRecipe {
    pub fn is_empty(&self) -> bool {
        self.deleted_vertices.is_empty()
            && self.deleted_edges.is_empty()
            && self.contractions.is_empty()
    }

    pub fn contract(mut self, keep: VertexId, absorb: VertexId) -> Self {
        self.contractions.push((keep, absorb));
        self
    }

    pub fn delete_edge(mut self, u: VertexId, v: VertexId) -> Self {
        self.deleted_edges.insert(edge(u, v));
        self
    }

    pub fn delete_vertex(mut self, v: VertexId) -> Self {
        self.deleted_vertices.insert(v);
        self
    }

    /// The graph left after all deletions, before any contraction.
    pub fn after_deletions(&self, g: &Graph) -> Result<Graph, GraphError> {
        let mut h = g.clone();
        for (step, &(u, v)) in self.deleted_edges.iter().enumerate() {
            h.remove_edge(u, v)
                .map_err(|e| GraphError::InvalidMinorStep {
                    step,
                    description: format!("delete-edge {u} {v}"),
                    reason: e.to_string(),
                })?;
        }
        let offset = self.deleted_edges.len();
        for (i, &v) in self.deleted_vertices.iter().enumerate() {
            h.remove_vertex(v)
                .map_err(|e| GraphError::InvalidMinorStep {
                    step: offset + i,
                    description: format!("delete-vertex {v}"),
                    reason: e.to_string(),
                })?;
        }
        Ok(h)
    }

    pub fn resolve(&self, g: &Graph) -> Result<MinorOutcome, GraphError> {
        let base = self.after_deletions(g)?;
        let mut h = base.clone();
        let mut members: BTreeMap<VertexId, BTreeSet<VertexId>> =
            h.vertices().map(|v| (v, BTreeSet::from([v]))).collect();
        let mut witnesses = Vec::with_capacity(self.contractions.len());
        let offset = self.deleted_edges.len() + self.deleted_vertices.len();

        for (i, &(keep, absorb)) in self.contractions.iter().enumerate() {
            let invalid = |reason: String| GraphError::InvalidMinorStep {
                step: offset + i,
                description: format!("contract {keep} {absorb}"),
                reason,
            };
            if !h.has_edge(keep, absorb) {
                return Err(invalid(format!(
                    "({keep}, {absorb}) is not an edge of the current graph"
                )));
            }
            let witness = members[&keep]
                .iter()
                .flat_map(|&a| {
                    let absorbed = &members[&absorb];
                    base.neighbors(a)
                        .filter(move |b| absorbed.contains(b))
                        .map(move |b| (a, b))
                })
                .min_by_key(|&(a, b)| edge(a, b))
                .expect("adjacent groups are joined by an original edge");
            witnesses.push(witness);

            let moved: Vec<VertexId> = h.neighbors(absorb).filter(|&w| w != keep).collect();
            h.remove_vertex(absorb).unwrap();
            for w in moved {
                if !h.has_edge(keep, w) {
                    h.add_edge(keep, w).unwrap();
                }
            }
            let absorbed = members.remove(&absorb).unwrap();
            members.get_mut(&keep).unwrap().extend(absorbed);
        }

        let name_map = members
            .iter()
            .flat_map(|(&rep, group)| group.iter().map(move |&v| (v, rep)))
            .collect();
        Ok(MinorOutcome {
            graph: h,
            name_map,
            witnesses,
        })
    }
}

/// Applies deletions, then contractions, returning the minor.
pub fn apply_minor(g: &Graph, recipe: &MinorRecipe) -> Result<Graph, GraphError> {
    recipe.resolve(g).map(|o| o.graph)
}
