//! Loopless multigraphs with first-class parallel edges.
//!
//! Vertices and edges are dense indices. Parallel edges are distinct
//! [`EdgeId`]s that happen to share an endpoint pair; everything downstream
//! (matchings, colorings, isomorphism) treats them as distinct objects.
//! A graph is immutable once built, so it can be shared freely across
//! threads and referenced by many colorings at once.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {index} is a loop at vertex {vertex}; loops are not allowed")]
    Loop { index: usize, vertex: VertexId },
    #[error("edge {index} endpoint {endpoint} is out of range for n = {n}")]
    EndpointOutOfRange {
        index: usize,
        endpoint: VertexId,
        n: usize,
    },
    #[error("edge id {edge} is out of range for m = {m}")]
    EdgeOutOfRange { edge: EdgeId, m: usize },
}

/// Immutable loopless multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    /// Endpoint pairs, normalized to (min, max), indexed by `EdgeId` in input order.
    endpoints: Vec<(VertexId, VertexId)>,
    /// Incident edge ids per vertex, ascending.
    incidence: Vec<Vec<EdgeId>>,
}

impl MultiGraph {
    /// Builds a graph from an edge list. Edge ids are assigned in input
    /// order. Loops and out-of-range endpoints are rejected.
    pub fn build(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut endpoints = Vec::with_capacity(edges.len());
        let mut incidence = vec![Vec::new(); n];
        for (index, &(a, b)) in edges.iter().enumerate() {
            for endpoint in [a, b] {
                if endpoint >= n {
                    return Err(GraphError::EndpointOutOfRange { index, endpoint, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop { index, vertex: a });
            }
            endpoints.push((a.min(b), a.max(b)));
            incidence[a].push(index);
            incidence[b].push(index);
        }
        Ok(MultiGraph {
            n,
            endpoints,
            incidence,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.endpoints.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.endpoints[e]
    }

    /// The endpoint of `e` that is not `v`. Panics if `v` is not an endpoint.
    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.endpoints[e];
        if v == a {
            b
        } else {
            assert_eq!(v, b, "vertex {v} is not an endpoint of edge {e}");
            a
        }
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.endpoints
    }

    /// Edge ids incident to `v`, ascending. A parallel edge appears once per id.
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.n
    }

    pub fn is_cubic(&self) -> bool {
        self.n > 0 && (0..self.n).all(|v| self.degree(v) == 3)
    }

    /// Number of parallel edges between `u` and `v`.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        if u == v {
            return 0;
        }
        self.incidence[u]
            .iter()
            .filter(|&&e| self.other_endpoint(e, u) == v)
            .count()
    }

    /// True iff no two edges of `set` share an endpoint. A pair of parallel
    /// edges shares both endpoints, so it is not a matching.
    pub fn is_matching(&self, set: &EdgeSet) -> bool {
        let mut covered = vec![false; self.n];
        for e in set.iter() {
            if e >= self.edge_count() {
                return false;
            }
            let (a, b) = self.endpoints[e];
            if covered[a] || covered[b] {
                return false;
            }
            covered[a] = true;
            covered[b] = true;
        }
        true
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &e in &self.incidence[v] {
                    let w = self.other_endpoint(e, v);
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }
}

/// A set of edge ids of one fixed graph. Iteration and serialization are
/// always in ascending id order, and `Ord` is lexicographic on that order, so
/// collections of edge sets have one canonical arrangement.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(BTreeSet<EdgeId>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(BTreeSet::new())
    }

    pub fn from_edges<I: IntoIterator<Item = EdgeId>>(edges: I) -> Self {
        EdgeSet(edges.into_iter().collect())
    }

    pub fn insert(&mut self, e: EdgeId) -> bool {
        self.0.insert(e)
    }

    pub fn remove(&mut self, e: EdgeId) -> bool {
        self.0.remove(&e)
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset_of(&self, other: &EdgeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint_from(&self, other: &EdgeSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        EdgeSet::from_edges(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta() -> MultiGraph {
        MultiGraph::build(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    fn k4() -> MultiGraph {
        MultiGraph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn theta_builds_with_three_distinct_parallel_edges() {
        let g = theta();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_cubic());
        assert_eq!(g.multiplicity(0, 1), 3);
        assert_eq!(g.incident_edges(0), &[0, 1, 2]);
        assert_eq!(g.incident_edges(1), &[0, 1, 2]);
    }

    #[test]
    fn loops_are_rejected_naming_the_vertex() {
        let err = MultiGraph::build(2, &[(0, 0), (0, 1)]).unwrap_err();
        assert_eq!(
            err,
            GraphError::Loop {
                index: 0,
                vertex: 0
            }
        );
    }

    #[test]
    fn out_of_range_endpoint_is_rejected() {
        let err = MultiGraph::build(2, &[(0, 2)]).unwrap_err();
        assert_eq!(
            err,
            GraphError::EndpointOutOfRange {
                index: 0,
                endpoint: 2,
                n: 2
            }
        );
    }

    #[test]
    fn degree_sum_equals_twice_edge_count() {
        for g in [theta(), k4()] {
            let sum: usize = g.vertices().map(|v| g.degree(v)).sum();
            assert_eq!(sum, 2 * g.edge_count());
        }
    }

    #[test]
    fn parallel_pair_is_not_a_matching() {
        let g = theta();
        assert!(g.is_matching(&EdgeSet::from_edges([0])));
        assert!(!g.is_matching(&EdgeSet::from_edges([0, 1])));
    }

    #[test]
    fn matching_detection_on_k4() {
        let g = k4();
        // (0,1) and (2,3) are disjoint; (0,1) and (0,2) share vertex 0.
        assert!(g.is_matching(&EdgeSet::from_edges([0, 5])));
        assert!(!g.is_matching(&EdgeSet::from_edges([0, 1])));
        assert!(g.is_matching(&EdgeSet::new()));
    }

    #[test]
    fn components_of_two_disjoint_thetas() {
        let g = MultiGraph::build(4, &[(0, 1), (0, 1), (0, 1), (2, 3), (2, 3), (2, 3)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2, 3]]);
        assert!(!g.is_connected());
        assert!(k4().is_connected());
    }

    #[test]
    fn isolated_vertices_form_their_own_components() {
        let g = MultiGraph::build(3, &[(0, 1)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn edge_set_order_is_canonical() {
        let a = EdgeSet::from_edges([3, 1]);
        let b = EdgeSet::from_edges([1, 3]);
        assert_eq!(a, b);
        assert_eq!(a.to_vec(), vec![1, 3]);
        // Lexicographic on sorted contents: {0,5} < {1,2}.
        assert!(EdgeSet::from_edges([0, 5]) < EdgeSet::from_edges([1, 2]));
    }
}
