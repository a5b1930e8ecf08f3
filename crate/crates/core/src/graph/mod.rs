//! Simple undirected graphs with stable vertex indices, plus the classical
//! connectivity machinery everything else is built on.

mod chromatic;
mod connectivity;
pub(crate) mod flow;
mod format;
mod spanning;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use chromatic::{chromatic_number, chromatic_number_with_limit, DEFAULT_CHROMATIC_MAX_VERTICES};
pub use connectivity::{is_k_connected, local_connectivity, vertex_connectivity};
pub use format::{parse_graph, serialize_graph, GraphFormat, ParseError};
pub use spanning::{
    all_min_spanning_k_connected, min_spanning_k_connected, SpanningBudget, SpanningError,
};

/// A vertex index in `0..n`.
pub type Vertex = usize;

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    /// Builds the canonical form of `{a, b}`. Panics on a loop.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        assert_ne!(a, b, "self-loop {a}-{a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("needs at least {need} vertices, graph has {n}")]
    TooFewVertices { need: usize, n: usize },
    #[error("graph has {n} vertices, above the limit of {limit}")]
    TooManyVertices { limit: usize, n: usize },
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Edges are kept sorted; an edge's position in [`Graph::edges`] is its
/// stable edge id, which colourings index by.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut edges = Vec::new();
        for (a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            edges.push(Edge::new(a, b));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0]));
        }
        Ok(Self::from_sorted_edges(n, edges))
    }

    /// `edges` must already be sorted, deduplicated and in range.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        assert!(n >= 1);
        Self::from_sorted_edges(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| Edge { u, v }))
            .collect();
        Self::from_sorted_edges(n, edges)
    }

    /// `K_{s,t}` with the `s`-class on `0..s` and the `t`-class on `s..s+t`.
    pub fn complete_bipartite(s: usize, t: usize) -> Self {
        let edges = (0..s)
            .flat_map(|u| (s..s + t).map(move |v| Edge { u, v }))
            .collect();
        Self::from_sorted_edges(s + t, edges)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Self::new(10, outer.chain(spokes).chain(inner)).expect("petersen is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn neighbours(&self, x: Vertex) -> &[Vertex] {
        &self.adj[x]
    }

    pub fn degree(&self, x: Vertex) -> usize {
        self.adj[x].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a != b && a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    /// Position of `{a, b}` in the sorted edge list.
    pub fn edge_id(&self, a: Vertex, b: Vertex) -> Option<usize> {
        if a == b || a >= self.n || b >= self.n {
            return None;
        }
        self.edges.binary_search(&Edge::new(a, b)).ok()
    }

    pub fn check_vertex(&self, x: Vertex) -> Result<(), GraphError> {
        if x < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: x, n: self.n })
        }
    }

    /// Spanning subgraph on the given edge ids.
    pub fn spanning_subgraph(&self, ids: impl IntoIterator<Item = usize>) -> Graph {
        let mut edges: Vec<Edge> = ids.into_iter().map(|i| self.edges[i]).collect();
        edges.sort_unstable();
        edges.dedup();
        Graph::from_sorted_edges(self.n, edges)
    }

    /// True when every edge of `other` is an edge of `self` and both have the same vertex set.
    pub fn is_spanning_supergraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && other.edges.iter().all(|e| self.has_edge(e.u, e.v))
    }

    /// Edge ids of `self` whose edges appear in `sub`.
    pub fn edge_ids_of(&self, sub: &Graph) -> Option<Vec<usize>> {
        sub.edges.iter().map(|e| self.edge_id(e.u, e.v)).collect()
    }

    /// Adds an edge, keeping all invariants.
    pub fn with_edge(&self, a: Vertex, b: Vertex) -> Result<Graph, GraphError> {
        let pairs = self.edges.iter().map(|e| (e.u, e.v)).chain([(a, b)]);
        Graph::new(self.n, pairs)
    }

    /// Applies a vertex permutation: vertex `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::new(self.n, self.edges.iter().map(|e| (perm[e.u], perm[e.v])))
            .expect("a permutation keeps the graph simple")
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// Component label per vertex, labels assigned in order of smallest vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        label
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(Edge { u: 0, v: 1 }))
        );
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(0, []), Err(GraphError::Empty));
    }

    #[test]
    fn handshake() {
        for g in [Graph::complete(6), Graph::petersen(), Graph::complete_bipartite(3, 4)] {
            let total: usize = (0..g.n()).map(|x| g.degree(x)).sum();
            assert_eq!(total, 2 * g.edge_count());
        }
    }

    #[test]
    fn edge_ids_follow_sorted_order() {
        let g = Graph::new(4, [(3, 2), (0, 1), (1, 3)]).unwrap();
        assert_eq!(g.edge_id(1, 0), Some(0));
        assert_eq!(g.edge_id(3, 1), Some(1));
        assert_eq!(g.edge_id(2, 3), Some(2));
        assert_eq!(g.edge_id(0, 2), None);
        assert_eq!(g.neighbours(3), &[1, 2]);
    }

    #[test]
    fn petersen_shape() {
        let g = Graph::petersen();
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|x| g.degree(x) == 3));
    }
}
