//! Abstract graphs, squares, and distance-two neighborhoods.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::plane_graph::{Edge, GraphError, VertexId};

/// Read access to a neighbor structure; implemented by plane and abstract graphs.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;
    fn neighbors(&self, v: VertexId) -> &[VertexId];

    fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).contains(&v)
    }
}

/// Undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleGraph {
    adj: Vec<Vec<VertexId>>,
}

/// An induced subgraph together with the original id of each new vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub graph: SimpleGraph,
    pub original: Vec<VertexId>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list; loops are dropped and repeats merged.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
            if u != v {
                sets[u].insert(v);
                sets[v].insert(u);
            }
        }
        SimpleGraph {
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Copy of any adjacency structure as a simple graph.
    pub fn of<G: Adjacency + ?Sized>(g: &G) -> Self {
        Self::from_edges(
            g.vertex_count(),
            (0..g.vertex_count()).flat_map(|u| g.neighbors(u).iter().map(move |&v| (u, v))),
        )
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<Edge> {
        (0..self.adj.len())
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&&v| u < v)
                    .map(move |&v| Edge(u, v))
            })
            .collect()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj
            .get(u)
            .is_some_and(|list| list.binary_search(&v).is_ok())
    }

    pub fn is_complete(&self) -> bool {
        let n = self.adj.len();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    pub fn is_connected(&self) -> bool {
        crate::plane_graph::components_of(self)
            .iter()
            .all(|&c| c == 0)
    }

    /// Whether some cycle has exactly `k` vertices, `3 <= k <= 8`.
    pub fn has_cycle_of_length(&self, k: usize) -> Result<bool, GraphError> {
        crate::plane_graph::has_cycle_of_length(self, k)
    }

    pub fn with_edge(&self, u: VertexId, v: VertexId) -> Self {
        let mut edges: Vec<_> = self.edges().into_iter().map(|e| (e.0, e.1)).collect();
        edges.push((u, v));
        Self::from_edges(self.adj.len(), edges)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[VertexId]) -> Self {
        Self::from_edges(
            self.adj.len(),
            self.edges().into_iter().map(|e| (perm[e.0], perm[e.1])),
        )
    }
}

impl Adjacency for SimpleGraph {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.has_edge(u, v)
    }
}

/// `{u != v : dist(u, v) <= 2}`.
pub fn neighbors_within2<G: Adjacency + ?Sized>(
    g: &G,
    v: VertexId,
) -> Result<BTreeSet<VertexId>, GraphError> {
    if v >= g.vertex_count() {
        return Err(GraphError::UnknownVertex(v));
    }
    let mut out = BTreeSet::new();
    for &u in g.neighbors(v) {
        out.insert(u);
        out.extend(g.neighbors(u).iter().copied());
    }
    out.remove(&v);
    Ok(out)
}

/// The square: `u ~ v` iff they lie at distance 1 or 2.
pub fn square<G: Adjacency + ?Sized>(g: &G) -> SimpleGraph {
    let n = g.vertex_count();
    let adj = (0..n)
        .map(|v| {
            neighbors_within2(g, v)
                .expect("v < n")
                .into_iter()
                .collect()
        })
        .collect();
    SimpleGraph { adj }
}

/// Subgraph induced on `keep`, relabeled `0..keep.len()` in ascending order
/// of the original ids.
pub fn induced_subgraph(g: &SimpleGraph, keep: &BTreeSet<VertexId>) -> Result<Induced, GraphError> {
    if let Some(&bad) = keep.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(GraphError::UnknownVertex(bad));
    }
    let original: Vec<VertexId> = keep.iter().copied().collect();
    let edges = original.iter().enumerate().flat_map(|(i, &u)| {
        original
            .iter()
            .enumerate()
            .skip(i + 1)
            .filter(move |&(_, &v)| g.has_edge(u, v))
            .map(move |(j, _)| (i, j))
    });
    Ok(Induced {
        graph: SimpleGraph::from_edges(original.len(), edges),
        original,
    })
}
