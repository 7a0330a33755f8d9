//! Combinatorial plane graphs stored as rotation systems.
//!
//! A [`PlaneGraph`] is built from per-vertex clockwise neighbor lists. Every
//! undirected edge becomes two half-edges; the faces are traced once at
//! construction and cached. Face walks follow the rule "arrive at `v` from
//! `u`, leave towards the clockwise successor of `u` around `v`".

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::square::Adjacency;

pub type VertexId = usize;
pub type HalfEdgeId = usize;
pub type FaceId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {u} lists {v} but {v} does not list {u}")]
    AsymmetricAdjacency { u: VertexId, v: VertexId },
    #[error("vertex {u} lists neighbor {v} more than once")]
    DuplicateNeighbor { u: VertexId, v: VertexId },
    #[error("vertex {v} lists itself as a neighbor")]
    SelfLoop { v: VertexId },
    #[error("vertex {u} lists neighbor {v}, which is out of range")]
    NeighborOutOfRange { u: VertexId, v: VertexId },
    #[error("rotation has {got} lists but n = {expected}")]
    VertexCountMismatch { expected: usize, got: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("cycle length {0} outside the supported range 3..=8")]
    KOutOfRange(usize),
    #[error("straight-line drawing has {points} points but edge ({u}, {v}) refers past them")]
    BadDrawing {
        points: usize,
        u: VertexId,
        v: VertexId,
    },
    #[error("malformed graph file: {0}")]
    Parse(String),
}

/// Undirected edge with `0 <= a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub VertexId, pub VertexId);

impl Edge {
    pub fn new(u: VertexId, v: VertexId) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn other(&self, v: VertexId) -> VertexId {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalfEdge {
    pub origin: VertexId,
    pub target: VertexId,
    pub twin: HalfEdgeId,
    /// Clockwise successor among the half-edges leaving `origin`.
    pub next_around_origin: HalfEdgeId,
}

/// A traced face: the cyclic sequence of half-edges on its boundary walk.
///
/// An isolated vertex bounds a single face with an empty walk; `anchor`
/// records which vertex that is. For every other face `anchor` is the origin
/// of the first half-edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub walk: Vec<HalfEdgeId>,
    pub anchor: VertexId,
}

impl Face {
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }
}

/// The on-disk graph description: `n` vertices, `rot[i]` the clockwise
/// neighbor order around vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub rot: Vec<Vec<VertexId>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub is_simple: bool,
    pub is_connected: bool,
    pub max_degree: usize,
    pub has_5_cycle: bool,
    pub euler_ok: bool,
    pub in_class: bool,
}

/// Immutable plane graph (rotation system plus traced faces).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    rot: Vec<Vec<VertexId>>,
    /// Half-edges of vertex `v` occupy `offsets[v]..offsets[v + 1]` in rotation order.
    offsets: Vec<HalfEdgeId>,
    half_edges: Vec<HalfEdge>,
    faces: Vec<Face>,
    face_of: Vec<FaceId>,
}

impl PlaneGraph {
    /// Builds a plane graph from clockwise neighbor lists.
    pub fn from_rotation(rot: Vec<Vec<VertexId>>) -> Result<Self, GraphError> {
        let n = rot.len();
        for (u, list) in rot.iter().enumerate() {
            for (i, &v) in list.iter().enumerate() {
                if v >= n {
                    return Err(GraphError::NeighborOutOfRange { u, v });
                }
                if v == u {
                    return Err(GraphError::SelfLoop { v: u });
                }
                if list[..i].contains(&v) {
                    return Err(GraphError::DuplicateNeighbor { u, v });
                }
            }
        }
        for (u, list) in rot.iter().enumerate() {
            for &v in list {
                if !rot[v].contains(&u) {
                    return Err(GraphError::AsymmetricAdjacency { u, v });
                }
            }
        }

        let mut offsets = Vec::with_capacity(n + 1);
        let mut total = 0;
        for list in &rot {
            offsets.push(total);
            total += list.len();
        }
        offsets.push(total);

        let mut half_edges = Vec::with_capacity(total);
        for (u, list) in rot.iter().enumerate() {
            let d = list.len();
            for (i, &v) in list.iter().enumerate() {
                let back = rot[v]
                    .iter()
                    .position(|&w| w == u)
                    .expect("symmetry checked");
                half_edges.push(HalfEdge {
                    origin: u,
                    target: v,
                    twin: offsets[v] + back,
                    next_around_origin: offsets[u] + (i + 1) % d,
                });
            }
        }

        let mut g = PlaneGraph {
            rot,
            offsets,
            half_edges,
            faces: Vec::new(),
            face_of: Vec::new(),
        };
        g.trace_faces();
        Ok(g)
    }

    pub fn from_file(file: &GraphFile) -> Result<Self, GraphError> {
        if file.rot.len() != file.n {
            return Err(GraphError::VertexCountMismatch {
                expected: file.n,
                got: file.rot.len(),
            });
        }
        Self::from_rotation(file.rot.clone())
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            n: self.vertex_count(),
            rot: self.rot.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("graph file serializes")
    }

    /// Builds the embedding induced by a straight-line drawing: neighbors are
    /// ordered clockwise by angle around each point. The drawing is trusted to
    /// be crossing-free; `class_membership().euler_ok` tells whether it was.
    pub fn from_straight_line(
        points: &[(f64, f64)],
        edges: &[(VertexId, VertexId)],
    ) -> Result<Self, GraphError> {
        let n = points.len();
        let mut rot = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::BadDrawing { points: n, u, v });
            }
            rot[u].push(v);
            rot[v].push(u);
        }
        for (u, list) in rot.iter_mut().enumerate() {
            let (x0, y0) = points[u];
            // clockwise = decreasing mathematical angle
            list.sort_by(|&a, &b| {
                let ta = (points[a].1 - y0).atan2(points[a].0 - x0);
                let tb = (points[b].1 - y0).atan2(points[b].0 - x0);
                tb.partial_cmp(&ta).expect("finite coordinates")
            });
        }
        Self::from_rotation(rot)
    }

    fn trace_faces(&mut self) {
        let mut face_of = vec![usize::MAX; self.half_edges.len()];
        let mut faces = Vec::new();
        for start in 0..self.half_edges.len() {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let mut h = start;
            loop {
                face_of[h] = id;
                walk.push(h);
                h = self.face_next(h);
                if h == start {
                    break;
                }
            }
            faces.push(Face {
                anchor: self.half_edges[start].origin,
                walk,
            });
        }
        for v in 0..self.vertex_count() {
            if self.rot[v].is_empty() {
                faces.push(Face {
                    walk: Vec::new(),
                    anchor: v,
                });
            }
        }
        self.faces = faces;
        self.face_of = face_of;
    }

    pub fn vertex_count(&self) -> usize {
        self.rot.len()
    }

    pub fn edge_count(&self) -> usize {
        self.half_edges.len() / 2
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn half_edge_count(&self) -> usize {
        self.half_edges.len()
    }

    pub fn half_edge(&self, h: HalfEdgeId) -> &HalfEdge {
        &self.half_edges[h]
    }

    pub fn half_edges(&self) -> &[HalfEdge] {
        &self.half_edges
    }

    /// Clockwise neighbor order around `v`. Panics on an unknown vertex.
    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rot[v]
    }

    /// Half-edges leaving `v`, in rotation order.
    pub fn outgoing(&self, v: VertexId) -> std::ops::Range<HalfEdgeId> {
        self.offsets[v]..self.offsets[v + 1]
    }

    /// Half-edge `u -> v`, if the edge exists.
    pub fn half_edge_between(&self, u: VertexId, v: VertexId) -> Option<HalfEdgeId> {
        let i = self.rot.get(u)?.iter().position(|&w| w == v)?;
        Some(self.offsets[u] + i)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.half_edge_between(u, v).is_some()
    }

    /// Successor of `h` along the face walk that contains it.
    pub fn face_next(&self, h: HalfEdgeId) -> HalfEdgeId {
        self.half_edges[self.half_edges[h].twin].next_around_origin
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f]
    }

    /// Face whose walk traverses `h`.
    pub fn face_of(&self, h: HalfEdgeId) -> FaceId {
        self.face_of[h]
    }

    pub fn face_length(&self, f: FaceId) -> usize {
        self.faces[f].len()
    }

    /// Vertices met along the walk of `f`, with repetition; entry `i` is the
    /// origin of the `i`-th half-edge.
    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        let face = &self.faces[f];
        if face.walk.is_empty() {
            return vec![face.anchor];
        }
        face.walk
            .iter()
            .map(|&h| self.half_edges[h].origin)
            .collect()
    }

    /// Faces at the corners around `v`, clockwise; corner `i` lies between
    /// `rotation(v)[i]` and `rotation(v)[i + 1]`.
    pub fn corner_faces(&self, v: VertexId) -> Vec<FaceId> {
        self.outgoing(v)
            .map(|h| self.face_of[self.half_edges[h].twin])
            .collect()
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.rot
            .get(v)
            .map(Vec::len)
            .ok_or(GraphError::UnknownVertex(v))
    }

    /// Degree of `v`; panics on an unknown vertex.
    pub fn deg(&self, v: VertexId) -> usize {
        self.rot[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.rot.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .half_edges
            .iter()
            .filter(|h| h.origin < h.target)
            .map(|h| Edge(h.origin, h.target))
            .collect();
        out.sort();
        out
    }

    /// Connected component index per vertex, numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        components_of(self)
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |&c| c + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Whether some simple cycle has exactly `k` vertices.
    pub fn has_cycle_of_length(&self, k: usize) -> Result<bool, GraphError> {
        has_cycle_of_length(self, k)
    }

    /// Every traced component satisfies `V - E + F = 2`.
    pub fn euler_ok(&self) -> bool {
        let comp = self.components();
        let count = comp.iter().max().map_or(0, |&c| c + 1);
        let mut chi = vec![0i64; count];
        for h in &self.half_edges {
            // each edge is seen twice, once per half
            chi[comp[h.origin]] -= 1;
        }
        for x in chi.iter_mut() {
            *x /= 2;
        }
        for v in 0..self.vertex_count() {
            chi[comp[v]] += 1;
        }
        for face in &self.faces {
            chi[comp[face.anchor]] += 1;
        }
        chi.iter().all(|&x| x == 2)
    }

    pub fn class_membership(&self) -> ClassReport {
        let max_degree = self.max_degree();
        let has_5_cycle = self.has_cycle_of_length(5).expect("5 is in range");
        let euler_ok = self.euler_ok();
        // loops and parallel edges are rejected at construction
        let is_simple = true;
        ClassReport {
            is_simple,
            is_connected: self.is_connected(),
            max_degree,
            has_5_cycle,
            euler_ok,
            in_class: is_simple && max_degree <= 4 && !has_5_cycle && euler_ok,
        }
    }
}

impl Adjacency for PlaneGraph {
    fn vertex_count(&self) -> usize {
        self.rot.len()
    }

    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.rot[v]
    }
}

pub(crate) fn components_of<G: Adjacency + ?Sized>(g: &G) -> Vec<usize> {
    let n = g.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if comp[w] == usize::MAX {
                    comp[w] = next;
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    comp
}

pub(crate) fn has_cycle_of_length<G: Adjacency + ?Sized>(
    g: &G,
    k: usize,
) -> Result<bool, GraphError> {
    if !(3..=8).contains(&k) {
        return Err(GraphError::KOutOfRange(k));
    }
    let n = g.vertex_count();
    let mut on_path = vec![false; n];
    // the cycle's smallest vertex is the start; the rest must exceed it
    fn extend<G: Adjacency + ?Sized>(
        g: &G,
        start: VertexId,
        v: VertexId,
        len: usize,
        k: usize,
        on_path: &mut [bool],
    ) -> bool {
        if len == k {
            return g.neighbors(v).contains(&start);
        }
        for &w in g.neighbors(v) {
            if w > start && !on_path[w] {
                on_path[w] = true;
                let found = extend(g, start, w, len + 1, k, on_path);
                on_path[w] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
    for s in 0..n {
        on_path[s] = true;
        let found = extend(g, s, s, 1, k, &mut on_path);
        on_path[s] = false;
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}
