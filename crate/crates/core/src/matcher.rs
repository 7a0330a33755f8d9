//! Detectors for catalog configurations inside a concrete plane graph.
//!
//! Every configuration is a small predicate over an ordered tuple of host
//! vertices (its roles). Detectors generate candidate tuples from local
//! neighborhoods and keep those that satisfy the predicate; a match is
//! reported once per canonical key, which sorts the roles of any
//! interchangeable group.
//!
//! Face incidence follows boundary walks: a vertex is on a face when the
//! walk visits it, and a vertex is incident to a face once per corner.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::plane_graph::{FaceId, PlaneGraph, VertexId};
use crate::reducibility::ConfigId;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchEmbedding {
    pub config: ConfigId,
    /// Role name and host vertex, in the pattern's role order.
    pub roles: Vec<(&'static str, VertexId)>,
    /// Faces witnessing the face constraints, if any.
    pub faces: Vec<FaceId>,
}

impl MatchEmbedding {
    pub fn host(&self, role: &str) -> Option<VertexId> {
        self.roles.iter().find(|(r, _)| *r == role).map(|&(_, v)| v)
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        self.roles.iter().map(|&(_, v)| v).collect()
    }

    /// Re-checks every constraint of the pattern against `g`.
    pub fn is_valid(&self, g: &PlaneGraph) -> bool {
        witness(g, self.config, &self.vertices()).is_some()
    }
}

/// Role names of a configuration's pattern, in tuple order.
pub fn role_names(id: ConfigId) -> &'static [&'static str] {
    use ConfigId::*;
    match id {
        Conn => &[],
        No1v | No2v3f | No2v4f | No3vTwo3f | No3vTwo4f => &["v"],
        No22v | No23v | No33v | No2vAdj3f | No3v3fVertex3f => &["u", "v"],
        No242v | No243v => &["u", "v", "w"],
        No333f | No34f => &["a", "b", "c"],
        No3v3fEdge3f | No3vNear3f3v | No3vNearShared3f => &["v", "u", "w"],
        No2vNearShared3f => &["v", "u", "w", "x"],
    }
}

/// Positions of roles that the pattern's automorphisms permute freely.
fn symmetric_group(id: ConfigId) -> &'static [usize] {
    use ConfigId::*;
    match id {
        No22v | No33v => &[0, 1],
        No242v => &[0, 2],
        No333f | No34f => &[0, 1, 2],
        No3v3fEdge3f => &[1, 2],
        _ => &[],
    }
}

/// The tuple with its interchangeable roles sorted.
pub fn canonical_key(id: ConfigId, hosts: &[VertexId]) -> Vec<VertexId> {
    let group = symmetric_group(id);
    let mut vals: Vec<VertexId> = group.iter().map(|&i| hosts[i]).collect();
    vals.sort_unstable();
    let mut key = hosts.to_vec();
    for (&i, v) in group.iter().zip(vals) {
        key[i] = v;
    }
    key
}

fn corner_faces_of_len(g: &PlaneGraph, v: VertexId, len: usize) -> Vec<FaceId> {
    g.corner_faces(v)
        .into_iter()
        .filter(|&f| g.face_length(f) == len)
        .collect()
}

fn on_face(g: &PlaneGraph, f: FaceId, v: VertexId) -> bool {
    g.face_vertices(f).contains(&v)
}

fn triangles_at(g: &PlaneGraph, v: VertexId) -> Vec<FaceId> {
    let mut out = corner_faces_of_len(g, v, 3);
    out.dedup();
    out
}

/// Both sides of edge `uw` are 3-faces; returns them.
fn shared_triangle_edge(g: &PlaneGraph, u: VertexId, w: VertexId) -> Option<Vec<FaceId>> {
    let h = g.half_edge_between(u, w)?;
    let f1 = g.face_of(h);
    let f2 = g.face_of(g.half_edge(h).twin);
    (g.face_length(f1) == 3 && g.face_length(f2) == 3).then(|| vec![f1, f2])
}

/// Faces across the walk edges of `f`.
fn across(g: &PlaneGraph, f: FaceId) -> Vec<FaceId> {
    g.face(f)
        .walk
        .iter()
        .map(|&h| g.face_of(g.half_edge(h).twin))
        .collect()
}

fn distinct(hosts: &[VertexId]) -> bool {
    hosts
        .iter()
        .enumerate()
        .all(|(i, a)| hosts[i + 1..].iter().all(|b| a != b))
}

/// Checks the pattern predicate of `id` on `hosts` and returns its witness
/// faces, or `None` when the tuple is not an occurrence.
pub fn witness(g: &PlaneGraph, id: ConfigId, hosts: &[VertexId]) -> Option<Vec<FaceId>> {
    use ConfigId::*;
    if hosts.len() != role_names(id).len()
        || hosts.iter().any(|&v| v >= g.vertex_count())
        || !distinct(hosts)
    {
        return None;
    }
    let deg = |v: VertexId| g.deg(v);
    let adj = |a: VertexId, b: VertexId| g.has_edge(a, b);
    let ok = |b: bool| b.then(Vec::new);
    match (id, hosts) {
        (Conn, []) => ok(!g.is_connected()),
        (No1v, &[v]) => ok(deg(v) == 1),
        (No2v3f, &[v]) | (No2v4f, &[v]) => {
            let len = if id == No2v3f { 3 } else { 4 };
            let faces = corner_faces_of_len(g, v, len);
            (deg(v) == 2 && !faces.is_empty()).then(|| vec![faces[0]])
        }
        (No22v, &[u, v]) => ok(deg(u) == 2 && deg(v) == 2 && adj(u, v)),
        (No23v, &[u, v]) => ok(deg(u) == 2 && deg(v) == 3 && adj(u, v)),
        (No33v, &[u, v]) => ok(deg(u) == 3 && deg(v) == 3 && adj(u, v)),
        (No242v, &[u, v, w]) | (No243v, &[u, v, w]) => {
            let dw = if id == No242v { 2 } else { 3 };
            ok(deg(u) == 2 && deg(w) == dw && !adj(u, w) && adj(u, v) && adj(v, w))
        }
        (No2vAdj3f, &[u, v]) => {
            if deg(u) != 2 || !adj(u, v) {
                return None;
            }
            triangles_at(g, v)
                .into_iter()
                .find(|&f| !on_face(g, f, u))
                .map(|f| vec![f])
        }
        (No3vTwo3f, &[v]) | (No3vTwo4f, &[v]) => {
            let len = if id == No3vTwo3f { 3 } else { 4 };
            let faces = corner_faces_of_len(g, v, len);
            (deg(v) == 3 && faces.len() >= 2).then_some(faces)
        }
        (No333f, &[a, b, c]) | (No34f, &[a, b, c]) => {
            let (need, len) = if id == No333f { (2, 3) } else { (1, 4) };
            triangles_at(g, a)
                .into_iter()
                .filter(|&f| on_face(g, f, b) && on_face(g, f, c))
                .find(|&f| {
                    across(g, f)
                        .iter()
                        .filter(|&&x| g.face_length(x) == len)
                        .count()
                        >= need
                })
                .map(|f| vec![f])
        }
        (No3v3fEdge3f, &[v, u, w]) => {
            if deg(v) != 3 {
                return None;
            }
            let f = triangles_at(g, v)
                .into_iter()
                .find(|&f| on_face(g, f, u) && on_face(g, f, w))?;
            shared_triangle_edge(g, u, w)
                .filter(|faces| faces.contains(&f))
                .map(|faces| faces.into_iter().filter(|&x| x != f).chain([f]).collect())
        }
        (No3v3fVertex3f, &[v, u]) => {
            if deg(v) != 3 || !adj(v, u) {
                return None;
            }
            let at_u = triangles_at(g, u);
            let f = at_u.iter().copied().find(|&f| on_face(g, f, v))?;
            let h = at_u.into_iter().find(|&x| x != f && !on_face(g, x, v))?;
            Some(vec![f, h])
        }
        (No3vNear3f3v, &[v, u, w]) => {
            if deg(v) != 3 || deg(u) != 4 || deg(w) != 3 || !adj(v, u) {
                return None;
            }
            triangles_at(g, u)
                .into_iter()
                .find(|&f| on_face(g, f, w))
                .map(|f| vec![f])
        }
        (No3vNearShared3f, &[v, u, w]) => {
            if deg(v) > 3 || !adj(v, u) {
                return None;
            }
            shared_triangle_edge(g, u, w)
        }
        (No2vNearShared3f, &[v, u, w, x]) => {
            if deg(v) != 2 || !adj(v, u) || !adj(u, w) || adj(v, w) {
                return None;
            }
            shared_triangle_edge(g, w, x)
        }
        _ => None,
    }
}

fn candidates(g: &PlaneGraph, id: ConfigId) -> Vec<Vec<VertexId>> {
    use ConfigId::*;
    let n = g.vertex_count();
    let nb = |v: VertexId| g.rotation(v);
    let mut out = Vec::new();
    match id {
        Conn => out.push(Vec::new()),
        No333f | No34f => {
            for f in 0..g.face_count() {
                if g.face_length(f) == 3 {
                    let mut t = g.face_vertices(f);
                    t.sort_unstable();
                    out.push(t);
                }
            }
        }
        No1v | No2v3f | No2v4f | No3vTwo3f | No3vTwo4f => out.extend((0..n).map(|v| vec![v])),
        No22v | No23v | No33v | No2vAdj3f | No3v3fVertex3f => {
            for a in 0..n {
                out.extend(nb(a).iter().map(|&b| vec![a, b]));
            }
        }
        // both others are neighbors of the first role
        No3v3fEdge3f => {
            for v in 0..n {
                for &u in nb(v) {
                    out.extend(nb(v).iter().map(|&w| vec![v, u, w]));
                }
            }
        }
        // paths of length two
        No242v | No243v | No3vNear3f3v | No3vNearShared3f => {
            for a in 0..n {
                for &b in nb(a) {
                    out.extend(nb(b).iter().map(|&c| vec![a, b, c]));
                }
            }
        }
        No2vNearShared3f => {
            for v in 0..n {
                for &u in nb(v) {
                    for &w in nb(u) {
                        out.extend(nb(w).iter().map(|&x| vec![v, u, w, x]));
                    }
                }
            }
        }
    }
    out
}

/// All occurrences of configuration `id`, one per canonical key, in
/// lexicographic key order.
pub fn find_configuration(g: &PlaneGraph, id: ConfigId) -> Vec<MatchEmbedding> {
    let names = role_names(id);
    let mut found: BTreeMap<Vec<VertexId>, MatchEmbedding> = BTreeMap::new();
    for hosts in candidates(g, id) {
        if canonical_key(id, &hosts) != hosts || found.contains_key(&hosts) {
            continue;
        }
        if let Some(faces) = witness(g, id, &hosts) {
            let roles = names.iter().copied().zip(hosts.iter().copied()).collect();
            found.insert(
                hosts,
                MatchEmbedding {
                    config: id,
                    roles,
                    faces,
                },
            );
        }
    }
    found.into_values().collect()
}

/// First match in catalog order, if any.
pub fn find_any_reducible(g: &PlaneGraph) -> Option<MatchEmbedding> {
    ConfigId::ALL
        .iter()
        .find_map(|&id| find_configuration(g, id).into_iter().next())
}
