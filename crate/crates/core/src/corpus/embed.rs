//! Plane embedding search by edge insertion.
//!
//! Edges are inserted so that each new edge touches what is already drawn.
//! An edge to a fresh vertex may go into any corner of its drawn endpoint;
//! an edge between two drawn vertices must split a face that has a corner at
//! both. Every plane embedding restricts to an embedding of each connected
//! prefix, so exhausting these choices decides planarity.

use crate::plane_graph::{PlaneGraph, VertexId};
use crate::square::{Adjacency, SimpleGraph};

/// Insertion order: edges closing a cycle among drawn vertices first,
/// then edges reaching a new vertex, component by component.
fn insertion_order(g: &SimpleGraph) -> Vec<(VertexId, VertexId)> {
    let n = g.vertex_count();
    let mut drawn = vec![false; n];
    let mut pending = g.edges();
    let mut order = Vec::with_capacity(pending.len());
    while !pending.is_empty() {
        let pick = pending
            .iter()
            .position(|e| drawn[e.0] && drawn[e.1])
            .or_else(|| pending.iter().position(|e| drawn[e.0] || drawn[e.1]))
            .unwrap_or(0);
        let e = pending.remove(pick);
        drawn[e.0] = true;
        drawn[e.1] = true;
        order.push((e.0, e.1));
    }
    order
}

fn extend(rot: &mut Vec<Vec<VertexId>>, order: &[(VertexId, VertexId)]) -> bool {
    let Some((&(u, w), rest)) = order.split_first() else {
        return true;
    };
    match (rot[u].is_empty(), rot[w].is_empty()) {
        (true, true) => {
            rot[u].push(w);
            rot[w].push(u);
            if extend(rot, rest) {
                return true;
            }
            rot[u].clear();
            rot[w].clear();
            false
        }
        (false, false) => {
            let pg = PlaneGraph::from_rotation(rot.clone()).expect("partial rotation is simple");
            let (cu, cw) = (pg.corner_faces(u), pg.corner_faces(w));
            for (i, fu) in cu.iter().enumerate() {
                for (j, fw) in cw.iter().enumerate() {
                    if fu != fw {
                        continue;
                    }
                    rot[u].insert(i + 1, w);
                    rot[w].insert(j + 1, u);
                    if extend(rot, rest) {
                        return true;
                    }
                    rot[u].remove(i + 1);
                    rot[w].remove(j + 1);
                }
            }
            false
        }
        (u_fresh, _) => {
            let (a, x) = if u_fresh { (w, u) } else { (u, w) };
            for i in 0..rot[a].len() {
                rot[a].insert(i + 1, x);
                rot[x].push(a);
                if extend(rot, rest) {
                    return true;
                }
                rot[a].remove(i + 1);
                rot[x].clear();
            }
            false
        }
    }
}

/// A plane embedding of `g`, or `None` if `g` is not planar.
pub fn find_embedding(g: &SimpleGraph) -> Option<PlaneGraph> {
    let mut rot = vec![Vec::new(); g.vertex_count()];
    extend(&mut rot, &insertion_order(g))
        .then(|| PlaneGraph::from_rotation(rot).expect("search keeps rotations simple"))
}

pub fn is_planar(g: &SimpleGraph) -> bool {
    find_embedding(g).is_some()
}
