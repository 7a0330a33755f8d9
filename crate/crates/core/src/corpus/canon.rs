//! Canonical labeling by color refinement and individualization.

use crate::plane_graph::{Edge, VertexId};
use crate::square::{Adjacency, SimpleGraph};

/// Refines a coloring until stable. Colors keep their relative order and
/// new colors are ranked by signature, so the result is label-independent.
fn refine(g: &SimpleGraph, mut colors: Vec<usize>) -> Vec<usize> {
    let count = |c: &[usize]| {
        let mut v = c.to_vec();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..g.vertex_count())
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut ranked = sigs.clone();
        ranked.sort();
        ranked.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| ranked.binary_search(s).expect("present"))
            .collect();
        if count(&next) == count(&colors) {
            return next;
        }
        colors = next;
    }
}

fn relabeled_edges(g: &SimpleGraph, perm: &[usize]) -> Vec<Edge> {
    let mut e: Vec<Edge> = g
        .edges()
        .into_iter()
        .map(|e| Edge::new(perm[e.0], perm[e.1]))
        .collect();
    e.sort_unstable();
    e
}

fn search(g: &SimpleGraph, colors: Vec<usize>, best: &mut Option<(Vec<Edge>, Vec<usize>)>) {
    let n = g.vertex_count();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c] += 1;
    }
    let target = (0..n)
        .filter(|&c| sizes[c] > 1)
        .min_by_key(|&c| (sizes[c], c));
    let Some(cell) = target else {
        let edges = relabeled_edges(g, &colors);
        if best.as_ref().is_none_or(|(b, _)| edges < *b) {
            *best = Some((edges, colors));
        }
        return;
    };
    for v in (0..n).filter(|&v| colors[v] == cell) {
        let split = (0..n)
            .map(|u| 2 * colors[u] + usize::from(colors[u] == cell && u != v))
            .collect();
        search(g, refine(g, split), best);
    }
}

/// `perm[v]` is the canonical label of `v`; isomorphic graphs get equal
/// relabeled edge sets.
pub fn canonical_labeling(g: &SimpleGraph) -> Vec<VertexId> {
    let mut best = None;
    search(g, refine(g, vec![0; g.vertex_count()]), &mut best);
    best.map(|(_, perm)| perm).unwrap_or_default()
}

pub fn canonical_form(g: &SimpleGraph) -> SimpleGraph {
    g.permuted(&canonical_labeling(g))
}
