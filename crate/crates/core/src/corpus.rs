//! Named example graphs, exhaustive small-class enumeration, and seeded
//! random class members.

pub mod canon;
pub mod embed;

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::plane_graph::{Edge, PlaneGraph, VertexId};
use crate::square::{Adjacency, SimpleGraph};

pub use canon::{canonical_form, canonical_labeling};
pub use embed::{find_embedding, is_planar};

/// Largest vertex count `enumerate_class` accepts.
pub const MAX_ENUMERATION: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("n = {n} is outside {min}..={max}")]
    NOutOfRange { n: usize, min: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: &'static str,
    pub graph: PlaneGraph,
    pub provenance: &'static str,
}

fn drawn(points: &[(f64, f64)], edges: &[(VertexId, VertexId)]) -> PlaneGraph {
    PlaneGraph::from_straight_line(points, edges).expect("example drawings are simple")
}

fn grid(w: usize, h: usize) -> PlaneGraph {
    let id = |x: usize, y: usize| y * w + x;
    let points: Vec<(f64, f64)> = (0..h)
        .flat_map(|y| (0..w).map(move |x| (x as f64, y as f64)))
        .collect();
    let mut edges = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if x + 1 < w {
                edges.push((id(x, y), id(x + 1, y)));
            }
            if y + 1 < h {
                edges.push((id(x, y), id(x, y + 1)));
            }
        }
    }
    drawn(&points, &edges)
}

/// Regular `k`-gon of radius `r`.
fn ring(k: usize, r: f64) -> Vec<(f64, f64)> {
    (0..k)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / k as f64;
            (r * t.cos(), r * t.sin())
        })
        .collect()
}

/// `k`-gonal prism: an inner and an outer `k`-cycle joined by spokes.
fn prism(k: usize) -> PlaneGraph {
    let mut points = ring(k, 1.0);
    points.extend(ring(k, 2.0));
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, k + (i + 1) % k));
        edges.push((i, k + i));
    }
    drawn(&points, &edges)
}

/// The fixed example graphs.
pub fn named_examples() -> Vec<NamedGraph> {
    // A B C D E F G H I
    let sharpness = drawn(
        &[
            (0.0, 0.0),
            (1.0, 0.0),
            (0.0, 1.0),
            (-1.0, 0.0),
            (0.0, -1.0),
            (2.0, 2.0),
            (-2.0, 2.0),
            (2.0, -2.0),
            (-2.0, -2.0),
        ],
        &[
            (1, 0),
            (0, 3),
            (2, 0),
            (0, 4),
            (5, 1),
            (1, 7),
            (5, 2),
            (2, 6),
            (6, 3),
            (3, 8),
            (7, 4),
            (4, 8),
            (5, 6),
            (6, 8),
            (8, 7),
            (7, 5),
        ],
    );
    let k24 = drawn(
        &[
            (0.0, 1.5),
            (0.0, 0.5),
            (0.0, -0.5),
            (0.0, -1.5),
            (2.0, 0.0),
            (-2.0, 0.0),
        ],
        &[
            (4, 0),
            (0, 5),
            (4, 1),
            (1, 5),
            (4, 2),
            (2, 5),
            (4, 3),
            (3, 5),
        ],
    );
    let hexagon = ring(6, 1.0);
    let c6 = drawn(
        &hexagon,
        &(0..6).map(|i| (i, (i + 1) % 6)).collect::<Vec<_>>(),
    );
    vec![
        NamedGraph {
            name: "sharpness9",
            graph: sharpness,
            provenance: "planar, maximum degree four, nine vertices; its square is K9",
        },
        NamedGraph {
            name: "k24",
            graph: k24,
            provenance: "K_{2,4}: 2-colorable but not 2-choosable",
        },
        NamedGraph {
            name: "c6",
            graph: c6,
            provenance: "6-cycle; every vertex is a 2-vertex",
        },
        NamedGraph {
            name: "q3",
            graph: prism(4),
            provenance: "cube; 3-regular with six 4-faces",
        },
        NamedGraph {
            name: "grid3x3",
            graph: grid(3, 3),
            provenance: "3x3 square-grid patch",
        },
        NamedGraph {
            name: "hexprism",
            graph: prism(6),
            provenance: "hexagonal prism; 3-regular with two 6-faces",
        },
    ]
}

pub fn named(name: &str) -> Option<NamedGraph> {
    named_examples().into_iter().find(|g| g.name == name)
}

/// Whether a connected graph passes the class filters other than planarity.
fn hereditary_ok(g: &SimpleGraph) -> bool {
    (0..g.vertex_count()).all(|v| g.degree(v) <= 4)
        && !g.has_cycle_of_length(5).expect("5 is in range")
}

/// Every connected class member on `2..=n_max` vertices, once per
/// isomorphism class, ordered by size and then canonical edge list. Each
/// graph carries its canonical labeling and a concrete embedding.
pub fn enumerate_class(n_max: usize) -> Result<Vec<PlaneGraph>, CorpusError> {
    if !(2..=MAX_ENUMERATION).contains(&n_max) {
        return Err(CorpusError::NOutOfRange {
            n: n_max,
            min: 2,
            max: MAX_ENUMERATION,
        });
    }
    let mut out = Vec::new();
    let mut level: Vec<SimpleGraph> = vec![SimpleGraph::complete(2)];
    for n in 2..=n_max {
        for g in &level {
            out.push(find_embedding(g).expect("levels hold planar graphs"));
        }
        if n == n_max {
            break;
        }
        level = next_level(&level);
    }
    Ok(out)
}

/// Extends every graph by one vertex joined to a nonempty set of at most
/// four vertices of spare degree. Every connected graph has a vertex whose
/// removal keeps it connected, so this reaches every class member.
fn next_level(level: &[SimpleGraph]) -> Vec<SimpleGraph> {
    let mut seen: HashSet<Vec<Edge>> = HashSet::new();
    let mut keep: BTreeSet<Vec<Edge>> = BTreeSet::new();
    for g in level {
        let n = g.vertex_count();
        let open: Vec<VertexId> = (0..n).filter(|&v| g.degree(v) < 4).collect();
        for mask in 1u32..(1 << open.len()) {
            if mask.count_ones() > 4 {
                continue;
            }
            let nb = open
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| (v, n));
            let h =
                SimpleGraph::from_edges(n + 1, g.edges().into_iter().map(|e| (e.0, e.1)).chain(nb));
            if !hereditary_ok(&h) {
                continue;
            }
            let c = canonical_form(&h);
            let key = c.edges();
            if seen.insert(key.clone()) && is_planar(&c) {
                keep.insert(key);
            }
        }
    }
    let n = level.first().map_or(0, |g| g.vertex_count()) + 1;
    keep.into_iter()
        .map(|edges| SimpleGraph::from_edges(n, edges.into_iter().map(|e| (e.0, e.1))))
        .collect()
}

/// A connected patch of `n` vertices from the square lattice or the
/// honeycomb (as a brick wall), grown from the origin with a seeded RNG.
/// Both lattices are bipartite, so the patch has no odd cycles.
pub fn random_class_member(seed: u64, n: usize) -> Result<PlaneGraph, CorpusError> {
    if n < 2 {
        return Err(CorpusError::NOutOfRange {
            n,
            min: 2,
            max: usize::MAX,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let honeycomb = rng.gen_bool(0.5);
    let steps = |(x, y): (i64, i64)| {
        let mut s = vec![(x + 1, y), (x - 1, y)];
        // brick wall: only every other vertical rung exists
        if !honeycomb || (x + y).rem_euclid(2) == 0 {
            s.push((x, y + 1));
        }
        if !honeycomb || (x + y).rem_euclid(2) == 1 {
            s.push((x, y - 1));
        }
        s
    };
    let mut cells = vec![(0i64, 0i64)];
    let mut taken: HashSet<(i64, i64)> = cells.iter().copied().collect();
    while cells.len() < n {
        let &from = cells.choose(&mut rng).expect("nonempty");
        let options: Vec<_> = steps(from)
            .into_iter()
            .filter(|c| !taken.contains(c))
            .collect();
        if let Some(&c) = options.choose(&mut rng) {
            taken.insert(c);
            cells.push(c);
        }
    }
    let index = |c: &(i64, i64)| cells.iter().position(|d| d == c);
    let mut edges = Vec::new();
    for (i, &c) in cells.iter().enumerate() {
        for d in steps(c) {
            if let Some(j) = index(&d).filter(|&j| j > i) {
                edges.push((i, j));
            }
        }
    }
    let points: Vec<(f64, f64)> = cells.iter().map(|&(x, y)| (x as f64, y as f64)).collect();
    Ok(drawn(&points, &edges))
}

/// Draws `count` members with seeds `0..count` and sizes in `2..=n_max`.
pub fn lattice_sample(count: u64, n_max: usize) -> Vec<PlaneGraph> {
    (0..count)
        .map(|seed| {
            let n =
                2 + ChaCha8Rng::seed_from_u64(seed ^ 0x5eed).gen_range(0..=n_max.saturating_sub(2));
            random_class_member(seed, n).expect("n >= 2")
        })
        .collect()
}
