//! Exact list coloring and f-choosability for small graphs.
//!
//! `is_f_choosable` never enumerates concrete color lists. Up to renaming
//! colors, a list assignment is determined by how many colors are shared by
//! exactly the lists of each nonempty vertex subset (an *atom*). Each atom
//! vector `x` with `sum_{A contains v} x_A = f(v)` is instantiated with fresh
//! colors and handed to the backtracking colorer.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plane_graph::VertexId;
use crate::square::{Adjacency, SimpleGraph};

pub type Color = u32;

/// Largest list size any demand may ask for.
pub const MAX_DEMAND: u32 = 12;
/// Vertex guard for atom enumeration.
pub const MAX_CHOOSABILITY_VERTICES: usize = 6;
/// Vertex guard for the exact chromatic number search.
pub const MAX_CHROMATIC_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChoosabilityError {
    #[error("list assignment covers {got} vertices, graph has {expected}")]
    MissingList { expected: usize, got: usize },
    #[error("demand function covers {got} vertices, graph has {expected}")]
    DemandLengthMismatch { expected: usize, got: usize },
    #[error("demand {value} at vertex {vertex} is outside 0..={MAX_DEMAND}")]
    DemandOutOfRange { vertex: VertexId, value: i64 },
    #[error("{n} vertices exceeds the exact-search limit of {max}")]
    TooManyVertices { n: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListAssignment {
    pub lists: Vec<BTreeSet<Color>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<BTreeSet<Color>>) -> Self {
        ListAssignment { lists }
    }

    pub fn from_vecs(lists: &[Vec<Color>]) -> Self {
        ListAssignment {
            lists: lists.iter().map(|l| l.iter().copied().collect()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.lists.iter().map(BTreeSet::len).collect()
    }
}

/// Required list size per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DemandFunction {
    values: Vec<u32>,
}

impl DemandFunction {
    pub fn new(values: impl IntoIterator<Item = i64>) -> Result<Self, ChoosabilityError> {
        let values = values
            .into_iter()
            .enumerate()
            .map(|(vertex, value)| {
                if (0..=MAX_DEMAND as i64).contains(&value) {
                    Ok(value as u32)
                } else {
                    Err(ChoosabilityError::DemandOutOfRange { vertex, value })
                }
            })
            .collect::<Result<_, _>>()?;
        Ok(DemandFunction { values })
    }

    pub fn constant(n: usize, k: u32) -> Result<Self, ChoosabilityError> {
        Self::new(std::iter::repeat_n(k as i64, n))
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoosabilityVerdict {
    pub choosable: bool,
    pub bad_assignment: Option<ListAssignment>,
    pub patterns_checked: u64,
}

impl ChoosabilityVerdict {
    fn choosable(patterns_checked: u64) -> Self {
        ChoosabilityVerdict {
            choosable: true,
            bad_assignment: None,
            patterns_checked,
        }
    }

    /// Panics unless `witness` has the demanded sizes and is uncolorable.
    fn refuted(
        h: &SimpleGraph,
        f: &DemandFunction,
        witness: ListAssignment,
        patterns_checked: u64,
    ) -> Self {
        let sizes_ok = witness
            .sizes()
            .iter()
            .zip(f.values())
            .all(|(&s, &want)| s == want as usize);
        assert!(sizes_ok, "witness sizes differ from the demand");
        assert!(
            l_coloring(h, &witness).expect("witness covers h").is_none(),
            "witness admits a coloring"
        );
        ChoosabilityVerdict {
            choosable: false,
            bad_assignment: Some(witness),
            patterns_checked,
        }
    }
}

/// Finds a proper coloring with `coloring[v] in lists[v]`, or `None`.
pub fn l_coloring(
    h: &SimpleGraph,
    lists: &ListAssignment,
) -> Result<Option<Vec<Color>>, ChoosabilityError> {
    let n = h.vertex_count();
    if lists.len() != n {
        return Err(ChoosabilityError::MissingList {
            expected: n,
            got: lists.len(),
        });
    }
    let mut coloring: Vec<Option<Color>> = vec![None; n];
    if color_rec(h, lists, &mut coloring, 0) {
        Ok(Some(
            coloring
                .into_iter()
                .map(|c| c.expect("all colored"))
                .collect(),
        ))
    } else {
        Ok(None)
    }
}

fn available(
    h: &SimpleGraph,
    lists: &ListAssignment,
    coloring: &[Option<Color>],
    v: VertexId,
) -> Vec<Color> {
    lists.lists[v]
        .iter()
        .copied()
        .filter(|&c| h.neighbors(v).iter().all(|&u| coloring[u] != Some(c)))
        .collect()
}

fn color_rec(
    h: &SimpleGraph,
    lists: &ListAssignment,
    coloring: &mut [Option<Color>],
    colored: usize,
) -> bool {
    if colored == coloring.len() {
        return true;
    }
    // most constrained uncolored vertex
    let mut best: Option<(VertexId, Vec<Color>)> = None;
    for v in 0..coloring.len() {
        if coloring[v].is_some() {
            continue;
        }
        let avail = available(h, lists, coloring, v);
        if avail.is_empty() {
            return false;
        }
        if best.as_ref().is_none_or(|(_, b)| avail.len() < b.len()) {
            best = Some((v, avail));
        }
    }
    let (v, avail) = best.expect("an uncolored vertex remains");
    for c in avail {
        coloring[v] = Some(c);
        if color_rec(h, lists, coloring, colored + 1) {
            return true;
        }
    }
    coloring[v] = None;
    false
}

/// Decides whether every assignment of lists with sizes `f` admits a proper
/// list coloring of `h`, returning an uncolorable assignment when not.
pub fn is_f_choosable(
    h: &SimpleGraph,
    f: &DemandFunction,
) -> Result<ChoosabilityVerdict, ChoosabilityError> {
    let n = h.vertex_count();
    if n > MAX_CHOOSABILITY_VERTICES {
        return Err(ChoosabilityError::TooManyVertices {
            n,
            max: MAX_CHOOSABILITY_VERTICES,
        });
    }
    if f.len() != n {
        return Err(ChoosabilityError::DemandLengthMismatch {
            expected: n,
            got: f.len(),
        });
    }
    let mut checked = 0u64;
    let mut witness = None;
    let _ = for_each_pattern(f.values(), &mut |atoms| {
        checked += 1;
        let lists = instantiate(n, atoms);
        if l_coloring(h, &lists).expect("sizes match").is_none() {
            witness = Some(lists);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(match witness {
        Some(w) => ChoosabilityVerdict::refuted(h, f, w, checked),
        None => ChoosabilityVerdict::choosable(checked),
    })
}

pub fn is_k_choosable(h: &SimpleGraph, k: u32) -> Result<ChoosabilityVerdict, ChoosabilityError> {
    is_f_choosable(h, &DemandFunction::constant(h.vertex_count(), k)?)
}

/// Atom multiplicities as `(vertex mask, count)` pairs with nonzero count.
type AtomVector = [(u32, u32)];

/// Calls `visit` once per atom vector meeting the demands. Atoms are grouped
/// by their smallest member; once the atoms starting at `v` are fixed, the
/// demand of `v` must be used up exactly.
fn for_each_pattern(
    demand: &[u32],
    visit: &mut dyn FnMut(&AtomVector) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let n = demand.len();
    let groups: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            let higher = (n - v - 1) as u32;
            (0..1u32 << higher)
                .map(|s| (1 << v) | (s << (v + 1)))
                .collect()
        })
        .collect();
    let mut remaining = demand.to_vec();
    let mut chosen = Vec::new();
    distribute(&groups, 0, 0, &mut remaining, &mut chosen, visit)
}

fn distribute(
    groups: &[Vec<u32>],
    v: usize,
    atom: usize,
    remaining: &mut [u32],
    chosen: &mut Vec<(u32, u32)>,
    visit: &mut dyn FnMut(&AtomVector) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if v == groups.len() {
        return visit(chosen);
    }
    if remaining[v] == 0 {
        return distribute(groups, v + 1, 0, remaining, chosen, visit);
    }
    if atom == groups[v].len() {
        return ControlFlow::Continue(());
    }
    let mask = groups[v][atom];
    let members: Vec<usize> = (0..remaining.len())
        .filter(|&u| mask >> u & 1 == 1)
        .collect();
    let cap = members
        .iter()
        .map(|&u| remaining[u])
        .min()
        .expect("atom is nonempty");
    for x in (0..=cap).rev() {
        for &u in &members {
            remaining[u] -= x;
        }
        if x > 0 {
            chosen.push((mask, x));
        }
        let flow = distribute(groups, v, atom + 1, remaining, chosen, visit);
        if x > 0 {
            chosen.pop();
        }
        for &u in &members {
            remaining[u] += x;
        }
        flow?;
    }
    ControlFlow::Continue(())
}

fn instantiate(n: usize, atoms: &AtomVector) -> ListAssignment {
    let mut lists = vec![BTreeSet::new(); n];
    let mut next: Color = 0;
    for &(mask, count) in atoms {
        for _ in 0..count {
            for (u, list) in lists.iter_mut().enumerate() {
                if mask >> u & 1 == 1 {
                    list.insert(next);
                }
            }
            next += 1;
        }
    }
    ListAssignment { lists }
}

/// Choosability of a complete graph with the given demands: sorted ascending,
/// the `i`-th demand (1-based) must be at least `i`.
pub fn clique_f_choosable(demands: &[u32]) -> bool {
    let mut sorted = demands.to_vec();
    sorted.sort_unstable();
    sorted.iter().enumerate().all(|(i, &d)| d as usize > i)
}

pub fn chromatic_number(h: &SimpleGraph) -> Result<usize, ChoosabilityError> {
    let n = h.vertex_count();
    if n > MAX_CHROMATIC_VERTICES {
        return Err(ChoosabilityError::TooManyVertices {
            n,
            max: MAX_CHROMATIC_VERTICES,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut colors = vec![usize::MAX; n];
    Ok((1..=n)
        .find(|&k| k_colorable(h, k, &mut colors, 0, 0))
        .expect("n colors always suffice"))
}

fn k_colorable(h: &SimpleGraph, k: usize, colors: &mut [usize], v: usize, used: usize) -> bool {
    if v == colors.len() {
        return true;
    }
    // a fresh color may only be the next unused one
    for c in 0..k.min(used + 1) {
        if h.neighbors(v).iter().all(|&u| u >= v || colors[u] != c) {
            colors[v] = c;
            if k_colorable(h, k, colors, v + 1, used.max(c + 1)) {
                return true;
            }
        }
    }
    false
}
