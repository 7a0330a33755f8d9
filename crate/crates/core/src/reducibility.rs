//! Reducible configurations and the reduction lemma checker.
//!
//! A reduction removes the vertex set `X` and edge set `Y` from a plane graph
//! `G`, recolors `R`, and keeps the precolored rest `P`. It is valid when
//!
//! 1. every edge meeting `X` lies in `Y`,
//! 2. every edge of `G^2` missing from `H^2` (where `H = (R u P, E \ Y)`)
//!    touches `X u R`,
//! 3. the subgraph of `G^2` induced on `X u R` is `f`-choosable for
//!    `f(v) = 12 - |N_{G^2}(v) n P|`,
//!
//! and `H` is strictly smaller than `G`, so that `X u Y` is nonempty. The
//! catalog below holds one generic instance per configuration: every vertex
//! that the configuration leaves unspecified is drawn with maximum degree and
//! nothing overlaps.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::choosability::{clique_f_choosable, is_f_choosable, ChoosabilityError, DemandFunction};
use crate::matcher::find_configuration;
use crate::plane_graph::{Edge, PlaneGraph, VertexId};
use crate::square::{induced_subgraph, neighbors_within2, square, Adjacency, Induced, SimpleGraph};

/// List size available at every vertex.
pub const LIST_SIZE: i64 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("vertex {0} is assigned to both X and R")]
    OverlappingRoles(VertexId),
    #[error("edge {0} in Y is not an edge of the graph")]
    UnknownEdgeInY(Edge),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown configuration `{0}`")]
    UnknownConfig(String),
    #[error(transparent)]
    Choosability(#[from] ChoosabilityError),
}

macro_rules! config_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// Catalog identifiers, in catalog order.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum ConfigId { $($variant),* }

        impl ConfigId {
            pub const ALL: [ConfigId; 19] = [$(ConfigId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self { $(ConfigId::$variant => $name),* }
            }
        }

        impl FromStr for ConfigId {
            type Err = ReductionError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($name => Ok(ConfigId::$variant),)*
                    other => Err(ReductionError::UnknownConfig(other.to_string())),
                }
            }
        }
    };
}

config_ids! {
    Conn => "conn",
    No1v => "no1v",
    No2v3f => "no2v3f",
    No2v4f => "no2v4f",
    No22v => "no22v",
    No23v => "no23v",
    No33v => "no33v",
    No242v => "no242v",
    No243v => "no243v",
    No2vAdj3f => "no2v_3f",
    No3vTwo3f => "no3v_33f",
    No333f => "no333f",
    No34f => "no34f",
    No3vTwo4f => "no3v_44f",
    No3v3fEdge3f => "no3v3f3f",
    No3v3fVertex3f => "no3v3f_3f",
    No3vNear3f3v => "no3v_3f3v",
    No3vNearShared3f => "no3v_m3f3f",
    No2vNearShared3f => "no2v__m3f3f",
}

impl Serialize for ConfigId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for ConfigId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for ConfigId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConfigKind {
    Reducible,
    Structural,
}

/// The `X`, `R`, `Y` parts of a reduction; `P` and `Q` are the complements.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Roles {
    pub x: BTreeSet<VertexId>,
    pub r: BTreeSet<VertexId>,
    pub y: BTreeSet<Edge>,
}

impl Roles {
    pub fn new(
        x: impl IntoIterator<Item = VertexId>,
        r: impl IntoIterator<Item = VertexId>,
        y: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Self {
        Roles {
            x: x.into_iter().collect(),
            r: r.into_iter().collect(),
            y: y.into_iter().map(|(a, b)| Edge::new(a, b)).collect(),
        }
    }

    /// `X u R`.
    pub fn colored(&self) -> BTreeSet<VertexId> {
        self.x.union(&self.r).copied().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpectedF {
    PerVertex(BTreeMap<VertexId, i64>),
    /// Used where the drawn labels do not pin down which vertex gets which value.
    Multiset(Vec<i64>),
}

impl ExpectedF {
    pub fn matches(&self, computed: &BTreeMap<VertexId, i64>) -> bool {
        match self {
            ExpectedF::PerVertex(map) => map == computed,
            ExpectedF::Multiset(values) => {
                let mut want = values.clone();
                want.sort_unstable();
                let mut got: Vec<i64> = computed.values().copied().collect();
                got.sort_unstable();
                want == got
            }
        }
    }
}

/// A configuration drawn "in the most general way": concrete plane graph,
/// vertex labels, and reduction roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericInstance {
    pub graph: PlaneGraph,
    pub labels: Vec<String>,
    pub roles: Roles,
}

impl GenericInstance {
    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label)
    }
}

/// What a structural case must exhibit for its derivation to hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Consequence {
    /// The instance contains this (earlier) configuration.
    Contains(ConfigId),
    /// The instance contains a 5-cycle, so it lies outside the class.
    FiveCycle,
    /// The square has no edge between components, so components color independently.
    SquareSplits,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationCase {
    pub description: &'static str,
    pub graph: PlaneGraph,
    pub consequence: Consequence,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub id: ConfigId,
    pub kind: ConfigKind,
    pub summary: &'static str,
    pub instance: Option<GenericInstance>,
    pub expected_f: Option<ExpectedF>,
    pub derivation: Vec<DerivationCase>,
}

impl Configuration {
    pub fn generic_instance(&self) -> Option<&GenericInstance> {
        self.instance.as_ref()
    }

    /// Configuration ids cited by the structural derivation.
    pub fn prerequisites(&self) -> Vec<ConfigId> {
        self.derivation
            .iter()
            .filter_map(|c| match c.consequence {
                Consequence::Contains(id) => Some(id),
                _ => None,
            })
            .collect()
    }
}

/// How condition 3 is decided.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ChoosabilityMethod {
    /// Exhaustive atom-pattern enumeration.
    #[default]
    Atoms,
    /// Sorted-demand criterion when the induced square is complete,
    /// enumeration otherwise.
    CliqueShortcut,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub condition1_ok: bool,
    pub condition2_ok: bool,
    pub smaller_ok: bool,
    pub computed_f: BTreeMap<VertexId, i64>,
    /// `G^2` induced on `X u R`; `original` maps back to host ids.
    pub induced_square: Induced,
    /// Pairs of `X u R` not adjacent in `G^2`.
    pub missing_pairs: Vec<Edge>,
    pub choosable: bool,
    /// Choosability with every missing pair added and the same demands.
    pub choosable_if_completed: bool,
    pub f_matches_expected: Option<bool>,
}

impl ReductionReport {
    pub fn passed(&self) -> bool {
        self.condition1_ok
            && self.condition2_ok
            && self.smaller_ok
            && self.choosable
            && self.choosable_if_completed
            && self.f_matches_expected.unwrap_or(true)
    }
}

/// `f(v) = 12 - |N_{G^2}(v) n P|` for every `v` in `X u R`.
pub fn f_values<G: Adjacency + ?Sized>(
    g: &G,
    x: &BTreeSet<VertexId>,
    r: &BTreeSet<VertexId>,
) -> Result<BTreeMap<VertexId, i64>, ReductionError> {
    if let Some(&v) = x.intersection(r).next() {
        return Err(ReductionError::OverlappingRoles(v));
    }
    let colored: BTreeSet<VertexId> = x.union(r).copied().collect();
    colored
        .iter()
        .map(|&v| {
            let near = neighbors_within2(g, v).map_err(|_| ReductionError::UnknownVertex(v))?;
            let in_p = near.iter().filter(|u| !colored.contains(u)).count() as i64;
            Ok((v, LIST_SIZE - in_p))
        })
        .collect()
}

/// Checks the reduction lemma's conditions for one choice of roles.
pub fn verify_reduction(
    g: &PlaneGraph,
    roles: &Roles,
    expected: Option<&ExpectedF>,
    method: ChoosabilityMethod,
) -> Result<ReductionReport, ReductionError> {
    let n = g.vertex_count();
    if let Some(&v) = roles.x.iter().chain(&roles.r).find(|&&v| v >= n) {
        return Err(ReductionError::UnknownVertex(v));
    }
    if let Some(&e) = roles.y.iter().find(|e| !g.has_edge(e.0, e.1)) {
        return Err(ReductionError::UnknownEdgeInY(e));
    }
    let computed_f = f_values(g, &roles.x, &roles.r)?;
    let colored = roles.colored();

    let condition1_ok = g
        .edges()
        .iter()
        .filter(|e| roles.x.contains(&e.0) || roles.x.contains(&e.1))
        .all(|e| roles.y.contains(e));

    let g2 = square(g);
    let h = SimpleGraph::from_edges(
        n,
        g.edges()
            .into_iter()
            .filter(|e| !roles.y.contains(e))
            .filter(|e| !roles.x.contains(&e.0) && !roles.x.contains(&e.1))
            .map(|e| (e.0, e.1)),
    );
    let h2 = square(&h);
    let condition2_ok = g2
        .edges()
        .iter()
        .filter(|e| !h2.has_edge(e.0, e.1))
        .all(|e| colored.contains(&e.0) || colored.contains(&e.1));

    let smaller_ok = !roles.x.is_empty() || !roles.y.is_empty();

    let induced = induced_subgraph(&g2, &colored).expect("roles checked in range");
    let demand = DemandFunction::new(induced.original.iter().map(|v| computed_f[v]))?;
    let k = induced.graph.vertex_count();
    let mut missing_pairs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if !induced.graph.has_edge(i, j) {
                missing_pairs.push(Edge(induced.original[i], induced.original[j]));
            }
        }
    }
    let choosable = decide(&induced.graph, &demand, method)?;
    let choosable_if_completed = if missing_pairs.is_empty() {
        choosable
    } else {
        decide(&SimpleGraph::complete(k), &demand, method)?
    };

    Ok(ReductionReport {
        condition1_ok,
        condition2_ok,
        smaller_ok,
        f_matches_expected: expected.map(|e| e.matches(&computed_f)),
        computed_f,
        induced_square: induced,
        missing_pairs,
        choosable,
        choosable_if_completed,
    })
}

fn decide(
    h: &SimpleGraph,
    f: &DemandFunction,
    method: ChoosabilityMethod,
) -> Result<bool, ReductionError> {
    if method == ChoosabilityMethod::CliqueShortcut && h.is_complete() {
        return Ok(clique_f_choosable(f.values()));
    }
    Ok(is_f_choosable(h, f)?.choosable)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub description: &'static str,
    pub consequence: Consequence,
    /// The instance really contains the structural configuration.
    pub premise_ok: bool,
    pub consequence_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EntryOutcome {
    Reduction(ReductionReport),
    Derivation(Vec<CaseResult>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogResult {
    pub id: ConfigId,
    pub kind: ConfigKind,
    pub outcome: EntryOutcome,
}

impl CatalogResult {
    pub fn passed(&self) -> bool {
        match &self.outcome {
            EntryOutcome::Reduction(r) => r.passed(),
            EntryOutcome::Derivation(cases) => {
                !cases.is_empty() && cases.iter().all(|c| c.premise_ok && c.consequence_ok)
            }
        }
    }
}

pub fn verify_catalog() -> Vec<CatalogResult> {
    verify_entries(&catalog(), ChoosabilityMethod::Atoms)
}

pub fn verify_lemma(id: ConfigId) -> CatalogResult {
    verify_entry(&configuration(id), ChoosabilityMethod::Atoms)
}

pub fn verify_entries(entries: &[Configuration], method: ChoosabilityMethod) -> Vec<CatalogResult> {
    entries.iter().map(|c| verify_entry(c, method)).collect()
}

pub fn verify_entry(c: &Configuration, method: ChoosabilityMethod) -> CatalogResult {
    let outcome = match (&c.kind, &c.instance) {
        (ConfigKind::Reducible, Some(inst)) => EntryOutcome::Reduction(
            verify_reduction(&inst.graph, &inst.roles, c.expected_f.as_ref(), method)
                .expect("catalog instances are well formed"),
        ),
        _ => EntryOutcome::Derivation(
            c.derivation
                .iter()
                .map(|case| check_case(c.id, case))
                .collect(),
        ),
    };
    CatalogResult {
        id: c.id,
        kind: c.kind,
        outcome,
    }
}

fn check_case(id: ConfigId, case: &DerivationCase) -> CaseResult {
    let g = &case.graph;
    let premise_ok = !find_configuration(g, id).is_empty();
    let consequence_ok = match case.consequence {
        Consequence::Contains(other) => !find_configuration(g, other).is_empty(),
        Consequence::FiveCycle => g.has_cycle_of_length(5).expect("5 is in range"),
        Consequence::SquareSplits => {
            let comp = g.components();
            let parts = comp.iter().max().map_or(0, |&c| c + 1);
            let sq = square(g);
            parts >= 2 && sq.edges().iter().all(|e| comp[e.0] == comp[e.1])
        }
    };
    CaseResult {
        description: case.description,
        consequence: case.consequence,
        premise_ok,
        consequence_ok,
    }
}

/// Sketch of a generic instance: core vertices placed in the plane, padding
/// hung off them as pendant trees (which never affects planarity).
struct Sketch {
    labels: Vec<String>,
    points: Vec<Option<(f64, f64)>>,
    core_edges: Vec<(VertexId, VertexId)>,
    pendants: Vec<(VertexId, VertexId)>,
}

fn polar(deg: f64, r: f64) -> (f64, f64) {
    let t = deg.to_radians();
    (r * t.cos(), r * t.sin())
}

impl Sketch {
    fn new() -> Self {
        Sketch {
            labels: Vec::new(),
            points: Vec::new(),
            core_edges: Vec::new(),
            pendants: Vec::new(),
        }
    }

    fn at(&mut self, label: &str, p: (f64, f64)) -> VertexId {
        self.labels.push(label.to_string());
        self.points.push(Some(p));
        self.labels.len() - 1
    }

    fn edge(&mut self, a: VertexId, b: VertexId) {
        self.core_edges.push((a, b));
    }

    fn degree(&self, v: VertexId) -> usize {
        self.core_edges
            .iter()
            .chain(&self.pendants)
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Hangs a new pendant vertex off `parent`, named after it.
    fn pad(&mut self, parent: VertexId) -> VertexId {
        let k = self.pendants.iter().filter(|&&(p, _)| p == parent).count();
        let label = format!("{}{}", self.labels[parent], ['m', 'n', 'o', 'p'][k]);
        self.labels.push(label);
        self.points.push(None);
        let v = self.labels.len() - 1;
        self.pendants.push((parent, v));
        v
    }

    /// Pads `v` up to `degree`.
    fn fill(&mut self, v: VertexId, degree: usize) -> Vec<VertexId> {
        let mut out = Vec::new();
        while self.degree(v) < degree {
            out.push(self.pad(v));
        }
        out
    }

    /// A pendant neighbor of `v` that is itself padded to degree 4.
    fn arm(&mut self, v: VertexId) -> VertexId {
        let a = self.pad(v);
        self.fill(a, 4);
        a
    }

    fn build(self, roles: Roles) -> GenericInstance {
        let n = self.labels.len();
        let mut rot = vec![Vec::new(); n];
        for &(a, b) in &self.core_edges {
            rot[a].push(b);
            rot[b].push(a);
        }
        for (u, list) in rot.iter_mut().enumerate() {
            let Some((x0, y0)) = self.points[u] else {
                continue;
            };
            list.sort_by(|&a, &b| {
                let (xa, ya) = self.points[a].expect("placed");
                let (xb, yb) = self.points[b].expect("placed");
                let ta = (ya - y0).atan2(xa - x0);
                let tb = (yb - y0).atan2(xb - x0);
                tb.partial_cmp(&ta).expect("finite")
            });
        }
        for &(p, c) in &self.pendants {
            rot[p].push(c);
            rot[c].push(p);
        }
        GenericInstance {
            graph: PlaneGraph::from_rotation(rot).expect("sketch is a simple graph"),
            labels: self.labels,
            roles,
        }
    }
}

fn per_vertex(pairs: &[(VertexId, i64)]) -> Option<ExpectedF> {
    Some(ExpectedF::PerVertex(pairs.iter().copied().collect()))
}

fn reducible(
    id: ConfigId,
    summary: &'static str,
    instance: GenericInstance,
    expected_f: Option<ExpectedF>,
) -> Configuration {
    Configuration {
        id,
        kind: ConfigKind::Reducible,
        summary,
        instance: Some(instance),
        expected_f,
        derivation: Vec::new(),
    }
}

/// Triangle `a b c` with `a` at angle 0, radius `r`.
fn triangle(s: &mut Sketch, r: f64) -> (VertexId, VertexId, VertexId) {
    let a = s.at("A", polar(0.0, r));
    let b = s.at("B", polar(120.0, r));
    let c = s.at("C", polar(240.0, r));
    s.edge(a, b);
    s.edge(b, c);
    s.edge(c, a);
    (a, b, c)
}

fn no1v() -> Configuration {
    let mut s = Sketch::new();
    let a = s.at("A", (1.0, 0.0));
    let b = s.at("B", (-1.0, 0.0));
    s.edge(a, b);
    s.fill(b, 4);
    let inst = s.build(Roles::new([a], [], [(a, b)]));
    reducible(ConfigId::No1v, "a 1-vertex", inst, per_vertex(&[(a, 8)]))
}

fn no2v3f() -> Configuration {
    let mut s = Sketch::new();
    let (a, b, c) = triangle(&mut s, 1.0);
    s.fill(b, 4);
    s.fill(c, 4);
    let inst = s.build(Roles::new([a], [], [(a, b), (a, c)]));
    reducible(
        ConfigId::No2v3f,
        "a 2-vertex incident to a 3-face",
        inst,
        per_vertex(&[(a, 6)]),
    )
}

fn no2v4f() -> Configuration {
    let mut s = Sketch::new();
    let a = s.at("A", polar(0.0, 1.0));
    let b = s.at("B", polar(90.0, 1.0));
    let c = s.at("C", polar(180.0, 1.0));
    let d = s.at("D", polar(270.0, 1.0));
    s.edge(a, b);
    s.edge(b, c);
    s.edge(c, d);
    s.edge(d, a);
    s.fill(b, 4);
    s.fill(d, 4);
    let inst = s.build(Roles::new([a], [], [(a, b), (a, d)]));
    reducible(
        ConfigId::No2v4f,
        "a 2-vertex incident to a 4-face",
        inst,
        per_vertex(&[(a, 5)]),
    )
}

fn no22v() -> Configuration {
    let mut s = Sketch::new();
    let a = s.at("A", (1.0, 0.0));
    let b = s.at("B", (-1.0, 0.0));
    s.edge(a, b);
    let am = s.arm(a);
    let bm = s.arm(b);
    let inst = s.build(Roles::new([a, b], [], [(a, b), (a, am), (b, bm)]));
    reducible(
        ConfigId::No22v,
        "adjacent 2-vertices",
        inst,
        per_vertex(&[(a, 7), (b, 7)]),
    )
}

fn no23v() -> Configuration {
    let mut s = Sketch::new();
    let a = s.at("A", (1.0, 0.0));
    let b = s.at("B", (-1.0, 0.0));
    s.edge(a, b);
    s.arm(a);
    s.arm(b);
    s.arm(b);
    let inst = s.build(Roles::new([], [a, b], [(a, b)]));
    reducible(
        ConfigId::No23v,
        "a 2-vertex adjacent to a 3-vertex",
        inst,
        per_vertex(&[(a, 6), (b, 3)]),
    )
}

fn no33v() -> Configuration {
    let mut s = Sketch::new();
    let a = s.at("A", (1.0, 0.0));
    let b = s.at("B", (-1.0, 0.0));
    s.edge(a, b);
    for v in [a, a, b, b] {
        s.arm(v);
    }
    let inst = s.build(Roles::new([], [a, b], [(a, b)]));
    reducible(
        ConfigId::No33v,
        "adjacent 3-vertices",
        inst,
        per_vertex(&[(a, 2), (b, 2)]),
    )
}

fn no242v() -> Configuration {
    let mut s = Sketch::new();
    let a = s.at("A", (1.0, 0.0));
    let b = s.at("B", (0.0, 0.0));
    let c = s.at("C", (-1.0, 0.0));
    s.edge(a, b);
    s.edge(b, c);
    let am = s.arm(a);
    s.arm(b);
    s.arm(b);
    let cm = s.arm(c);
    let inst = s.build(Roles::new([a, c], [b], [(a, b), (b, c), (a, am), (c, cm)]));
    reducible(
        ConfigId::No242v,
        "2-vertices at distance two",
        inst,
        per_vertex(&[(a, 6), (b, 2), (c, 6)]),
    )
}

fn no243v() -> Configuration {
    let mut s = Sketch::new();
    let a = s.at("A", (1.0, 0.0));
    let b = s.at("B", (0.0, 0.0));
    let c = s.at("C", (-1.0, 0.0));
    s.edge(a, b);
    s.edge(b, c);
    let am = s.arm(a);
    for v in [b, b, c, c] {
        s.arm(v);
    }
    let inst = s.build(Roles::new([a], [b, c], [(a, b), (a, am)]));
    reducible(
        ConfigId::No243v,
        "a 2-vertex at distance two from a 3-vertex",
        inst,
        per_vertex(&[(a, 6), (b, 1), (c, 2)]),
    )
}

fn no2v_adj_3f() -> Configuration {
    let mut s = Sketch::new();
    let (a, b, c) = triangle(&mut s, 0.75);
    let d = s.at("D", polar(0.0, 1.5));
    s.edge(a, d);
    s.arm(a);
    s.fill(b, 4);
    s.fill(c, 4);
    let dm = s.arm(d);
    let inst = s.build(Roles::new([d], [a], [(a, d), (d, dm)]));
    reducible(
        ConfigId::No2vAdj3f,
        "a 2-vertex adjacent to a vertex of a 3-face",
        inst,
        per_vertex(&[(a, 1), (d, 5)]),
    )
}

fn no3v_two_3f() -> Configuration {
    let mut s = Sketch::new();
    let a = s.at("A", (0.0, 0.0));
    let b = s.at("B", polar(0.0, 1.0));
    let c = s.at("C", polar(120.0, 1.0));
    let d = s.at("D", polar(240.0, 1.0));
    s.edge(b, c);
    s.edge(c, d);
    s.edge(b, a);
    s.edge(a, d);
    s.edge(c, a);
    for v in [b, c, d] {
        s.fill(v, 4);
    }
    let inst = s.build(Roles::new([], [a], [(c, a)]));
    reducible(
        ConfigId::No3vTwo3f,
        "a 3-vertex incident to two 3-faces",
        inst,
        per_vertex(&[(a, 4)]),
    )
}

fn no3v_two_4f() -> Configuration {
    let mut s = Sketch::new();
    let a = s.at("A", (0.0, 0.0));
    let b = s.at("B", polar(0.0, 1.0));
    let c = s.at("C", polar(90.0, 1.0));
    let d = s.at("D", polar(180.0, 1.0));
    let bc = s.at("BC", polar(45.0, std::f64::consts::SQRT_2));
    let cd = s.at("CD", polar(135.0, std::f64::consts::SQRT_2));
    s.edge(b, bc);
    s.edge(bc, c);
    s.edge(c, cd);
    s.edge(cd, d);
    s.edge(b, a);
    s.edge(a, d);
    s.edge(c, a);
    for v in [b, c, d] {
        s.fill(v, 4);
    }
    let inst = s.build(Roles::new([], [a], [(c, a)]));
    reducible(
        ConfigId::No3vTwo4f,
        "a 3-vertex incident to two 4-faces",
        inst,
        per_vertex(&[(a, 2)]),
    )
}

fn no3v3f3f() -> Configuration {
    let mut s = Sketch::new();
    let (a, b, c) = triangle(&mut s, 1.0);
    let d = s.at("D", polar(180.0, 2.0));
    s.edge(c, d);
    s.edge(d, b);
    s.pad(a);
    s.arm(b);
    s.arm(c);
    s.fill(d, 4);
    let inst = s.build(Roles::new([], [b, c], [(b, c)]));
    reducible(
        ConfigId::No3v3fEdge3f,
        "a 3-vertex on a 3-face sharing an edge with another 3-face",
        inst,
        per_vertex(&[(b, 2), (c, 2)]),
    )
}

fn no3v3f_vertex_3f() -> Configuration {
    let mut s = Sketch::new();
    let pa = polar(0.0, 1.0);
    let pb = polar(120.0, 1.0);
    let pc = polar(240.0, 1.0);
    let (a, b, c) = triangle(&mut s, 1.0);
    let d = s.at("D", (2.0 * pb.0 - pa.0, 2.0 * pb.1 - pa.1));
    let e = s.at("E", (2.0 * pb.0 - pc.0, 2.0 * pb.1 - pc.1));
    s.edge(d, e);
    s.edge(e, b);
    s.edge(b, d);
    s.arm(a);
    for v in [c, d, e] {
        s.fill(v, 4);
    }
    let inst = s.build(Roles::new([], [a, b], [(a, b)]));
    reducible(
        ConfigId::No3v3fVertex3f,
        "a 3-vertex on a 3-face sharing a vertex with another 3-face",
        inst,
        per_vertex(&[(a, 3), (b, 2)]),
    )
}

fn no3v_near_3f3v() -> Configuration {
    let mut s = Sketch::new();
    let (a, b, c) = triangle(&mut s, 1.0);
    let d = s.at("D", polar(0.0, 2.0));
    s.edge(a, d);
    s.arm(a);
    s.arm(b);
    s.fill(c, 4);
    s.fill(d, 3);
    let inst = s.build(Roles::new([], [a, b], [(a, b)]));
    reducible(
        ConfigId::No3vNear3f3v,
        "a 3-vertex adjacent to a vertex of a 3-face carrying another 3-vertex",
        inst,
        per_vertex(&[(a, 1), (b, 3)]),
    )
}

/// Two 3-faces `ABC`, `ABD` sharing the edge `AB`.
fn diamond(s: &mut Sketch) -> (VertexId, VertexId, VertexId, VertexId) {
    let (a, b, c) = triangle(s, 1.0);
    let d = s.at("D", polar(60.0, 2.0));
    s.edge(b, d);
    s.edge(d, a);
    (a, b, c, d)
}

fn no3v_near_shared_3f() -> Configuration {
    let mut s = Sketch::new();
    let (a, b, c, d) = diamond(&mut s);
    let am = s.pad(a);
    s.fill(am, 3);
    s.arm(b);
    s.fill(c, 4);
    s.fill(d, 4);
    let inst = s.build(Roles::new([], [a, b], [(a, b)]));
    reducible(
        ConfigId::No3vNearShared3f,
        "a 3-minus-vertex adjacent to an endpoint of an edge shared by two 3-faces",
        inst,
        per_vertex(&[(a, 2), (b, 1)]),
    )
}

fn no2v_near_shared_3f() -> Configuration {
    let mut s = Sketch::new();
    let (a, b, c, d) = diamond(&mut s);
    let e = s.at("E", (2.0, 0.0));
    let f = s.at("F", (3.0, 0.0));
    s.edge(a, e);
    s.edge(e, f);
    s.arm(b);
    s.fill(c, 4);
    s.fill(d, 4);
    s.arm(e);
    s.arm(e);
    s.arm(f);
    let inst = s.build(Roles::new([], [f, e, a, b], [(a, b)]));
    reducible(
        ConfigId::No2vNearShared3f,
        "a 2-vertex at distance two from an endpoint of an edge shared by two 3-faces",
        inst,
        Some(ExpectedF::Multiset(vec![1, 2, 3, 6])),
    )
}

fn drawn(points: &[(f64, f64)], edges: &[(VertexId, VertexId)]) -> PlaneGraph {
    PlaneGraph::from_straight_line(points, edges).expect("case drawings are simple")
}

fn conn() -> Configuration {
    let graph = drawn(
        &[
            (0.0, 0.0),
            (1.0, 0.0),
            (0.5, 1.0),
            (3.0, 0.0),
            (4.0, 0.0),
            (3.5, 1.0),
        ],
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
    );
    Configuration {
        id: ConfigId::Conn,
        kind: ConfigKind::Structural,
        summary: "a disconnected graph",
        instance: None,
        expected_f: None,
        derivation: vec![DerivationCase {
            description: "components share no square edge and color independently",
            graph,
            consequence: Consequence::SquareSplits,
        }],
    }
}

fn no333f() -> Configuration {
    let same_face = drawn(
        &[(0.0, 0.0), (1.0, 0.0), (0.5, 1.0)],
        &[(0, 1), (1, 2), (2, 0)],
    );
    // v = 0, f = v u w, g = u v x, h = v w y
    let fan = drawn(
        &[
            (0.0, 0.0),
            (-1.0, 1.0),
            (1.0, 1.0),
            (-1.2, -0.2),
            (1.2, -0.2),
        ],
        &[(0, 1), (0, 2), (1, 2), (1, 3), (3, 0), (0, 4), (4, 2)],
    );
    let k4 = drawn(
        &[(0.0, 0.0), (0.0, 2.0), (-2.0, -1.0), (2.0, -1.0)],
        &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)],
    );
    Configuration {
        id: ConfigId::No333f,
        kind: ConfigKind::Structural,
        summary: "a 3-face sharing two edges with 3-faces",
        instance: None,
        expected_f: None,
        derivation: vec![
            DerivationCase {
                description: "both edges shared with the same 3-face: the middle vertex is a 2-vertex on a 3-face",
                graph: same_face,
                consequence: Consequence::Contains(ConfigId::No2v3f),
            },
            DerivationCase {
                description: "two distinct 3-faces not sharing an edge: the outer cycle has length five",
                graph: fan,
                consequence: Consequence::FiveCycle,
            },
            DerivationCase {
                description: "two distinct 3-faces sharing an edge: the middle vertex is a 3-vertex on two 3-faces",
                graph: k4,
                consequence: Consequence::Contains(ConfigId::No3vTwo3f),
            },
        ],
    }
}

fn no34f() -> Configuration {
    // triangle u v w, 4-face u v w z
    let folded = drawn(
        &[(0.0, 0.0), (1.0, 1.0), (2.0, 0.0), (1.0, -1.0)],
        &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 0)],
    );
    let glued = drawn(
        &[(0.0, 0.0), (1.0, 0.0), (0.5, 0.8), (1.0, -1.0), (0.0, -1.0)],
        &[(0, 1), (1, 2), (2, 0), (1, 3), (3, 4), (4, 0)],
    );
    Configuration {
        id: ConfigId::No34f,
        kind: ConfigKind::Structural,
        summary: "a 3-face sharing an edge with a 4-face",
        instance: None,
        expected_f: None,
        derivation: vec![
            DerivationCase {
                description: "two edges shared with the same 4-face: the middle vertex is a 2-vertex on a 3-face",
                graph: folded,
                consequence: Consequence::Contains(ConfigId::No2v3f),
            },
            DerivationCase {
                description: "a single shared edge: the outer cycle has length five",
                graph: glued,
                consequence: Consequence::FiveCycle,
            },
        ],
    }
}

pub fn configuration(id: ConfigId) -> Configuration {
    match id {
        ConfigId::Conn => conn(),
        ConfigId::No1v => no1v(),
        ConfigId::No2v3f => no2v3f(),
        ConfigId::No2v4f => no2v4f(),
        ConfigId::No22v => no22v(),
        ConfigId::No23v => no23v(),
        ConfigId::No33v => no33v(),
        ConfigId::No242v => no242v(),
        ConfigId::No243v => no243v(),
        ConfigId::No2vAdj3f => no2v_adj_3f(),
        ConfigId::No3vTwo3f => no3v_two_3f(),
        ConfigId::No333f => no333f(),
        ConfigId::No34f => no34f(),
        ConfigId::No3vTwo4f => no3v_two_4f(),
        ConfigId::No3v3fEdge3f => no3v3f3f(),
        ConfigId::No3v3fVertex3f => no3v3f_vertex_3f(),
        ConfigId::No3vNear3f3v => no3v_near_3f3v(),
        ConfigId::No3vNearShared3f => no3v_near_shared_3f(),
        ConfigId::No2vNearShared3f => no2v_near_shared_3f(),
    }
}

pub fn catalog() -> Vec<Configuration> {
    ConfigId::ALL.iter().map(|&id| configuration(id)).collect()
}
