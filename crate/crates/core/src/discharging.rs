//! Exact discharging: balanced charges, the face-to-sink rules, and the
//! per-face edge ledgers that implement them.
//!
//! All amounts are integer twelfths. Vertices start at `d(v) - 4`, faces at
//! `l(f) - 4`; on a connected plane graph the total is `-8`.
//!
//! Rules (applied at once, from the initial incidences, per walk occurrence):
//!
//! * `R1`: a 2-vertex takes 1 from each incident 6+-face;
//! * `R2`: a 3-vertex takes 1/2 from each incident 6+-face;
//! * `R3`: a 3-face sharing an edge with some 3-face takes 1/2 per shared
//!   edge with a 6+-face;
//! * `R4`: any other 3-face takes 1/3 per shared edge with a 6+-face.
//!
//! Inside a 6+-face the same amounts are routed through its edges, each
//! seeded with 1/3, by the sub-rules `SubR1`..`SubR5`.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::plane_graph::{Edge, FaceId, PlaneGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum DischargeError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("rotation system is not a plane embedding")]
    NotPlanar,
    #[error("face {face} has length {len}; sub-rules need a 6+-face")]
    NotBigFace { face: FaceId, len: usize },
    #[error("unknown face {0}")]
    UnknownFace(FaceId),
    #[error("denominator {0} does not divide 12")]
    BadDenominator(i64),
}

/// An exact charge, stored as a whole number of twelfths.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Charge(i64);

impl Charge {
    pub const ZERO: Charge = Charge(0);
    pub const ONE: Charge = Charge(12);
    pub const HALF: Charge = Charge(6);
    pub const THIRD: Charge = Charge(4);
    pub const QUARTER: Charge = Charge(3);
    pub const SIXTH: Charge = Charge(2);

    /// `num / den`; `den` must be a positive divisor of 12.
    pub fn new(num: i64, den: i64) -> Result<Self, DischargeError> {
        if den <= 0 || 12 % den != 0 {
            return Err(DischargeError::BadDenominator(den));
        }
        Ok(Charge(num * (12 / den)))
    }

    pub fn whole(n: i64) -> Self {
        Charge(12 * n)
    }

    pub fn from_twelfths(t: i64) -> Self {
        Charge(t)
    }

    pub fn twelfths(self) -> i64 {
        self.0
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = gcd(self.0, 12).max(1);
        let (num, den) = (self.0 / g, 12 / g);
        if den == 1 {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

impl Serialize for Charge {
    /// Serialized as the exact twelfths count.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i64(self.0)
    }
}

impl Add for Charge {
    type Output = Charge;
    fn add(self, o: Charge) -> Charge {
        Charge(self.0 + o.0)
    }
}

impl Sub for Charge {
    type Output = Charge;
    fn sub(self, o: Charge) -> Charge {
        Charge(self.0 - o.0)
    }
}

impl Neg for Charge {
    type Output = Charge;
    fn neg(self) -> Charge {
        Charge(-self.0)
    }
}

impl Mul<i64> for Charge {
    type Output = Charge;
    fn mul(self, k: i64) -> Charge {
        Charge(self.0 * k)
    }
}

impl AddAssign for Charge {
    fn add_assign(&mut self, o: Charge) {
        self.0 += o.0;
    }
}

impl SubAssign for Charge {
    fn sub_assign(&mut self, o: Charge) {
        self.0 -= o.0;
    }
}

impl Sum for Charge {
    fn sum<I: Iterator<Item = Charge>>(iter: I) -> Charge {
        iter.fold(Charge::ZERO, Add::add)
    }
}

/// Something that can hold charge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Element {
    Vertex {
        id: VertexId,
    },
    Face {
        id: FaceId,
    },
    /// The `position`-th edge on the boundary walk of `face`.
    Edge {
        face: FaceId,
        position: usize,
    },
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex { id } => write!(f, "v{id}"),
            Element::Face { id } => write!(f, "f{id}"),
            Element::Edge { face, position } => write!(f, "f{face}.e{position}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    SubR1,
    SubR2,
    SubR3,
    SubR4,
    SubR5,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub rule: Rule,
    pub from: Element,
    pub to: Element,
    pub amount: Charge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeState {
    pub vertex_charge: Vec<Charge>,
    pub face_charge: Vec<Charge>,
    pub log: Vec<Transfer>,
}

impl ChargeState {
    pub fn total(&self) -> Charge {
        self.vertex_charge
            .iter()
            .chain(&self.face_charge)
            .copied()
            .sum()
    }

    fn apply(&mut self, t: Transfer) {
        for (el, sign) in [(t.from, -1), (t.to, 1)] {
            match el {
                Element::Vertex { id } => self.vertex_charge[id] += t.amount * sign,
                Element::Face { id } => self.face_charge[id] += t.amount * sign,
                Element::Edge { .. } => unreachable!("global state holds no edges"),
            }
        }
        self.log.push(t);
    }
}

/// Total charge of any connected plane graph.
pub const EULER_TOTAL: Charge = Charge(-96);

/// Balanced charging: `d(v) - 4` on vertices, `l(f) - 4` on faces.
pub fn initial_charges(g: &PlaneGraph) -> Result<ChargeState, DischargeError> {
    if !g.is_connected() {
        return Err(DischargeError::Disconnected);
    }
    if !g.euler_ok() {
        return Err(DischargeError::NotPlanar);
    }
    Ok(ChargeState {
        vertex_charge: (0..g.vertex_count())
            .map(|v| Charge::whole(g.deg(v) as i64 - 4))
            .collect(),
        face_charge: (0..g.face_count())
            .map(|f| Charge::whole(g.face_length(f) as i64 - 4))
            .collect(),
        log: Vec::new(),
    })
}

fn is_big(g: &PlaneGraph, f: FaceId) -> bool {
    g.face_length(f) >= 6
}

/// Faces across each walk edge of `f`, in walk order.
fn faces_across(g: &PlaneGraph, f: FaceId) -> Vec<FaceId> {
    g.face(f)
        .walk
        .iter()
        .map(|&h| g.face_of(g.half_edge(h).twin))
        .collect()
}

/// A 3-face sharing at least one edge with a 3-face.
fn triangle_touches_triangle(g: &PlaneGraph, t: FaceId) -> bool {
    faces_across(g, t).iter().any(|&x| g.face_length(x) == 3)
}

/// Applies R1..R4 simultaneously to a fresh state.
pub fn apply_rules(g: &PlaneGraph, s: &ChargeState) -> ChargeState {
    let mut out = s.clone();
    for f in 0..g.face_count() {
        if !is_big(g, f) {
            continue;
        }
        let from = Element::Face { id: f };
        for v in g.face_vertices(f) {
            let to = Element::Vertex { id: v };
            match g.deg(v) {
                2 => out.apply(Transfer {
                    rule: Rule::R1,
                    from,
                    to,
                    amount: Charge::ONE,
                }),
                3 => out.apply(Transfer {
                    rule: Rule::R2,
                    from,
                    to,
                    amount: Charge::HALF,
                }),
                _ => {}
            }
        }
        for t in faces_across(g, f) {
            if g.face_length(t) != 3 {
                continue;
            }
            let to = Element::Face { id: t };
            let (rule, amount) = if triangle_touches_triangle(g, t) {
                (Rule::R3, Charge::HALF)
            } else {
                (Rule::R4, Charge::THIRD)
            };
            out.apply(Transfer {
                rule,
                from,
                to,
                amount,
            });
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeEntry {
    pub position: usize,
    pub edge: Edge,
    pub value: Charge,
}

/// A sub-rule payment from one walk edge of the audited face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Receipt {
    pub rule: Rule,
    pub from_position: usize,
    pub sink: Element,
    /// Walk position of the incidence that earns the payment.
    pub occurrence: usize,
    pub amount: Charge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceAudit {
    pub face: FaceId,
    pub length: usize,
    pub edges: Vec<EdgeEntry>,
    pub receipts: Vec<Receipt>,
    /// Charge left in the face after seeding its edges.
    pub residual: Charge,
    /// Sub-rule receipts per sink equal the R1..R4 draws from this face.
    pub reconciled: bool,
}

impl FaceAudit {
    pub fn negative_edges(&self) -> impl Iterator<Item = &EdgeEntry> {
        self.edges.iter().filter(|e| e.value.is_negative())
    }

    pub fn seeded_total(&self) -> Charge {
        Charge::THIRD * self.length as i64
    }

    /// Total received by each sink over all its incidences.
    pub fn sink_totals(&self) -> BTreeMap<Element, Charge> {
        let mut out = BTreeMap::new();
        for r in &self.receipts {
            *out.entry(r.sink).or_insert(Charge::ZERO) += r.amount;
        }
        out
    }
}

/// Routes the face's R1..R4 payments through its edges.
pub fn edge_level_audit(g: &PlaneGraph, f: FaceId) -> Result<FaceAudit, DischargeError> {
    if f >= g.face_count() {
        return Err(DischargeError::UnknownFace(f));
    }
    let l = g.face_length(f);
    if l < 6 {
        return Err(DischargeError::NotBigFace { face: f, len: l });
    }
    let walk = &g.face(f).walk;
    let verts = g.face_vertices(f);
    let across = faces_across(g, f);
    let tri = |i: usize| g.face_length(across[i % l]) == 3;
    let at = |i: isize| i.rem_euclid(l as isize) as usize;

    let mut receipts = Vec::new();
    let mut pay = |rule, from: isize, sink, occurrence, amount| {
        receipts.push(Receipt {
            rule,
            from_position: at(from),
            sink,
            occurrence,
            amount,
        });
    };

    for i in 0..l {
        let ii = i as isize;
        // 3-face across edge i
        let t = across[i];
        if g.face_length(t) == 3 {
            let sink = Element::Face { id: t };
            pay(Rule::SubR1, ii, sink, i, Charge::THIRD);
            // t's walk runs v_{i+1} -> v_i -> w -> v_{i+1}
            let back = g.half_edge(walk[i]).twin;
            let from_start = g.face_next(back);
            let to_end = g.face_next(from_start);
            let beyond = |e| g.face_length(g.face_of(g.half_edge(e).twin)) == 3;
            let start_side = beyond(from_start);
            let end_side = beyond(to_end);
            if start_side {
                pay(Rule::SubR2, ii - 1, sink, i, Charge::SIXTH);
            } else if end_side {
                pay(Rule::SubR2, ii + 1, sink, i, Charge::SIXTH);
            }
        }
        // the vertex at the corner between edges i - 1 and i
        let v = verts[i];
        let sink = Element::Vertex { id: v };
        match g.deg(v) {
            2 => {
                pay(Rule::SubR5, ii - 1, sink, i, Charge::THIRD);
                pay(Rule::SubR5, ii, sink, i, Charge::THIRD);
                pay(Rule::SubR5, ii - 2, sink, i, Charge::SIXTH);
                pay(Rule::SubR5, ii + 1, sink, i, Charge::SIXTH);
            }
            3 if tri(at(ii - 1)) => {
                pay(Rule::SubR3, ii, sink, i, Charge::THIRD);
                pay(Rule::SubR3, ii - 2, sink, i, Charge::SIXTH);
            }
            3 if tri(i) => {
                pay(Rule::SubR3, ii - 1, sink, i, Charge::THIRD);
                pay(Rule::SubR3, ii + 1, sink, i, Charge::SIXTH);
            }
            3 => {
                pay(Rule::SubR4, ii - 1, sink, i, Charge::QUARTER);
                pay(Rule::SubR4, ii, sink, i, Charge::QUARTER);
            }
            _ => {}
        }
    }

    let mut values = vec![Charge::THIRD; l];
    for r in &receipts {
        values[r.from_position] -= r.amount;
    }
    let edges = values
        .into_iter()
        .enumerate()
        .map(|(position, value)| {
            let he = g.half_edge(walk[position]);
            EdgeEntry {
                position,
                edge: Edge::new(he.origin, he.target),
                value,
            }
        })
        .collect();

    let mut audit = FaceAudit {
        face: f,
        length: l,
        edges,
        receipts,
        residual: Charge::whole(l as i64 - 4) - Charge::THIRD * l as i64,
        reconciled: false,
    };
    audit.reconciled = reconcile(g, &audit);
    Ok(audit)
}

/// Compares the audit's per-sink receipts with what `apply_rules` draws
/// from the same face.
fn reconcile(g: &PlaneGraph, audit: &FaceAudit) -> bool {
    let init = ChargeState {
        vertex_charge: vec![Charge::ZERO; g.vertex_count()],
        face_charge: vec![Charge::ZERO; g.face_count()],
        log: Vec::new(),
    };
    let mut drawn: BTreeMap<Element, Charge> = BTreeMap::new();
    for t in apply_rules(g, &init).log {
        if t.from == (Element::Face { id: audit.face }) {
            *drawn.entry(t.to).or_insert(Charge::ZERO) += t.amount;
        }
    }
    let seeded_ok = audit.seeded_total() + audit.residual == Charge::whole(audit.length as i64 - 4);
    seeded_ok && drawn == audit.sink_totals()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativeElement {
    pub element: Element,
    pub charge: Charge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinalAudit {
    pub state: ChargeState,
    pub faces: Vec<FaceAudit>,
    /// Vertices, small faces, and big-face edges ending below zero.
    pub negative: Vec<NegativeElement>,
    /// Conservation holds globally and inside every audited face.
    pub reconciled: bool,
}

/// Runs the whole discharging and lists every element that ends negative.
pub fn final_audit(g: &PlaneGraph) -> Result<FinalAudit, DischargeError> {
    let state = apply_rules(g, &initial_charges(g)?);
    let mut faces = Vec::new();
    for f in 0..g.face_count() {
        if is_big(g, f) {
            faces.push(edge_level_audit(g, f)?);
        }
    }
    let mut negative = Vec::new();
    for (v, &c) in state.vertex_charge.iter().enumerate() {
        if c.is_negative() {
            negative.push(NegativeElement {
                element: Element::Vertex { id: v },
                charge: c,
            });
        }
    }
    for (f, &c) in state.face_charge.iter().enumerate() {
        if !is_big(g, f) && c.is_negative() {
            negative.push(NegativeElement {
                element: Element::Face { id: f },
                charge: c,
            });
        }
    }
    let mut reconciled = state.total() == EULER_TOTAL;
    for a in &faces {
        let edge_sum: Charge = a.edges.iter().map(|e| e.value).sum();
        reconciled &= a.reconciled
            && !a.residual.is_negative()
            && a.residual + edge_sum == state.face_charge[a.face];
        if a.residual.is_negative() {
            negative.push(NegativeElement {
                element: Element::Face { id: a.face },
                charge: a.residual,
            });
        }
        for e in a.negative_edges() {
            negative.push(NegativeElement {
                element: Element::Edge {
                    face: a.face,
                    position: e.position,
                },
                charge: e.value,
            });
        }
    }
    negative.sort_by_key(|n| n.element);
    Ok(FinalAudit {
        state,
        faces,
        negative,
        reconciled,
    })
}
