//! Combinatorial drawings of `C_m × C_n` on the sphere.
//!
//! A drawing is a rotation system (counter-clockwise order of edge ends at
//! each vertex) plus, for every edge, its crossings in order from tail to
//! head. Each crossing carries a chirality bit.

mod canonical;
mod io;
mod perturb;
mod planar;
mod validate;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::product_graph::{EdgeId, ProductGraph, VertexId};

pub use canonical::canonical;
pub use perturb::{fuzz_drawing, perturb, Perturbation, Route, RouteCrossing};
pub use planar::{CrossingRecord, Dart, NodeKind, PlanarMap, Segment};
pub use validate::{validate, ValidationReport, Violation};

/// Orientation of a crossing between `e < f`.
///
/// `Plus` means `f` passes from the left of `e` to its right, both edges
/// traversed from tail to head.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chirality {
    Plus,
    Minus,
}

impl Chirality {
    pub fn flip(self) -> Self {
        match self {
            Chirality::Plus => Chirality::Minus,
            Chirality::Minus => Chirality::Plus,
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            Chirality::Plus => 1,
            Chirality::Minus => -1,
        }
    }

    /// Chirality of the pair `{a, b}` given that `b` passes `a` left to right
    /// (`ltr`) or right to left.
    pub fn from_passage(a: EdgeId, b: EdgeId, ltr: bool) -> Self {
        // b passing a left-to-right is the same event as a passing b right-to-left.
        let first_sees_ltr = if a <= b { ltr } else { !ltr };
        if first_sees_ltr {
            Chirality::Plus
        } else {
            Chirality::Minus
        }
    }
}

impl Serialize for Chirality {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            Chirality::Plus => "+",
            Chirality::Minus => "-",
        })
    }
}

impl<'de> Deserialize<'de> for Chirality {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        match s.as_str() {
            "+" => Ok(Chirality::Plus),
            "-" | "\u{2212}" => Ok(Chirality::Minus),
            other => Err(serde::de::Error::custom(format!("bad chirality {other:?}"))),
        }
    }
}

/// One entry of an edge's crossing list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossingRef {
    pub other: EdgeId,
    pub chirality: Chirality,
}

/// A crossing named by its unordered edge pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossingId {
    a: EdgeId,
    b: EdgeId,
}

impl CrossingId {
    pub fn new(e: EdgeId, f: EdgeId) -> Self {
        if e <= f {
            CrossingId { a: e, b: f }
        } else {
            CrossingId { a: f, b: e }
        }
    }

    pub fn edges(self) -> (EdgeId, EdgeId) {
        (self.a, self.b)
    }

    pub fn involves(self, e: EdgeId) -> bool {
        self.a == e || self.b == e
    }

    /// The partner of `e` in this pair.
    pub fn other(self, e: EdgeId) -> Option<EdgeId> {
        if self.a == e {
            Some(self.b)
        } else if self.b == e {
            Some(self.a)
        } else {
            None
        }
    }
}

impl fmt::Display for CrossingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.a, self.b)
    }
}

impl Serialize for CrossingId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.a, self.b].serialize(s)
    }
}

impl<'de> Deserialize<'de> for CrossingId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [a, b] = <[EdgeId; 2]>::deserialize(d)?;
        Ok(CrossingId::new(a, b))
    }
}

/// A crossing met while walking along a blue cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraversalStep {
    pub crossing: CrossingId,
    pub blue: EdgeId,
    pub other: EdgeId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawing {
    graph: ProductGraph,
    rotations: Vec<[EdgeId; 4]>,
    crossings: Vec<Vec<CrossingRef>>,
}

impl Drawing {
    /// Assembles a drawing, rejecting structurally inconsistent input.
    ///
    /// `rotations` is indexed by vertex index, `crossings` by edge index.
    pub fn from_parts(
        graph: ProductGraph,
        rotations: Vec<[EdgeId; 4]>,
        crossings: Vec<Vec<CrossingRef>>,
    ) -> Result<Self, Error> {
        if rotations.len() != graph.vertex_count() {
            return Err(Error::Malformed(format!(
                "expected {} rotations, got {}",
                graph.vertex_count(),
                rotations.len()
            )));
        }
        if crossings.len() != graph.edge_count() {
            return Err(Error::Malformed(format!(
                "expected {} crossing lists, got {}",
                graph.edge_count(),
                crossings.len()
            )));
        }
        for (idx, rot) in rotations.iter().enumerate() {
            let v = graph.vertex_at(idx);
            let mut got = rot.to_vec();
            let mut want = graph.incident(v).to_vec();
            got.sort();
            want.sort();
            if got != want {
                return Err(Error::Malformed(format!("rotation at {v} is not its four edge ends")));
            }
        }
        for (idx, list) in crossings.iter().enumerate() {
            for c in list {
                if !graph.contains_edge(c.other) {
                    return Err(Error::Malformed(format!(
                        "edge {} crosses unknown edge {}",
                        graph.edge_at(idx),
                        c.other
                    )));
                }
            }
        }
        // Rotations are cyclic; store each starting from its smallest edge.
        let rotations = rotations
            .into_iter()
            .map(|mut r| {
                let k = (0..4).min_by_key(|&k| r[k]).unwrap();
                r.rotate_left(k);
                r
            })
            .collect();
        let d = Drawing { graph, rotations, crossings };
        d.check_consistency()?;
        Ok(d)
    }

    /// Each crossing must be listed by both edges with the same chirality.
    /// The k-th mention of `f` on `e` is matched with the k-th mention of `e` on `f`.
    fn check_consistency(&self) -> Result<(), Error> {
        for e in self.graph.edges() {
            let list = self.crossings_of(e);
            let mut seen = BTreeSet::new();
            for c in list {
                let f = c.other;
                if !seen.insert(f) {
                    continue;
                }
                let on_e: Vec<Chirality> =
                    list.iter().filter(|x| x.other == f).map(|x| x.chirality).collect();
                if e == f {
                    if on_e.len() % 2 != 0 || on_e.chunks(2).any(|p| p[0] != p[1]) {
                        return Err(Error::Malformed(format!(
                            "self-crossings of {e} do not pair up"
                        )));
                    }
                    continue;
                }
                let on_f: Vec<Chirality> = self
                    .crossings_of(f)
                    .iter()
                    .filter(|x| x.other == e)
                    .map(|x| x.chirality)
                    .collect();
                if on_e != on_f {
                    return Err(Error::Malformed(format!(
                        "crossings between {e} and {f} are not mutually consistent"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> &ProductGraph {
        &self.graph
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Counter-clockwise order of edge ends at `v`.
    pub fn rotation(&self, v: VertexId) -> &[EdgeId; 4] {
        &self.rotations[self.graph.vertex_index(v)]
    }

    /// Crossings along `e`, ordered from tail to head.
    pub fn crossings_of(&self, e: EdgeId) -> &[CrossingRef] {
        &self.crossings[self.graph.edge_index(e)]
    }

    pub(crate) fn rotations(&self) -> &[[EdgeId; 4]] {
        &self.rotations
    }

    pub(crate) fn crossing_lists(&self) -> &[Vec<CrossingRef>] {
        &self.crossings
    }

    /// Distinct crossing pairs, sorted.
    pub fn crossing_ids(&self) -> Vec<CrossingId> {
        let mut set = BTreeSet::new();
        for e in self.graph.edges() {
            for c in self.crossings_of(e) {
                set.insert(CrossingId::new(e, c.other));
            }
        }
        set.into_iter().collect()
    }

    /// Number of crossings, counting each list entry pair once.
    pub fn crossing_count(&self) -> usize {
        let total: usize = self.crossings.iter().map(Vec::len).sum();
        total / 2
    }

    pub fn chirality_of(&self, id: CrossingId) -> Option<Chirality> {
        let (a, b) = id.edges();
        self.crossings_of(a).iter().find(|c| c.other == b).map(|c| c.chirality)
    }

    /// A copy with the chirality of crossing `id` reversed on both edges.
    pub fn with_flipped_chirality(&self, id: CrossingId) -> Result<Drawing, Error> {
        let (a, b) = id.edges();
        let mut out = self.clone();
        let mut found = false;
        for e in [a, b] {
            let idx = self.graph.edge_index(e);
            for c in out.crossings[idx].iter_mut() {
                if c.other == id.other(e).unwrap_or(e) {
                    c.chirality = c.chirality.flip();
                    found = true;
                }
            }
            if a == b {
                break;
            }
        }
        if !found {
            return Err(Error::Precondition(format!("no crossing {id}")));
        }
        Ok(out)
    }

    /// Crossings between an edge of `h` and an edge of `k`.
    pub fn crossings_between(&self, h: &[EdgeId], k: &[EdgeId]) -> Vec<CrossingId> {
        let kset: BTreeSet<EdgeId> = k.iter().copied().collect();
        let mut out = BTreeSet::new();
        for &e in h {
            for c in self.crossings_of(e) {
                if kset.contains(&c.other) {
                    out.insert(CrossingId::new(e, c.other));
                }
            }
        }
        out.into_iter().collect()
    }

    /// `H ⊓ K ≠ ∅`.
    pub fn meets(&self, h: &[EdgeId], k: &[EdgeId]) -> bool {
        h.iter().any(|&e| self.crossings_of(e).iter().any(|c| k.contains(&c.other)))
    }

    /// Crossings along `B(i)` starting at `v(i,start)` and walking in the
    /// direction of increasing `j`, once around.
    pub fn blue_traversal(&self, i: usize, start: usize) -> Vec<TraversalStep> {
        let n = self.n();
        let mut out = Vec::new();
        for t in 1..=n {
            let e = EdgeId::blue(i, (start + t) % n);
            for c in self.crossings_of(e) {
                out.push(TraversalStep { crossing: CrossingId::new(e, c.other), blue: e, other: c.other });
            }
        }
        out
    }

    /// Compact canonical JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("drawing serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("drawing serializes")
    }

    pub fn from_json(s: &str) -> Result<Drawing, Error> {
        Ok(serde_json::from_str(s)?)
    }

    /// SHA-256 of the compact JSON form, hex encoded.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.to_json().as_bytes()))
    }

    /// Builds the planarization.
    pub fn planarize(&self) -> PlanarMap {
        let rot: Vec<Vec<EdgeId>> = self.rotations.iter().map(|r| r.to_vec()).collect();
        PlanarMap::build(self.graph, &rot, &self.crossings, None)
    }
}
