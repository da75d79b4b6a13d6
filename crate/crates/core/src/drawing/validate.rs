use std::collections::BTreeMap;

use serde::Serialize;

use super::{CrossingId, Drawing};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    SelfCrossing { edge: String },
    AdjacentCrossing { crossing: CrossingId },
    RepeatedPair { crossing: CrossingId, count: usize },
    Disconnected,
    Genus { euler_characteristic: i64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub nodes: usize,
    pub segments: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has_genus_violation(&self) -> bool {
        self.violations.iter().any(|v| matches!(v, Violation::Genus { .. }))
    }
}

/// Checks goodness and that the planarization is a sphere map.
pub fn validate(d: &Drawing) -> ValidationReport {
    let g = d.graph();
    let mut violations = Vec::new();
    let mut counts: BTreeMap<CrossingId, usize> = BTreeMap::new();
    for e in g.edges() {
        for c in d.crossings_of(e) {
            if c.other == e {
                *counts.entry(CrossingId::new(e, e)).or_default() += 1;
            } else if e < c.other {
                *counts.entry(CrossingId::new(e, c.other)).or_default() += 1;
            }
        }
    }
    for (&id, &count) in &counts {
        let (a, b) = id.edges();
        if a == b {
            violations.push(Violation::SelfCrossing { edge: a.to_string() });
            continue;
        }
        if g.adjacent(a, b) {
            violations.push(Violation::AdjacentCrossing { crossing: id });
        }
        if count > 1 {
            violations.push(Violation::RepeatedPair { crossing: id, count });
        }
    }

    let map = d.planarize();
    let euler = map.euler_characteristic();
    if !map.is_connected() {
        violations.push(Violation::Disconnected);
    } else if euler != 2 {
        violations.push(Violation::Genus { euler_characteristic: euler });
    }
    ValidationReport {
        nodes: map.node_count(),
        segments: map.segment_count(),
        faces: map.face_count(),
        euler_characteristic: euler,
        violations,
    }
}
