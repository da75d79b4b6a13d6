//! Robustness indices `a(j)`, `b(j)`, `ℬ` and the robust / heavy-cycle dichotomy.

use serde::Serialize;

use crate::drawing::Drawing;
use crate::error::Error;
use crate::regions::Regions;
use crate::zring::{add_mod, sub_mod};

/// Crossing counts between pairs of red cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RedCrossings {
    n: usize,
    counts: Vec<Vec<usize>>,
}

impl RedCrossings {
    pub fn from_drawing(d: &Drawing) -> Self {
        let n = d.n();
        let mut counts = vec![vec![0; n]; n];
        for e in d.graph().edges() {
            let Some(j) = e.red_cycle() else { continue };
            for c in d.crossings_of(e) {
                if let Some(k) = c.other.red_cycle() {
                    if k != j {
                        counts[j][k] += 1;
                    }
                }
            }
        }
        RedCrossings { n, counts }
    }

    /// A stipulated matrix: `pairs` lists `(j, k)` with `R(j) ⊓ R(k) ≠ ∅`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut counts = vec![vec![0; n]; n];
        for &(j, k) in pairs {
            if j != k {
                counts[j % n][k % n] += 1;
                counts[k % n][j % n] += 1;
            }
        }
        RedCrossings { n, counts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self, j: usize, k: usize) -> usize {
        self.counts[j % self.n][k % self.n]
    }

    /// `R(j) ⊓ R(k) ≠ ∅` for distinct `j, k`.
    pub fn cross(&self, j: usize, k: usize) -> bool {
        self.count(j, k) > 0
    }

    /// `b(j)`: least `b ≥ 1` with `R(j⊖b) ⊓ R(j) = ∅`.
    pub fn b(&self, j: usize) -> Option<usize> {
        (1..self.n).find(|&b| !self.cross(sub_mod(j, b, self.n), j))
    }

    /// `a(j)`: least `a` with `R(j⊕a)` outside `{R(j⊖b), .., R(j)}` and
    /// disjoint from each of them.
    pub fn a(&self, j: usize) -> Option<usize> {
        let n = self.n;
        let b = self.b(j)?;
        (1..n - b).find(|&a| {
            let t = add_mod(j, a, n);
            (0..=b).all(|c| !self.cross(sub_mod(j, c, n), t))
        })
    }
}

pub fn b_of(d: &Drawing, j: usize) -> Option<usize> {
    RedCrossings::from_drawing(d).b(j)
}

pub fn a_of(d: &Drawing, j: usize) -> Option<usize> {
    RedCrossings::from_drawing(d).a(j)
}

/// Distinct crossings having an edge on `R(j)`.
pub fn red_cycle_crossings(d: &Drawing, j: usize) -> usize {
    let mut outside = 0;
    let mut inside = 0;
    for e in d.graph().red_cycle(j) {
        for c in d.crossings_of(e) {
            if c.other.red_cycle() == Some(j) {
                inside += 1;
            } else {
                outside += 1;
            }
        }
    }
    outside + inside / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HeavyCycle {
    pub j: usize,
    pub crossings: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RobustnessReport {
    pub m: usize,
    pub n: usize,
    pub b: Vec<Option<usize>>,
    pub a: Vec<Option<usize>>,
    /// `ℬ`, the largest of all `a(j)` and `b(j)`, when all are defined.
    pub big_b: Option<usize>,
    pub relaxed: bool,
    pub red_nonseparating: bool,
    pub robust: bool,
    /// A triple `(j, k, l)` with `R(j)` separating `R(k)` from `R(l)`.
    pub separating_triple: Option<(usize, usize, usize)>,
    pub red_cycle_crossings: Vec<usize>,
    /// Red cycles with at least `m` crossings.
    pub heavy_cycles: Vec<HeavyCycle>,
}

pub fn analyze(d: &Drawing, regions: &Regions) -> RobustnessReport {
    let (m, n) = (d.m(), d.n());
    let red = regions.red_crossings();
    let b: Vec<Option<usize>> = (0..n).map(|j| red.b(j)).collect();
    let a: Vec<Option<usize>> = (0..n).map(|j| red.a(j)).collect();
    let all: Option<Vec<(usize, usize)>> =
        a.iter().zip(&b).map(|(a, b)| Some(((*a)?, (*b)?))).collect();
    let big_b = all.as_ref().map(|v| v.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0));
    let relaxed = all.as_ref().is_some_and(|v| v.iter().all(|&(a, b)| 2 * (a + b) < n));

    let mut separating_triple = None;
    'outer: for j in 0..n {
        for k in 0..n {
            for l in k + 1..n {
                if k != j && l != j && regions.separates(j, k, l) {
                    separating_triple = Some((j, k, l));
                    break 'outer;
                }
            }
        }
    }
    let red_nonseparating = separating_triple.is_none();
    let red_cycle_crossings: Vec<usize> = (0..n).map(|j| red_cycle_crossings(d, j)).collect();
    let heavy_cycles = red_cycle_crossings
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c >= m)
        .map(|(j, &crossings)| HeavyCycle { j, crossings })
        .collect();
    RobustnessReport {
        m,
        n,
        b,
        a,
        big_b,
        relaxed,
        red_nonseparating,
        robust: relaxed && red_nonseparating,
        separating_triple,
        red_cycle_crossings,
        heavy_cycles,
    }
}

pub fn robust(d: &Drawing) -> bool {
    analyze(d, &Regions::new(d)).robust
}

/// `n ≥ (m+3)²/2 + 1`.
pub fn prop13_applies(m: usize, n: usize) -> bool {
    2 * n >= (m + 3) * (m + 3) + 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Prop13Verdict {
    Robust,
    HeavyRedCycle { j: usize, crossings: usize },
}

/// Robust, or some red cycle has at least `m` crossings.
pub fn prop13_diagnose(report: &RobustnessReport) -> Result<Prop13Verdict, Error> {
    let (m, n) = (report.m, report.n);
    if !prop13_applies(m, n) {
        return Err(Error::BelowThreshold {
            n,
            threshold: format!("({m}+3)^2/2+1"),
        });
    }
    if report.robust {
        return Ok(Prop13Verdict::Robust);
    }
    match report.heavy_cycles.first() {
        Some(h) => Ok(Prop13Verdict::HeavyRedCycle { j: h.j, crossings: h.crossings }),
        None => Err(Error::DichotomyFailure),
    }
}

/// Index bounds that hold when no red cycle is heavy and `n` is large:
/// `b(j) ≤ (m+1)/2` and `a(j) ≤ (m+1)(m+3)/4 + 1`. Returns the offending `j`s.
pub fn prop13_index_bounds(report: &RobustnessReport) -> Vec<usize> {
    let m = report.m;
    if !prop13_applies(m, report.n) || !report.heavy_cycles.is_empty() {
        return Vec::new();
    }
    (0..report.n)
        .filter(|&j| {
            let b_ok = report.b[j].is_some_and(|b| 2 * b <= m + 1);
            let a_ok = report.a[j].is_some_and(|a| 4 * a <= (m + 1) * (m + 3) + 4);
            !(b_ok && a_ok)
        })
        .collect()
}
