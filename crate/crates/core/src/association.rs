//! The classes `C±`, `T±`, `T0` of blue indices around each red cycle and the
//! crossing sets `Y(j)` and `X(β,j)` associated with `R(j)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::drawing::{CrossingId, Drawing};
use crate::error::Error;
use crate::product_graph::{EdgeId, VertexId};
use crate::regions::Regions;
use crate::robustness::{analyze, RobustnessReport};
use crate::zring::{add_mod, circ_leq, circ_lt, sub_mod};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Class {
    #[serde(rename = "C+")]
    Cplus,
    #[serde(rename = "C-")]
    Cminus,
    #[serde(rename = "T+")]
    Tplus,
    #[serde(rename = "T-")]
    Tminus,
    #[serde(rename = "T0")]
    Tzero,
}

/// Why a crossing was associated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Tag {
    /// First crossing with `R(j)` after `v(i,j)`, for `C+` and `T+`.
    I,
    /// Last crossing with `R(j)` before returning to `v(i,j)`, for `C-` and `T-`.
    II,
    A,
    B,
    C,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    Y,
    X { beta: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Associated {
    pub crossing: CrossingId,
    pub j: usize,
    pub family: Family,
    pub tag: Tag,
}

/// `b̄(i,j)` for every `i`, the set `S(j)`, and the sets `T(β,j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BetaData {
    pub bbar: Vec<usize>,
    pub s: BTreeSet<usize>,
    pub t: BTreeMap<usize, BTreeSet<usize>>,
}

impl BetaData {
    pub fn t(&self, beta: usize) -> BTreeSet<usize> {
        self.t.get(&beta).cloned().unwrap_or_default()
    }
}

/// Association data for a robust drawing.
pub struct Context<'a> {
    d: &'a Drawing,
    regions: Regions,
    report: RobustnessReport,
    a: Vec<usize>,
    b: Vec<usize>,
    big_b: usize,
}

impl<'a> Context<'a> {
    pub fn new(d: &'a Drawing) -> Result<Self, Error> {
        let regions = Regions::new(d);
        let report = analyze(d, &regions);
        Self::with_regions(d, regions, report)
    }

    pub fn with_regions(
        d: &'a Drawing,
        regions: Regions,
        report: RobustnessReport,
    ) -> Result<Self, Error> {
        if !report.robust {
            return Err(Error::NotRobust);
        }
        let a = report.a.iter().map(|x| x.expect("robust")).collect();
        let b = report.b.iter().map(|x| x.expect("robust")).collect();
        let big_b = report.big_b.expect("robust");
        Ok(Context { d, regions, report, a, b, big_b })
    }

    pub fn drawing(&self) -> &Drawing {
        self.d
    }

    pub fn regions(&self) -> &Regions {
        &self.regions
    }

    pub fn report(&self) -> &RobustnessReport {
        &self.report
    }

    pub fn a(&self, j: usize) -> usize {
        self.a[j]
    }

    pub fn b(&self, j: usize) -> usize {
        self.b[j]
    }

    pub fn big_b(&self) -> usize {
        self.big_b
    }

    fn m(&self) -> usize {
        self.d.m()
    }

    fn n(&self) -> usize {
        self.d.n()
    }

    fn plus(&self, j: usize, k: usize) -> usize {
        add_mod(j, k, self.n())
    }

    fn minus(&self, j: usize, k: usize) -> usize {
        sub_mod(j, k, self.n())
    }

    /// `P(i,j,k)`.
    pub fn path(&self, i: usize, j: usize, k: usize) -> Vec<EdgeId> {
        self.d.graph().open_blue_path(i, j, k).expect("non-empty path")
    }

    pub fn red(&self, j: usize) -> Vec<EdgeId> {
        self.d.graph().red_cycle(j)
    }

    fn in_omega(&self, v: VertexId, e: EdgeId, j: usize) -> Result<bool, Error> {
        Ok(self.regions.germ_component(v, e, j)? == self.regions.omega(j)?)
    }

    /// Class of each `i ∈ Z_m` with respect to `R(j)`.
    pub fn classify(&self, j: usize) -> Result<Vec<Class>, Error> {
        let (n, bb) = (self.n(), self.big_b);
        let red = self.red(j);
        let mut out = Vec::with_capacity(self.m());
        for i in 0..self.m() {
            let v = VertexId::new(i, j);
            let class = if !self.in_omega(v, EdgeId::blue(i, add_mod(j, 1, n)), j)? {
                Class::Cplus
            } else if !self.in_omega(v, EdgeId::blue(i, j), j)? {
                Class::Cminus
            } else if self.d.meets(&self.path(i, j, self.plus(j, bb)), &red) {
                Class::Tplus
            } else if self.d.meets(&self.path(i, self.minus(j, bb), j), &red) {
                Class::Tminus
            } else {
                Class::Tzero
            };
            out.push(class);
        }
        Ok(out)
    }

    /// `b̄(i,j)`: least `b ≥ 1` with `v(i,j) ∈ Ω_{j⊖b}`.
    pub fn bbar(&self, i: usize, j: usize) -> Result<usize, Error> {
        let v = VertexId::new(i, j);
        for b in 1..self.n() {
            let k = self.minus(j, b);
            if self.regions.locate_vertex(v, k)? == self.regions.omega(k)? {
                return Ok(b);
            }
        }
        Err(Error::Falsified(format!("v({i},{j}) lies in no outer region")))
    }

    pub fn beta_data(&self, j: usize, classes: &[Class]) -> Result<BetaData, Error> {
        let mut bbar = Vec::with_capacity(self.m());
        let mut t: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for i in 0..self.m() {
            let x = self.bbar(i, j)?;
            if x > self.b[j] {
                return Err(Error::Falsified(format!(
                    "b̄({i},{j}) = {x} exceeds b({j}) = {}",
                    self.b[j]
                )));
            }
            if classes[i] == Class::Tzero {
                t.entry(x).or_default().insert(i);
            }
            bbar.push(x);
        }
        let s = bbar.iter().copied().collect();
        Ok(BetaData { bbar, s, t })
    }

    /// `Y(j)`.
    pub fn y_set(&self, j: usize, classes: &[Class]) -> Result<Vec<Associated>, Error> {
        let red = self.red(j);
        let mut out = Vec::new();
        for (i, &c) in classes.iter().enumerate() {
            let steps = self.d.blue_traversal(i, j);
            let mut hits = steps.iter().filter(|s| red.contains(&s.other));
            let (hit, tag) = match c {
                Class::Cplus | Class::Tplus => (hits.next(), Tag::I),
                Class::Cminus | Class::Tminus => (hits.last(), Tag::II),
                Class::Tzero => continue,
            };
            let hit = hit.ok_or_else(|| {
                Error::Falsified(format!("B({i}) never crosses R({j}) though {i} is {c:?}"))
            })?;
            out.push(Associated { crossing: hit.crossing, j, family: Family::Y, tag });
        }
        Ok(out)
    }

    /// `X(β,j)`, with `T = T(β,j)`.
    pub fn x_set(&self, beta: usize, j: usize, t: &BTreeSet<usize>) -> Result<Vec<Associated>, Error> {
        let (jb, ja) = (self.minus(j, beta), self.plus(j, self.a[j]));
        let (r_jb, r_j, r_ja) = (self.red(jb), self.red(j), self.red(ja));
        let mut tags: BTreeMap<CrossingId, Tag> = BTreeMap::new();
        let mut put = |c: CrossingId, tag: Tag| -> Result<(), Error> {
            match tags.insert(c, tag) {
                Some(old) if old != tag => Err(Error::Falsified(format!(
                    "crossing {c} tagged both {old:?} and {tag:?} in X({beta},{j})"
                ))),
                _ => Ok(()),
            }
        };
        for c in self.d.crossings_between(&r_jb, &r_j) {
            put(c, Tag::A)?;
        }
        for &i in t {
            if self.d.meets(&r_jb, &self.path(i, j, ja)) {
                let steps = self.d.blue_traversal(i, ja);
                let s = steps.iter().filter(|s| r_jb.contains(&s.other)).last().expect("crossing exists");
                put(s.crossing, Tag::B)?;
            }
            if self.d.meets(&r_ja, &self.path(i, jb, j)) {
                let steps = self.d.blue_traversal(i, jb);
                let s = steps.iter().find(|s| r_ja.contains(&s.other)).expect("crossing exists");
                put(s.crossing, Tag::C)?;
            }
        }
        for &i in t {
            let initial = self.path(i, jb, j);
            for &i2 in t {
                if i2 == i {
                    continue;
                }
                let mut other = self.path(i2, jb, j);
                other.extend(self.path(i2, j, ja));
                for c in self.d.crossings_between(&initial, &other) {
                    put(c, Tag::D)?;
                }
            }
        }
        Ok(tags
            .into_iter()
            .map(|(crossing, tag)| Associated { crossing, j, family: Family::X { beta }, tag })
            .collect())
    }

    /// `ℐ(j) = Y(j) ∪ ⋃_{β ∈ S(j)} X(β,j)`, with the data it was built from.
    pub fn associated(&self, j: usize) -> Result<AssociationData, Error> {
        let classes = self.classify(j)?;
        let beta = self.beta_data(j, &classes)?;
        let y = self.y_set(j, &classes)?;
        let mut x = BTreeMap::new();
        for &b in &beta.s {
            x.insert(b, self.x_set(b, j, &beta.t(b))?);
        }
        Ok(AssociationData { j, classes, beta, y, x })
    }

    /// Violations of the path-crossing facts for the four classes, at `j`.
    pub fn prop7_check(&self, j: usize, classes: &[Class]) -> Vec<String> {
        let red = self.red(j);
        let mut out = Vec::new();
        for (i, &c) in classes.iter().enumerate() {
            let path = match c {
                Class::Cplus => self.path(i, j, self.plus(j, self.a[j])),
                Class::Cminus => self.path(i, self.minus(j, self.b[j]), j),
                Class::Tplus => self.path(i, j, self.plus(j, self.big_b)),
                Class::Tminus => self.path(i, self.minus(j, self.big_b), j),
                Class::Tzero => continue,
            };
            if !self.d.meets(&red, &path) {
                out.push(format!("i = {i} is {c:?} but its path misses R({j})"));
            }
        }
        out
    }
}

/// Everything associated with one red cycle.
#[derive(Clone, Debug, Serialize)]
pub struct AssociationData {
    pub j: usize,
    pub classes: Vec<Class>,
    pub beta: BetaData,
    pub y: Vec<Associated>,
    pub x: BTreeMap<usize, Vec<Associated>>,
}

impl AssociationData {
    pub fn all(&self) -> impl Iterator<Item = &Associated> {
        self.y.iter().chain(self.x.values().flatten())
    }

    pub fn class_set(&self, c: Class) -> BTreeSet<usize> {
        (0..self.classes.len()).filter(|&i| self.classes[i] == c).collect()
    }
}

/// Violations of: `T(β,j) ∩ T(β',j') ≠ ∅` and `j ≺ j'` imply `j ⪯ j' ⊖ β'`.
pub fn prop7_nesting_check(n: usize, data: &[AssociationData]) -> Vec<String> {
    let mut out = Vec::new();
    for d1 in data {
        for d2 in data {
            if !circ_lt(d1.j, d2.j, n) {
                continue;
            }
            for (&beta, t1) in &d1.beta.t {
                for (&beta2, t2) in &d2.beta.t {
                    if t1.is_disjoint(t2) {
                        continue;
                    }
                    if !circ_leq(d1.j, sub_mod(d2.j, beta2, n), n) {
                        out.push(format!(
                            "T({beta},{}) meets T({beta2},{}) but {} is not before {} - {beta2}",
                            d1.j, d2.j, d1.j, d2.j
                        ));
                    }
                }
            }
        }
    }
    out
}
