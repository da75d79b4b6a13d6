//! Runtime certification of the lower bound on robust drawings.
//!
//! Every check here is a consequence of a proved statement, so a failed check
//! is recorded as a falsification rather than an error. A falsification on a
//! valid drawing means a bug somewhere in this crate.

mod config;

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use serde::Serialize;

pub use config::{extract, ConfigCount, ConfigView};

use crate::association::{
    prop7_nesting_check, AssociationData, Class, Context, Family, Tag,
};
use crate::drawing::{validate, CrossingId, Drawing, Violation};
use crate::error::Error;
use crate::regions::Regions;
use crate::robustness::{
    analyze, prop13_applies, prop13_diagnose, prop13_index_bounds, Prop13Verdict, RobustnessReport,
};

/// One failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Falsification {
    pub check: String,
    pub j: Option<usize>,
    pub beta: Option<usize>,
    pub detail: String,
}

impl Falsification {
    fn new(check: &str, j: Option<usize>, beta: Option<usize>, detail: impl Into<String>) -> Self {
        Falsification { check: check.to_string(), j, beta, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PerJ {
    pub j: usize,
    pub classes: Vec<Class>,
    pub s: BTreeSet<usize>,
    pub t: BTreeMap<usize, BTreeSet<usize>>,
    pub y: usize,
    pub x: BTreeMap<usize, usize>,
    /// `|ℐ(j)|`.
    pub associated: usize,
    pub tags: BTreeMap<String, usize>,
    pub crossings: Vec<CrossingId>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigRecord {
    pub view: ConfigView,
    pub count: ConfigCount,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub m: usize,
    pub n: usize,
    pub digest: String,
    pub valid: bool,
    pub violations: Vec<Violation>,
    pub euler_characteristic: i64,
    pub total_crossings: usize,
    /// `(m-2)n`.
    pub lower_bound: usize,
    pub robust: bool,
    pub robustness: Option<RobustnessReport>,
    pub prop13: Option<Prop13Verdict>,
    pub per_j: Vec<PerJ>,
    /// Distinct crossings in the union of all `ℐ(j)`.
    pub associated_total: usize,
    pub pairwise_disjoint: bool,
    pub configurations: Vec<ConfigRecord>,
    pub theorem1_holds: bool,
    pub falsifications: Vec<Falsification>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    /// No falsification and, when robust, the bound is met.
    pub fn passed(&self) -> bool {
        self.valid && self.falsifications.is_empty() && (!self.robust || self.theorem1_holds)
    }
}

/// Where a crossing was charged.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Provenance {
    j: usize,
    family: Family,
    tag: Tag,
}

fn clause(a: &Provenance, b: &Provenance) -> &'static str {
    match (a.family, b.family) {
        (Family::Y, Family::Y) => "disjoint_y_y",
        (Family::Y, Family::X { .. }) | (Family::X { .. }, Family::Y) => "disjoint_y_x",
        _ => "disjoint_x_x",
    }
}

/// Each crossing is charged at most once across all `ℐ(j)`, and within one `j`
/// the families `Y(j)` and `X(β,j)` are pairwise disjoint.
pub fn disjointness_check(data: &[AssociationData]) -> Vec<Falsification> {
    let mut seen: BTreeMap<CrossingId, Provenance> = BTreeMap::new();
    let mut first: BTreeMap<&'static str, Falsification> = BTreeMap::new();
    for d in data {
        for a in d.all() {
            let p = Provenance { j: a.j, family: a.family, tag: a.tag };
            if let Some(q) = seen.get(&a.crossing) {
                let c = clause(q, &p);
                first.entry(c).or_insert_with(|| {
                    Falsification::new(
                        c,
                        Some(p.j),
                        match p.family {
                            Family::X { beta } => Some(beta),
                            Family::Y => None,
                        },
                        format!(
                            "crossing {} charged to R({}) as {:?}/{:?} and to R({}) as {:?}/{:?}",
                            a.crossing, q.j, q.family, q.tag, p.j, p.family, p.tag
                        ),
                    )
                });
            } else {
                seen.insert(a.crossing, p);
            }
        }
    }
    first.into_values().collect()
}

/// Runs every check on `d`. Never fails; problems land in the certificate.
pub fn certify(d: &Drawing) -> Certificate {
    let (m, n) = (d.m(), d.n());
    let report = validate(d);
    let mut cert = Certificate {
        m,
        n,
        digest: d.digest(),
        valid: report.is_valid(),
        violations: report.violations.clone(),
        euler_characteristic: report.euler_characteristic,
        total_crossings: d.crossing_count(),
        lower_bound: (m - 2) * n,
        robust: false,
        robustness: None,
        prop13: None,
        per_j: Vec::new(),
        associated_total: 0,
        pairwise_disjoint: false,
        configurations: Vec::new(),
        theorem1_holds: false,
        falsifications: Vec::new(),
    };
    if !cert.valid {
        return cert;
    }
    let regions = Regions::new(d);
    let rob = analyze(d, &regions);
    cert.robust = rob.robust;
    cert.robustness = Some(rob.clone());

    if prop13_applies(m, n) {
        match prop13_diagnose(&rob) {
            Ok(v) => cert.prop13 = Some(v),
            Err(e) => cert.falsifications.push(Falsification::new("prop13", None, None, e.to_string())),
        }
        for j in prop13_index_bounds(&rob) {
            cert.falsifications.push(Falsification::new(
                "prop13_index_bounds",
                Some(j),
                None,
                format!("a({j}) = {:?}, b({j}) = {:?}", rob.a[j], rob.b[j]),
            ));
        }
    }
    if !rob.robust {
        return cert;
    }

    let ctx = Context::with_regions(d, regions, rob).expect("robust");
    let mut data = Vec::with_capacity(n);
    for j in 0..n {
        match ctx.associated(j) {
            Ok(a) => data.push(a),
            Err(e) => cert.falsifications.push(Falsification::new("association", Some(j), None, e.to_string())),
        }
    }
    if data.len() < n {
        return cert;
    }

    for a in &data {
        let j = a.j;
        for msg in ctx.prop7_check(j, &a.classes) {
            cert.falsifications.push(Falsification::new("prop7", Some(j), None, msg));
        }
        check_prop12(&ctx, a, &mut cert.falsifications);
        for (&beta, t) in &a.beta.t {
            let view = match extract(&ctx, beta, j, t) {
                Ok(v) => v,
                Err(_) => continue,
            };
            for msg in view.axiom_failures(&ctx) {
                cert.falsifications.push(Falsification::new("configuration_axiom", Some(j), Some(beta), msg));
            }
            let count = view.count(&ctx);
            if !count.holds {
                cert.falsifications.push(Falsification::new(
                    "configuration_inequality",
                    Some(j),
                    Some(beta),
                    format!(
                        "x1 + x2 + x3 = {} with s = {}, k = {}",
                        count.x1 + count.x2 + count.x3,
                        count.s,
                        count.k
                    ),
                ));
            }
            cert.configurations.push(ConfigRecord { view, count });
        }
    }
    for msg in prop7_nesting_check(n, &data) {
        cert.falsifications.push(Falsification::new("prop7_nesting", None, None, msg));
    }

    let disjoint = disjointness_check(&data);
    cert.pairwise_disjoint = disjoint.is_empty();
    cert.falsifications.extend(disjoint);

    let mut union: BTreeSet<CrossingId> = BTreeSet::new();
    let mut sum = 0;
    for a in &data {
        let crossings: BTreeSet<CrossingId> = a.all().map(|x| x.crossing).collect();
        sum += crossings.len();
        union.extend(crossings.iter().copied());
        if crossings.len() + 2 < m {
            cert.falsifications.push(Falsification::new(
                "lemma11",
                Some(a.j),
                None,
                format!("|I({})| = {} < m - 2 = {}", a.j, crossings.len(), m - 2),
            ));
        }
        let mut tags = BTreeMap::new();
        for x in a.all() {
            *tags.entry(format!("{:?}", x.tag)).or_insert(0) += 1;
        }
        cert.per_j.push(PerJ {
            j: a.j,
            classes: a.classes.clone(),
            s: a.beta.s.clone(),
            t: a.beta.t.clone(),
            y: a.y.len(),
            x: a.x.iter().map(|(&b, v)| (b, v.len())).collect(),
            associated: crossings.len(),
            tags,
            crossings: crossings.into_iter().collect(),
        });
    }
    if sum > cert.total_crossings {
        cert.falsifications.push(Falsification::new(
            "association_sum",
            None,
            None,
            format!("sum of |I(j)| = {sum} exceeds the {} crossings", cert.total_crossings),
        ));
    }
    cert.associated_total = union.len();
    cert.theorem1_holds = cert.associated_total >= cert.lower_bound;
    if !cert.theorem1_holds {
        cert.falsifications.push(Falsification::new(
            "theorem1",
            None,
            None,
            format!("{} associated crossings, need {}", cert.associated_total, cert.lower_bound),
        ));
    }
    cert
}

fn check_prop12(ctx: &Context<'_>, a: &AssociationData, out: &mut Vec<Falsification>) {
    let j = a.j;
    let charged: usize = [Class::Cplus, Class::Cminus, Class::Tplus, Class::Tminus]
        .iter()
        .map(|&c| a.class_set(c).len())
        .sum();
    if a.y.len() < charged {
        out.push(Falsification::new(
            "prop12_i",
            Some(j),
            None,
            format!("|Y({j})| = {} < {charged}", a.y.len()),
        ));
    }
    let bj = ctx.b(j);
    for &beta in &a.beta.s {
        let t = a.beta.t(beta).len();
        let x = a.x.get(&beta).map_or(0, Vec::len);
        let (ok, name) = if beta == bj {
            (x + 2 >= t, "prop12_iii")
        } else {
            (x >= t, "prop12_ii")
        };
        if !ok {
            out.push(Falsification::new(
                name,
                Some(j),
                Some(beta),
                format!("|X({beta},{j})| = {x}, |T({beta},{j})| = {t}"),
            ));
        }
    }
}

/// `min{(m-2)n, m(n - n0)}` for `n ≥ n0`.
pub fn hks_statement_bound(m: usize, n: usize, n0: Ratio<i64>) -> Result<Ratio<i64>, Error> {
    if m < 3 {
        return Err(Error::InvalidSize { m, n });
    }
    let nr = Ratio::from_integer(n as i64);
    if nr < n0 {
        return Err(Error::BelowThreshold { n, threshold: n0.to_string() });
    }
    let a = Ratio::from_integer(((m - 2) * n) as i64);
    let b = Ratio::from_integer(m as i64) * (nr - n0);
    Ok(a.min(b))
}

/// `(m+3)²/2 + 1`.
pub fn hks_n0(m: usize) -> Ratio<i64> {
    let s = (m + 3) as i64;
    Ratio::new(s * s, 2) + 1
}
