//! The three-curve configuration attached to `(β, j)`: `C0 = R(j⊖β)`,
//! `C1 = R(j)`, `C2 = R(j⊕a(j))`, and for each `i ∈ T(β,j)` the arc
//! `P(i,j⊖β,j⊕a)` touching `C1` at `v(i,j)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::association::Context;
use crate::drawing::CrossingId;
use crate::error::Error;
use crate::product_graph::{EdgeId, VertexId};
use crate::zring::{add_mod, sub_mod};

#[derive(Clone, Debug, Serialize)]
pub struct ConfigView {
    pub j: usize,
    pub beta: usize,
    pub c0: usize,
    pub c1: usize,
    pub c2: usize,
    /// Blue indices of the arcs.
    pub arcs: Vec<usize>,
    /// `|C0 ⊓ C1|`.
    pub k: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigCount {
    pub s: usize,
    pub k: usize,
    /// Distinct good crossings between arcs.
    pub x1: usize,
    /// Initial subarcs crossing `C2`.
    pub x2: usize,
    /// Final subarcs crossing `C0`.
    pub x3: usize,
    pub holds: bool,
}

pub fn extract(
    ctx: &Context<'_>,
    beta: usize,
    j: usize,
    t: &BTreeSet<usize>,
) -> Result<ConfigView, Error> {
    if t.is_empty() {
        return Err(Error::Precondition(format!("T({beta},{j}) is empty")));
    }
    let n = ctx.drawing().n();
    let c0 = sub_mod(j, beta, n);
    let c2 = add_mod(j, ctx.a(j), n);
    let k = ctx.drawing().crossings_between(&ctx.red(c0), &ctx.red(j)).len();
    Ok(ConfigView { j, beta, c0, c1: j, c2, arcs: t.iter().copied().collect(), k })
}

impl ConfigView {
    fn initial(&self, ctx: &Context<'_>, i: usize) -> Vec<EdgeId> {
        ctx.path(i, self.c0, self.c1)
    }

    fn fin(&self, ctx: &Context<'_>, i: usize) -> Vec<EdgeId> {
        ctx.path(i, self.c1, self.c2)
    }

    /// Conditions a configuration must satisfy. Returns the failures.
    pub fn axiom_failures(&self, ctx: &Context<'_>) -> Vec<String> {
        let d = ctx.drawing();
        let r = ctx.regions();
        let (c0, c1, c2) = (ctx.red(self.c0), ctx.red(self.c1), ctx.red(self.c2));
        let mut out = Vec::new();
        if d.meets(&c2, &c0) || d.meets(&c2, &c1) {
            out.push(format!("C2 = R({}) meets C0 or C1", self.c2));
        }
        let trio = [self.c0, self.c1, self.c2];
        for (x, y, z) in [(0, 1, 2), (1, 0, 2), (2, 0, 1)] {
            if r.separates(trio[x], trio[y], trio[z]) {
                out.push(format!("R({}) separates R({}) from R({})", trio[x], trio[y], trio[z]));
            }
        }
        for &i in &self.arcs {
            let mut arc = self.initial(ctx, i);
            arc.extend(self.fin(ctx, i));
            if d.meets(&arc, &c1) {
                out.push(format!("arc {i} crosses C1"));
            }
            let v = VertexId::new(i, self.c1);
            let n = d.n();
            let g1 = r.germ_component(v, EdgeId::blue(i, self.c1), self.c1);
            let g2 = r.germ_component(v, EdgeId::blue(i, add_mod(self.c1, 1, n)), self.c1);
            let same = matches!((&g1, &g2), (Ok(x), Ok(y)) if x == y);
            if !same {
                out.push(format!("arc {i} is not tangent to C1 at v({i},{})", self.c1));
            }
        }
        out
    }

    /// Crossing counts and the lower bound on them.
    pub fn count(&self, ctx: &Context<'_>) -> ConfigCount {
        let d = ctx.drawing();
        let (c0, c2) = (ctx.red(self.c0), ctx.red(self.c2));
        let mut good: BTreeSet<CrossingId> = BTreeSet::new();
        for &i in &self.arcs {
            let ti = self.initial(ctx, i);
            for &i2 in &self.arcs {
                if i2 == i {
                    continue;
                }
                good.extend(d.crossings_between(&ti, &self.fin(ctx, i2)));
                good.extend(d.crossings_between(&ti, &self.initial(ctx, i2)));
            }
        }
        let x2 = self.arcs.iter().filter(|&&i| d.meets(&self.initial(ctx, i), &c2)).count();
        let x3 = self.arcs.iter().filter(|&&i| d.meets(&self.fin(ctx, i), &c0)).count();
        let (s, x1) = (self.arcs.len(), good.len());
        let holds = if self.k == 0 {
            x1 + x2 + x3 + 2 >= s
        } else {
            x1 + x2 + x3 + self.k >= s
        };
        ConfigCount { s, k: self.k, x1, x2, x3, holds }
    }
}
