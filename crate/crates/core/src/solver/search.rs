//! Exact crossing number by searching over sets of crossing pairs.
//!
//! A drawing with `k` crossings is described by `k` unordered pairs of
//! non-adjacent edges plus, for every edge crossed more than once, the order
//! of its crossings. Promoting the crossings to vertices gives a graph that is
//! planar exactly when the description is realizable. Only good drawings are
//! searched, which is enough since some optimal drawing is good.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::planarity::{embed, is_plane_embedding, Rotation};
use super::{Family, SmallGraph};
use crate::drawing::{Chirality, CrossingRef, Drawing};
use crate::error::Error;
use crate::product_graph::ProductGraph;

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub k_max: usize,
    /// Cap on the number of planarity tests.
    pub budget: Option<u64>,
    /// Skip pair sets that are not lexicographically least in their orbit.
    pub symmetry: bool,
}

impl SearchOptions {
    pub fn new(k_max: usize) -> Self {
        SearchOptions { k_max, budget: None, symmetry: true }
    }
}

/// The graph with every crossing promoted to a vertex.
#[derive(Clone, Debug, Serialize)]
pub struct Planarization {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
    /// Vertices along each original edge, tail to head.
    pub paths: Vec<Vec<usize>>,
    /// Vertex `base + c` is the crossing of `crossings[c]`.
    pub base: usize,
    pub crossings: Vec<(usize, usize)>,
}

/// Builds the planarization. `orders[e]` lists crossing indices along edge `e`.
pub fn planarize(g: &SmallGraph, pairs: &[(usize, usize)], orders: &[Vec<usize>]) -> Planarization {
    let base = g.order();
    let mut order = base + pairs.len();
    let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
    let mut edges = Vec::new();
    let mut paths = Vec::with_capacity(g.edges().len());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let mut walk = vec![u];
        walk.extend(orders[e].iter().map(|&c| base + c));
        walk.push(v);
        let mut path = vec![u];
        for w in walk.windows(2) {
            let key = (w[0].min(w[1]), w[0].max(w[1]));
            if seen.insert(key, ()).is_some() {
                // Parallel piece: subdivide to keep the graph simple.
                let s = order;
                order += 1;
                edges.push((w[0], s));
                edges.push((s, w[1]));
                path.push(s);
            } else {
                edges.push((w[0], w[1]));
            }
            path.push(w[1]);
        }
        paths.push(path);
    }
    Planarization { order, edges, paths, base, crossings: pairs.to_vec() }
}

/// A realizable crossing set with a plane embedding of its planarization.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub k: usize,
    pub pairs: Vec<(usize, usize)>,
    pub orders: Vec<Vec<usize>>,
    pub planarization: Planarization,
    pub rotation: Rotation,
}

impl Witness {
    /// Independent re-check: pairs are good, the rotation is a plane
    /// embedding, and the two edges alternate at every crossing vertex.
    pub fn verify(&self, g: &SmallGraph) -> Result<(), String> {
        let ge = g.edges();
        let mut sorted = self.pairs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.pairs.len() {
            return Err("repeated crossing pair".into());
        }
        for &(e, f) in &self.pairs {
            let (a, b) = (ge[e], ge[f]);
            if e == f || a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
                return Err(format!("edges {e} and {f} are adjacent"));
            }
        }
        let p = planarize(g, &self.pairs, &self.orders);
        if p.edges != self.planarization.edges {
            return Err("planarization does not match the crossing data".into());
        }
        if !is_plane_embedding(p.order, &p.edges, &self.rotation) {
            return Err("rotation system is not a plane embedding".into());
        }
        for (c, &(e, f)) in self.pairs.iter().enumerate() {
            let x = p.base + c;
            let around = |edge: usize| -> (usize, usize) {
                let path = &p.paths[edge];
                let at = path.iter().position(|&y| y == x).expect("crossing on edge");
                (path[at - 1], path[at + 1])
            };
            let (e0, e1) = around(e);
            let (f0, f1) = around(f);
            let r = &self.rotation[x];
            let pos = |y: usize| r.iter().position(|&z| z == y).expect("neighbour");
            if (pos(e0) + 2) % 4 != pos(e1) || (pos(f0) + 2) % 4 != pos(f1) {
                return Err(format!("edges {e} and {f} touch without crossing"));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct LevelStats {
    pub k: usize,
    /// Pair sets examined after symmetry reduction.
    pub selections: u64,
    pub planarity_tests: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveOutcome {
    pub crossing_number: Option<usize>,
    pub witness: Option<Witness>,
    /// One entry per `k` searched, the last being the successful one if any.
    pub levels: Vec<LevelStats>,
    pub symmetries: usize,
    pub candidate_pairs: usize,
}

struct Space {
    pairs: Vec<(usize, usize)>,
    /// Automorphisms acting on pair indices, identity excluded.
    perms: Vec<Vec<usize>>,
}

impl Space {
    fn new(g: &SmallGraph, symmetry: bool) -> Space {
        let ge = g.edges();
        let m = ge.len();
        let mut pairs = Vec::new();
        let mut index = vec![vec![usize::MAX; m]; m];
        for e in 0..m {
            for f in e + 1..m {
                let (a, b) = (ge[e], ge[f]);
                if a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1 {
                    index[e][f] = pairs.len();
                    index[f][e] = pairs.len();
                    pairs.push((e, f));
                }
            }
        }
        let perms = if symmetry {
            g.edge_automorphisms()
                .into_iter()
                .skip(1)
                .map(|p| pairs.iter().map(|&(e, f)| index[p[e]][p[f]]).collect())
                .collect()
        } else {
            Vec::new()
        };
        Space { pairs, perms }
    }

    fn orbit_min(&self, c: usize) -> bool {
        self.perms.iter().all(|p| p[c] >= c)
    }

    fn canonical(&self, sel: &[usize]) -> bool {
        let mut img = vec![0; sel.len()];
        for p in &self.perms {
            for (x, &c) in img.iter_mut().zip(sel) {
                *x = p[c];
            }
            img.sort_unstable();
            if img.as_slice() < sel {
                return false;
            }
        }
        true
    }
}

struct Counter<'a> {
    tests: &'a AtomicU64,
    selections: &'a AtomicU64,
    budget: Option<u64>,
}

impl Counter<'_> {
    fn test(&self) -> Result<(), Error> {
        let t = self.tests.fetch_add(1, Ordering::Relaxed) + 1;
        match self.budget {
            Some(b) if t > b => Err(Error::BudgetExceeded { budget: b }),
            _ => Ok(()),
        }
    }
}

/// Tries every crossing order for the pair set `sel`.
fn try_selection(
    g: &SmallGraph,
    space: &Space,
    sel: &[usize],
    counter: &Counter<'_>,
) -> Result<Option<Witness>, Error> {
    let pairs: Vec<(usize, usize)> = sel.iter().map(|&c| space.pairs[c]).collect();
    let mut on_edge: Vec<Vec<usize>> = vec![Vec::new(); g.edges().len()];
    for (c, &(e, f)) in pairs.iter().enumerate() {
        on_edge[e].push(c);
        on_edge[f].push(c);
    }
    let multi: Vec<usize> = (0..on_edge.len()).filter(|&e| on_edge[e].len() > 1).collect();
    let choices = multi
        .iter()
        .map(|&e| on_edge[e].clone().into_iter().permutations(on_edge[e].len()))
        .multi_cartesian_product();
    let mut orders = on_edge.clone();
    let mut attempt = |choice: &[Vec<usize>]| -> Result<Option<Witness>, Error> {
        for (&e, o) in multi.iter().zip(choice) {
            orders[e].clone_from(o);
        }
        counter.test()?;
        let p = planarize(g, &pairs, &orders);
        Ok(embed(p.order, &p.edges).map(|rotation| Witness {
            k: pairs.len(),
            pairs: pairs.clone(),
            orders: orders.clone(),
            planarization: p,
            rotation,
        }))
    };
    if multi.is_empty() {
        return attempt(&[]);
    }
    for choice in choices {
        if let Some(w) = attempt(&choice)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Depth-first over increasing index sets extending `sel` to size `k`.
fn extend(
    g: &SmallGraph,
    space: &Space,
    sel: &mut Vec<usize>,
    k: usize,
    counter: &Counter<'_>,
) -> Result<Option<Witness>, Error> {
    if sel.len() == k {
        if !space.canonical(sel) {
            return Ok(None);
        }
        counter.selections.fetch_add(1, Ordering::Relaxed);
        return try_selection(g, space, sel, counter);
    }
    let start = sel.last().map_or(0, |&c| c + 1);
    let remaining = k - sel.len();
    for c in start..=space.pairs.len().saturating_sub(remaining) {
        sel.push(c);
        let r = extend(g, space, sel, k, counter);
        sel.pop();
        if let Some(w) = r? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Least `k ≤ opts.k_max` admitting a drawing with `k` crossings.
pub fn solve(g: &SmallGraph, opts: &SearchOptions) -> Result<SolveOutcome, Error> {
    let space = Space::new(g, opts.symmetry);
    let tests = AtomicU64::new(0);
    let mut outcome = SolveOutcome {
        crossing_number: None,
        witness: None,
        levels: Vec::new(),
        symmetries: space.perms.len() + 1,
        candidate_pairs: space.pairs.len(),
    };
    for k in 0..=opts.k_max {
        let before = tests.load(Ordering::Relaxed);
        let selections = AtomicU64::new(0);
        let counter = Counter { tests: &tests, selections: &selections, budget: opts.budget };
        let found: Option<Result<Witness, Error>> = if k == 0 {
            selections.fetch_add(1, Ordering::Relaxed);
            try_selection(g, &space, &[], &counter).transpose()
        } else {
            (0..space.pairs.len()).into_par_iter().find_map_first(|first| {
                if !space.orbit_min(first) {
                    return None;
                }
                let mut sel = vec![first];
                extend(g, &space, &mut sel, k, &counter).transpose()
            })
        };
        outcome.levels.push(LevelStats {
            k,
            selections: selections.load(Ordering::Relaxed),
            planarity_tests: tests.load(Ordering::Relaxed) - before,
        });
        match found {
            Some(Ok(w)) => {
                outcome.crossing_number = Some(k);
                outcome.witness = Some(w);
                return Ok(outcome);
            }
            Some(Err(e)) => return Err(e),
            None => {}
        }
    }
    Ok(outcome)
}

pub fn exact_crossing_number(g: &SmallGraph, k_max: usize) -> Result<Option<usize>, Error> {
    Ok(solve(g, &SearchOptions::new(k_max))?.crossing_number)
}

/// Turns a witness for `C_m × C_n` into a [`Drawing`].
pub fn witness_to_drawing(g: &SmallGraph, w: &Witness) -> Result<Drawing, Error> {
    let Family::CycleCycle { m, n } = g.family() else {
        return Err(Error::Precondition(format!("{g} is not a product of cycles")));
    };
    let pg = ProductGraph::new(m, n)?;
    let p = &w.planarization;
    // Original edge owning each planarized piece, keyed by (vertex, neighbour).
    let mut owner: HashMap<(usize, usize), (usize, bool)> = HashMap::new();
    for (e, path) in p.paths.iter().enumerate() {
        for x in path.windows(2) {
            owner.insert((x[0], x[1]), (e, true));
            owner.insert((x[1], x[0]), (e, false));
        }
    }
    let mut rotations = Vec::with_capacity(pg.vertex_count());
    for v in 0..pg.vertex_count() {
        let r = &w.rotation[v];
        if r.len() != 4 {
            return Err(Error::Invalid(format!("vertex {v} has degree {}", r.len())));
        }
        let mut out = [pg.edge_at(0); 4];
        for (slot, &x) in out.iter_mut().zip(r) {
            *slot = pg.edge_at(owner[&(v, x)].0);
        }
        rotations.push(out);
    }
    let mut crossings: Vec<Vec<CrossingRef>> = vec![Vec::new(); pg.edge_count()];
    for (e, path) in p.paths.iter().enumerate() {
        for &x in path {
            if x < p.base || x >= p.base + p.crossings.len() {
                continue;
            }
            let (a, b) = p.crossings[x - p.base];
            let other = if a == e { b } else { a };
            let (lo, hi) = (a.min(b), a.max(b));
            let ends = |edge: usize| -> (usize, usize) {
                let q = &p.paths[edge];
                let i = q.iter().position(|&y| y == x).expect("crossing on path");
                (q[i + 1], q[i - 1])
            };
            let (lo_fwd, _) = ends(lo);
            let (hi_fwd, hi_back) = ends(hi);
            let r = &w.rotation[x];
            let i = r.iter().position(|&y| y == lo_fwd).expect("neighbour");
            let next = r[(i + 1) % 4];
            let chirality = if next == hi_back {
                Chirality::Plus
            } else if next == hi_fwd {
                Chirality::Minus
            } else {
                return Err(Error::Invalid(format!("edges {lo} and {hi} do not alternate")));
            };
            crossings[e].push(CrossingRef { other: pg.edge_at(other), chirality });
        }
    }
    Drawing::from_parts(pg, rotations, crossings)
}
