//! Exact crossing numbers of small graphs and the closed-form lower bounds
//! for `C_m × C_n`.

mod bounds;
pub mod planarity;
mod search;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

pub use bounds::{bound_table, hks_lower_bound, improved_threshold, main_threshold, BoundResult, Regime};
pub use search::{
    exact_crossing_number, solve, witness_to_drawing, Planarization, SearchOptions, SolveOutcome,
    Witness,
};

use crate::error::Error;
use crate::product_graph::ProductGraph;
use crate::zring::add_mod;

/// Which family a graph came from, kept for symmetry pruning and for turning
/// witnesses back into drawings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    CycleCycle { m: usize, n: usize },
    CyclePath { m: usize, n: usize },
    Other,
}

/// A simple connected graph on vertices `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallGraph {
    order: usize,
    edges: Vec<(usize, usize)>,
    family: Family,
}

impl SmallGraph {
    pub fn new(order: usize, edges: Vec<(usize, usize)>) -> Result<Self, Error> {
        let g = SmallGraph { order, edges, family: Family::Other };
        g.check()?;
        Ok(g)
    }

    fn check(&self) -> Result<(), Error> {
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &self.edges {
            if u >= self.order || v >= self.order {
                return Err(Error::Invalid(format!("edge ({u},{v}) out of range")));
            }
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Invalid(format!("graph is not simple at ({u},{v})")));
            }
        }
        let mut comp = vec![false; self.order];
        let mut stack = vec![0];
        if self.order > 0 {
            comp[0] = true;
        }
        while let Some(x) = stack.pop() {
            for &(u, v) in &self.edges {
                for (a, b) in [(u, v), (v, u)] {
                    if a == x && !comp[b] {
                        comp[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        if comp.iter().any(|&c| !c) {
            return Err(Error::Invalid("graph is not connected".into()));
        }
        Ok(())
    }

    /// `C_m × C_n`, numbered as in [`ProductGraph`]: edge `e` is directed
    /// from its tail to its head.
    pub fn cycle_product(m: usize, n: usize) -> Result<Self, Error> {
        let g = ProductGraph::new(m, n)?;
        let edges = g
            .edges()
            .map(|e| (g.vertex_index(g.tail(e)), g.vertex_index(g.head(e))))
            .collect();
        Ok(SmallGraph { order: g.vertex_count(), edges, family: Family::CycleCycle { m, n } })
    }

    /// `C_m × P_n`, with `P_n` the path on `n ≥ 1` vertices. Vertex `(i,j)` is `i*n + j`.
    pub fn cycle_path(m: usize, n: usize) -> Result<Self, Error> {
        if m < 3 || n < 1 {
            return Err(Error::InvalidSize { m, n });
        }
        let mut edges = Vec::new();
        for i in 0..m {
            for j in 0..n {
                if j + 1 < n {
                    edges.push((i * n + j, i * n + j + 1));
                }
            }
        }
        for j in 0..n {
            for i in 0..m {
                edges.push((i * n + j, add_mod(i, 1, m) * n + j));
            }
        }
        Ok(SmallGraph { order: m * n, edges, family: Family::CyclePath { m, n } })
    }

    pub fn complete(k: usize) -> Result<Self, Error> {
        SmallGraph::new(k, (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).collect())
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, Error> {
        SmallGraph::new(a + b, (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))).collect())
    }

    pub fn petersen() -> Self {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        SmallGraph::new(10, e).expect("petersen graph")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The graph with edge `idx` removed; the result must stay connected.
    pub fn without_edge(&self, idx: usize) -> Result<Self, Error> {
        let mut edges = self.edges.clone();
        edges.remove(idx);
        SmallGraph::new(self.order, edges)
    }

    /// Automorphisms as edge permutations, identity first.
    pub fn edge_automorphisms(&self) -> Vec<Vec<usize>> {
        let vertex_maps: Vec<Vec<usize>> = match self.family {
            Family::CycleCycle { m, n } => torus_maps(m, n, true),
            Family::CyclePath { m, n } => torus_maps(m, n, false),
            Family::Other => vec![(0..self.order).collect()],
        };
        let index: HashMap<(usize, usize), usize> = self
            .edges
            .iter()
            .enumerate()
            .map(|(k, &(u, v))| ((u.min(v), u.max(v)), k))
            .collect();
        let mut out: Vec<Vec<usize>> = vertex_maps
            .iter()
            .map(|p| {
                self.edges
                    .iter()
                    .map(|&(u, v)| {
                        let (a, b) = (p[u], p[v]);
                        index[&(a.min(b), a.max(b))]
                    })
                    .collect()
            })
            .collect();
        out.sort();
        out.dedup();
        let id: Vec<usize> = (0..self.edges.len()).collect();
        out.retain(|p| *p != id);
        out.insert(0, id);
        out
    }
}

/// Vertex maps `(i,j) -> (±i+a, ±j+b)`, plus the swap when `m = n`. For the
/// cylinder (`cyclic_j = false`) the second coordinate only reflects.
fn torus_maps(m: usize, n: usize, cyclic_j: bool) -> Vec<Vec<usize>> {
    // Both families number vertex (i,j) as i*n + j.
    let idx = |i: usize, j: usize| i * n + j;
    let mut out = Vec::new();
    let shifts_j: Vec<usize> = if cyclic_j { (0..n).collect() } else { vec![0] };
    for a in 0..m {
        for &b in &shifts_j {
            for si in [false, true] {
                for sj in [false, true] {
                    let mut p = vec![0; m * n];
                    for i in 0..m {
                        for j in 0..n {
                            let ii = if si { (m - i) % m } else { i };
                            let jj = match (cyclic_j, sj) {
                                (true, true) => (n - j) % n,
                                (false, true) => n - 1 - j,
                                _ => j,
                            };
                            p[idx(i, j)] = idx((ii + a) % m, (jj + b) % n);
                        }
                    }
                    if cyclic_j && m == n {
                        let q = p.iter().map(|&t| idx(t % n, t / n)).collect();
                        out.push(q);
                    }
                    out.push(p);
                }
            }
        }
    }
    out
}

impl fmt::Display for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::CycleCycle { m, n } => write!(f, "cm-cn:{m},{n}"),
            Family::CyclePath { m, n } => write!(f, "cm-pn:{m},{n}"),
            Family::Other => write!(f, "graph({} vertices, {} edges)", self.order, self.edges.len()),
        }
    }
}

/// Accepts `cm-cn:M,N`, `cm-pn:M,N`, `k:N`, `k:A,B` and `petersen`.
impl FromStr for SmallGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "petersen" {
            return Ok(SmallGraph::petersen());
        }
        let (kind, args) =
            s.split_once(':').ok_or_else(|| Error::Parse(format!("graph spec {s:?}")))?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|e| Error::Parse(format!("graph spec {s:?}: {e}")))?;
        match (kind, nums.as_slice()) {
            ("cm-cn", &[m, n]) => SmallGraph::cycle_product(m, n),
            ("cm-pn", &[m, n]) => SmallGraph::cycle_path(m, n),
            ("k", &[k]) => SmallGraph::complete(k),
            ("k", &[a, b]) => SmallGraph::complete_bipartite(a, b),
            _ => Err(Error::Parse(format!("graph spec {s:?}"))),
        }
    }
}
