//! The graph `C_m × C_n` with its blue and red cycles.
//!
//! Vertex `v(i,j)` has `i ∈ Z_m`, `j ∈ Z_n`. The blue edge `bl(i,j)` runs
//! `v(i,j⊖1) → v(i,j)` and lies on `B(i)`; the red edge `r(i,j)` runs
//! `v(i,j) → v(i⊕1,j)` and lies on `R(j)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::zring::{add_mod, sub_mod};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId {
    pub i: usize,
    pub j: usize,
}

impl VertexId {
    pub fn new(i: usize, j: usize) -> Self {
        VertexId { i, j }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.i, self.j)
    }
}

impl FromStr for VertexId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut it = s.split(':');
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::Parse(format!("bad vertex id {s:?}")));
        };
        let i = a.parse().map_err(|_| Error::Parse(format!("bad vertex id {s:?}")))?;
        let j = b.parse().map_err(|_| Error::Parse(format!("bad vertex id {s:?}")))?;
        Ok(VertexId { i, j })
    }
}

/// An edge of `C_m × C_n`. Blue edges sort before red ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeId {
    /// `bl(i,j)`, serialized `B:i:j`.
    Blue { i: usize, j: usize },
    /// `r(i,j)`, serialized `R:j:i`.
    Red { j: usize, i: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Blue,
    Red,
}

impl EdgeId {
    pub fn blue(i: usize, j: usize) -> Self {
        EdgeId::Blue { i, j }
    }

    pub fn red(i: usize, j: usize) -> Self {
        EdgeId::Red { j, i }
    }

    pub fn color(self) -> Color {
        match self {
            EdgeId::Blue { .. } => Color::Blue,
            EdgeId::Red { .. } => Color::Red,
        }
    }

    pub fn is_blue(self) -> bool {
        matches!(self, EdgeId::Blue { .. })
    }

    /// Index of the blue cycle carrying this edge.
    pub fn blue_cycle(self) -> Option<usize> {
        match self {
            EdgeId::Blue { i, .. } => Some(i),
            EdgeId::Red { .. } => None,
        }
    }

    /// Index of the red cycle carrying this edge.
    pub fn red_cycle(self) -> Option<usize> {
        match self {
            EdgeId::Red { j, .. } => Some(j),
            EdgeId::Blue { .. } => None,
        }
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeId::Blue { i, j } => write!(f, "B:{i}:{j}"),
            EdgeId::Red { j, i } => write!(f, "R:{j}:{i}"),
        }
    }
}

impl FromStr for EdgeId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("bad edge id {s:?}"));
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let a: usize = parts[1].parse().map_err(|_| bad())?;
        let b: usize = parts[2].parse().map_err(|_| bad())?;
        match parts[0] {
            "B" => Ok(EdgeId::Blue { i: a, j: b }),
            "R" => Ok(EdgeId::Red { j: a, i: b }),
            _ => Err(bad()),
        }
    }
}

impl Serialize for EdgeId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for EdgeId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `C_m × C_n` with `m, n ≥ 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProductGraph {
    m: usize,
    n: usize,
}

impl ProductGraph {
    pub fn new(m: usize, n: usize) -> Result<Self, Error> {
        if m < 3 || n < 3 {
            return Err(Error::InvalidSize { m, n });
        }
        Ok(ProductGraph { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.m * self.n
    }

    pub fn edge_count(&self) -> usize {
        2 * self.m * self.n
    }

    pub fn vertex_index(&self, v: VertexId) -> usize {
        v.i * self.n + v.j
    }

    pub fn vertex_at(&self, idx: usize) -> VertexId {
        VertexId { i: idx / self.n, j: idx % self.n }
    }

    /// Blue edges first (`i`-major), then red edges (`j`-major).
    pub fn edge_index(&self, e: EdgeId) -> usize {
        match e {
            EdgeId::Blue { i, j } => i * self.n + j,
            EdgeId::Red { j, i } => self.m * self.n + j * self.m + i,
        }
    }

    pub fn edge_at(&self, idx: usize) -> EdgeId {
        let mn = self.m * self.n;
        if idx < mn {
            EdgeId::Blue { i: idx / self.n, j: idx % self.n }
        } else {
            let r = idx - mn;
            EdgeId::Red { j: r / self.m, i: r % self.m }
        }
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.i < self.m && v.j < self.n
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        match e {
            EdgeId::Blue { i, j } | EdgeId::Red { j, i } => i < self.m && j < self.n,
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).map(move |k| self.vertex_at(k))
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edge_count()).map(move |k| self.edge_at(k))
    }

    pub fn tail(&self, e: EdgeId) -> VertexId {
        match e {
            EdgeId::Blue { i, j } => VertexId::new(i, sub_mod(j, 1, self.n)),
            EdgeId::Red { j, i } => VertexId::new(i, j),
        }
    }

    pub fn head(&self, e: EdgeId) -> VertexId {
        match e {
            EdgeId::Blue { i, j } => VertexId::new(i, j),
            EdgeId::Red { j, i } => VertexId::new(add_mod(i, 1, self.m), j),
        }
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        (self.tail(e), self.head(e))
    }

    /// The four edges at `v`: incoming red, incoming blue, outgoing red, outgoing blue.
    pub fn incident(&self, v: VertexId) -> [EdgeId; 4] {
        [
            EdgeId::red(sub_mod(v.i, 1, self.m), v.j),
            EdgeId::blue(v.i, v.j),
            EdgeId::red(v.i, v.j),
            EdgeId::blue(v.i, add_mod(v.j, 1, self.n)),
        ]
    }

    pub fn is_incident(&self, e: EdgeId, v: VertexId) -> bool {
        let (t, h) = self.endpoints(e);
        t == v || h == v
    }

    /// Two distinct edges sharing an endpoint.
    pub fn adjacent(&self, e: EdgeId, f: EdgeId) -> bool {
        if e == f {
            return false;
        }
        let (a, b) = self.endpoints(e);
        let (c, d) = self.endpoints(f);
        a == c || a == d || b == c || b == d
    }

    /// Edges of `R(j)` in cycle order `r(0,j), .., r(m-1,j)`.
    pub fn red_cycle(&self, j: usize) -> Vec<EdgeId> {
        (0..self.m).map(|i| EdgeId::red(i, j)).collect()
    }

    /// Edges of `B(i)` in cycle order `bl(i,0), .., bl(i,n-1)`.
    pub fn blue_cycle(&self, i: usize) -> Vec<EdgeId> {
        (0..self.n).map(|j| EdgeId::blue(i, j)).collect()
    }

    /// `P(i,j,k)`: the blue edges `bl(i,j⊕1), .., bl(i,k)`.
    pub fn open_blue_path(&self, i: usize, j: usize, k: usize) -> Result<Vec<EdgeId>, Error> {
        if i >= self.m {
            return Err(Error::OutOfRange { what: "blue index", value: i, bound: self.m });
        }
        let (j, k) = (j % self.n, k % self.n);
        if j == k {
            return Err(Error::EmptyPath { j, k });
        }
        let len = sub_mod(k, j, self.n);
        Ok((1..=len).map(|t| EdgeId::blue(i, add_mod(j, t, self.n))).collect())
    }
}
