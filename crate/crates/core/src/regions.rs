//! Connected components of the sphere minus one red cycle.
//!
//! The planarization is cut along `R(j)`: its segments, its vertices and every
//! crossing on it are removed. The remaining faces, segments and nodes are
//! merged by incidence.

use std::collections::BTreeSet;

use crate::drawing::{Drawing, NodeKind, PlanarMap};
use crate::error::Error;
use crate::product_graph::{EdgeId, VertexId};
use crate::robustness::RedCrossings;
use crate::union_find::UnionFind;

pub type ComponentId = usize;

/// The components of the complement of `R(j)`.
#[derive(Clone, Debug)]
pub struct Partition {
    j: usize,
    count: usize,
    face_comp: Vec<ComponentId>,
    seg_comp: Vec<Option<ComponentId>>,
    node_comp: Vec<Option<ComponentId>>,
    red_comps: Vec<BTreeSet<ComponentId>>,
}

impl Partition {
    pub fn curve(&self) -> usize {
        self.j
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn face_component(&self, f: usize) -> ComponentId {
        self.face_comp[f]
    }

    /// `None` for segments of `R(j)`.
    pub fn segment_component(&self, s: usize) -> Option<ComponentId> {
        self.seg_comp[s]
    }

    /// `None` for nodes on `R(j)`.
    pub fn node_component(&self, node: usize) -> Option<ComponentId> {
        self.node_comp[node]
    }

    /// Components met by the segments of `R(k)`, `k ≠ j`.
    pub fn red_components(&self, k: usize) -> &BTreeSet<ComponentId> {
        &self.red_comps[k]
    }
}

/// Computes the components of the complement of `R(j)` in `map`.
pub fn complement_components(map: &PlanarMap, j: usize) -> Partition {
    let g = *map.graph();
    let on_curve = |e: EdgeId| e.red_cycle() == Some(j);
    let faces = map.face_count();
    let segs = map.segment_count();
    let nodes = map.node_count();

    let seg_removed: Vec<bool> = map.segments().iter().map(|s| on_curve(s.edge)).collect();
    let node_removed: Vec<bool> = (0..nodes)
        .map(|x| match map.node_kind(x) {
            NodeKind::Vertex(v) => v.j == j,
            NodeKind::Crossing(r) => {
                let rec = map.crossing_records()[r];
                on_curve(rec.e) || on_curve(rec.f)
            }
        })
        .collect();

    let mut uf = UnionFind::new(faces + segs + nodes);
    for (f, face) in map.faces().iter().enumerate() {
        for &d in face {
            let s = map.dart_segment(d);
            if !seg_removed[s] {
                uf.union(f, faces + s);
            }
        }
    }
    for (s, seg) in map.segments().iter().enumerate() {
        if seg_removed[s] {
            continue;
        }
        for x in [seg.from, seg.to] {
            if !node_removed[x] {
                uf.union(faces + s, faces + segs + x);
            }
        }
    }

    // Number components in order of first appearance: faces, segments, nodes.
    let mut label = vec![usize::MAX; faces + segs + nodes];
    let mut count = 0;
    let mut name = |uf: &mut UnionFind, x: usize| -> ComponentId {
        let r = uf.find(x);
        if label[r] == usize::MAX {
            label[r] = count;
            count += 1;
        }
        label[r]
    };
    let face_comp: Vec<ComponentId> = (0..faces).map(|f| name(&mut uf, f)).collect();
    let seg_comp: Vec<Option<ComponentId>> = (0..segs)
        .map(|s| (!seg_removed[s]).then(|| name(&mut uf, faces + s)))
        .collect();
    let node_comp: Vec<Option<ComponentId>> = (0..nodes)
        .map(|x| (!node_removed[x]).then(|| name(&mut uf, faces + segs + x)))
        .collect();

    let mut red_comps = vec![BTreeSet::new(); g.n()];
    for (s, seg) in map.segments().iter().enumerate() {
        if let (Some(k), Some(c)) = (seg.edge.red_cycle(), seg_comp[s]) {
            red_comps[k].insert(c);
        }
    }
    Partition { j, count, face_comp, seg_comp, node_comp, red_comps }
}

/// Region queries for every red cycle of one drawing.
#[derive(Clone, Debug)]
pub struct Regions {
    map: PlanarMap,
    red: RedCrossings,
    partitions: Vec<Partition>,
    omega: Vec<Result<ComponentId, OmegaFailure>>,
}

#[derive(Clone, Copy, Debug)]
enum OmegaFailure {
    NoPartner,
    Missed(usize),
}

impl Regions {
    pub fn new(d: &Drawing) -> Regions {
        let map = d.planarize();
        let red = RedCrossings::from_drawing(d);
        let partitions: Vec<Partition> =
            (0..d.n()).map(|j| complement_components(&map, j)).collect();
        let omega = partitions.iter().map(|p| find_omega(&map, &red, p)).collect();
        Regions { map, red, partitions, omega }
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn red_crossings(&self) -> &RedCrossings {
        &self.red
    }

    pub fn partition(&self, j: usize) -> &Partition {
        &self.partitions[j]
    }

    pub fn component_count(&self, j: usize) -> usize {
        self.partitions[j].count
    }

    /// `Ω_j`: the component containing every red cycle disjoint from `R(j)`.
    pub fn omega(&self, j: usize) -> Result<ComponentId, Error> {
        match self.omega[j] {
            Ok(c) => Ok(c),
            Err(OmegaFailure::NoPartner) => Err(Error::NoDisjointPartner { j }),
            Err(OmegaFailure::Missed(k)) => Err(Error::OuterRegionMissed { j, k }),
        }
    }

    /// `Φ_j`: all other components.
    pub fn phi(&self, j: usize) -> Result<Vec<ComponentId>, Error> {
        let om = self.omega(j)?;
        Ok((0..self.partitions[j].count).filter(|&c| c != om).collect())
    }

    pub fn locate_vertex(&self, v: VertexId, j: usize) -> Result<ComponentId, Error> {
        self.partitions[j]
            .node_component(self.map.vertex_node(v))
            .ok_or_else(|| Error::OnCurve(format!("vertex {v} on R({j})")))
    }

    /// Component containing the start of `e` at `v`, where `v` lies on `R(j)`.
    pub fn germ_component(&self, v: VertexId, e: EdgeId, j: usize) -> Result<ComponentId, Error> {
        let g = self.map.graph();
        if !g.is_incident(e, v) {
            return Err(Error::Precondition(format!("{e} is not incident to {v}")));
        }
        if e.red_cycle() == Some(j) {
            return Err(Error::OnCurve(format!("edge {e} on R({j})")));
        }
        let r = self.map.edge_segments(e);
        let s = if g.tail(e) == v { r.start } else { r.end - 1 };
        Ok(self.partitions[j].segment_component(s).expect("segment off the curve"))
    }

    /// Whether `R(j)` separates `R(k)` from `R(l)`.
    pub fn separates(&self, j: usize, k: usize, l: usize) -> bool {
        let p = &self.partitions[j];
        p.red_comps[k].is_disjoint(&p.red_comps[l])
    }
}

fn find_omega(
    map: &PlanarMap,
    red: &RedCrossings,
    p: &Partition,
) -> Result<ComponentId, OmegaFailure> {
    let n = map.graph().n();
    let j = p.j;
    let partner = (0..n).find(|&k| k != j && !red.cross(j, k)).ok_or(OmegaFailure::NoPartner)?;
    let omega = *p.red_comps[partner].iter().next().expect("red cycle has segments");
    for k in (0..n).filter(|&k| k != j) {
        if !p.red_comps[k].contains(&omega) {
            return Err(OmegaFailure::Missed(k));
        }
    }
    Ok(omega)
}
