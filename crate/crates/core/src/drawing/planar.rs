//! Planarization: crossings become degree-4 nodes, edges become chains of
//! segments, and faces are read off the rotation system.

use std::ops::Range;

use super::{Chirality, CrossingId, CrossingRef};
use crate::product_graph::{EdgeId, ProductGraph, VertexId};

/// A half-segment. `2s` runs along segment `s` in the edge direction, `2s+1` against it.
pub type Dart = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub edge: EdgeId,
    /// Position along the edge, `0` at the tail.
    pub index: usize,
    pub from: usize,
    pub to: usize,
}

/// A crossing node: the `pos_e`-th entry on `e` meets the `pos_f`-th entry on `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingRecord {
    pub id: CrossingId,
    pub e: EdgeId,
    pub pos_e: usize,
    pub f: EdgeId,
    pub pos_f: usize,
    pub chirality: Chirality,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Vertex(VertexId),
    Crossing(usize),
}

#[derive(Clone, Debug)]
pub struct PlanarMap {
    graph: ProductGraph,
    records: Vec<CrossingRecord>,
    segments: Vec<Segment>,
    edge_segments: Vec<Range<usize>>,
    rotation: Vec<Vec<Dart>>,
    sigma: Vec<Dart>,
    faces: Vec<Vec<Dart>>,
    face_of: Vec<usize>,
}

/// Pairs up the list entries of each crossing.
pub(crate) fn crossing_records(
    graph: &ProductGraph,
    crossings: &[Vec<CrossingRef>],
) -> (Vec<CrossingRecord>, Vec<Vec<usize>>) {
    let mut records = Vec::new();
    let mut slot: Vec<Vec<usize>> = crossings.iter().map(|l| vec![usize::MAX; l.len()]).collect();
    for (ei, list) in crossings.iter().enumerate() {
        let e = graph.edge_at(ei);
        for (p, c) in list.iter().enumerate() {
            if slot[ei][p] != usize::MAX {
                continue;
            }
            let f = c.other;
            let fi = graph.edge_index(f);
            let pf = if e == f {
                (p + 1..list.len()).find(|&q| list[q].other == e && slot[ei][q] == usize::MAX)
            } else {
                // k-th mention of f on e pairs with the k-th mention of e on f.
                let k = list[..p].iter().filter(|x| x.other == f).count();
                crossings[fi]
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| x.other == e)
                    .nth(k)
                    .map(|(q, _)| q)
            };
            let Some(pf) = pf else { continue };
            let r = records.len();
            slot[ei][p] = r;
            slot[fi][pf] = r;
            records.push(CrossingRecord {
                id: CrossingId::new(e, f),
                e,
                pos_e: p,
                f,
                pos_f: pf,
                chirality: c.chirality,
            });
        }
    }
    (records, slot)
}

impl PlanarMap {
    /// `rotations[v]` lists the edges present at `v` counter-clockwise;
    /// `skip` names an edge left out of the map.
    pub(crate) fn build(
        graph: ProductGraph,
        rotations: &[Vec<EdgeId>],
        crossings: &[Vec<CrossingRef>],
        skip: Option<EdgeId>,
    ) -> PlanarMap {
        let vcount = graph.vertex_count();
        let (records, slot) = crossing_records(&graph, crossings);

        let mut segments = Vec::new();
        let mut edge_segments = vec![0..0; graph.edge_count()];
        for ei in 0..graph.edge_count() {
            let e = graph.edge_at(ei);
            if Some(e) == skip {
                continue;
            }
            let k = crossings[ei].len();
            let node = |p: usize| -> usize {
                if p == 0 {
                    graph.vertex_index(graph.tail(e))
                } else if p == k + 1 {
                    graph.vertex_index(graph.head(e))
                } else {
                    vcount + slot[ei][p - 1]
                }
            };
            let start = segments.len();
            for t in 0..=k {
                segments.push(Segment { edge: e, index: t, from: node(t), to: node(t + 1) });
            }
            edge_segments[ei] = start..segments.len();
        }

        let node_count = vcount + records.len();
        let mut rotation: Vec<Vec<Dart>> = vec![Vec::new(); node_count];
        for (vi, rot) in rotations.iter().enumerate() {
            let v = graph.vertex_at(vi);
            for &x in rot {
                let r = &edge_segments[graph.edge_index(x)];
                let dart = if graph.tail(x) == v { 2 * r.start } else { 2 * (r.end - 1) + 1 };
                rotation[vi].push(dart);
            }
        }
        for (ri, rec) in records.iter().enumerate() {
            let re = edge_segments[graph.edge_index(rec.e)].start;
            let rf = edge_segments[graph.edge_index(rec.f)].start;
            let e_back = 2 * (re + rec.pos_e) + 1;
            let e_fwd = 2 * (re + rec.pos_e + 1);
            let f_back = 2 * (rf + rec.pos_f) + 1;
            let f_fwd = 2 * (rf + rec.pos_f + 1);
            rotation[vcount + ri] = match rec.chirality {
                Chirality::Plus => vec![e_fwd, f_back, e_back, f_fwd],
                Chirality::Minus => vec![e_fwd, f_fwd, e_back, f_back],
            };
        }

        let mut sigma = vec![usize::MAX; 2 * segments.len()];
        for rot in &rotation {
            for (k, &d) in rot.iter().enumerate() {
                sigma[d] = rot[(k + 1) % rot.len()];
            }
        }

        let mut face_of = vec![usize::MAX; sigma.len()];
        let mut faces = Vec::new();
        for start in 0..sigma.len() {
            if face_of[start] != usize::MAX {
                continue;
            }
            let fid = faces.len();
            let mut face = Vec::new();
            let mut d = start;
            while face_of[d] == usize::MAX {
                face_of[d] = fid;
                face.push(d);
                d = sigma[d ^ 1];
            }
            faces.push(face);
        }

        PlanarMap { graph, records, segments, edge_segments, rotation, sigma, faces, face_of }
    }

    pub fn graph(&self) -> &ProductGraph {
        &self.graph
    }

    pub fn node_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn vertex_node(&self, v: VertexId) -> usize {
        self.graph.vertex_index(v)
    }

    pub fn node_kind(&self, node: usize) -> NodeKind {
        if node < self.graph.vertex_count() {
            NodeKind::Vertex(self.graph.vertex_at(node))
        } else {
            NodeKind::Crossing(node - self.graph.vertex_count())
        }
    }

    pub fn crossing_records(&self) -> &[CrossingRecord] {
        &self.records
    }

    pub fn segment(&self, s: usize) -> &Segment {
        &self.segments[s]
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Segments of `e` from tail to head.
    pub fn edge_segments(&self, e: EdgeId) -> Range<usize> {
        self.edge_segments[self.graph.edge_index(e)].clone()
    }

    pub fn dart_segment(&self, d: Dart) -> usize {
        d / 2
    }

    pub fn dart_forward(&self, d: Dart) -> bool {
        d % 2 == 0
    }

    pub fn dart_origin(&self, d: Dart) -> usize {
        let s = &self.segments[d / 2];
        if d % 2 == 0 {
            s.from
        } else {
            s.to
        }
    }

    /// Darts leaving `node`, counter-clockwise.
    pub fn rotation_at(&self, node: usize) -> &[Dart] {
        &self.rotation[node]
    }

    /// Counter-clockwise successor of `d` around its origin.
    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d]
    }

    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    /// The face on the right of `d`.
    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }

    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &d in &self.rotation[u] {
                let w = self.dart_origin(d ^ 1);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.node_count() as i64 - self.segment_count() as i64 + self.face_count() as i64
    }

    /// Orientable genus, assuming the map is connected.
    pub fn genus(&self) -> i64 {
        (2 - self.euler_characteristic()) / 2
    }
}
