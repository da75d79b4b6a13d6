//! JSON form of a drawing. Keys are emitted in vertex and edge index order.

use std::collections::BTreeMap;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{CrossingRef, Drawing};
use crate::error::Error;
use crate::product_graph::{EdgeId, ProductGraph, VertexId};

#[derive(Serialize, Deserialize)]
struct EdgeEntry {
    tail: String,
    head: String,
    crossings: Vec<CrossingRef>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DrawingFile {
    m: usize,
    n: usize,
    rotations: BTreeMap<String, Vec<EdgeId>>,
    edges: BTreeMap<String, EdgeEntry>,
}

struct Rotations<'a>(&'a Drawing);
struct Edges<'a>(&'a Drawing);

impl Serialize for Rotations<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let d = self.0;
        let mut map = s.serialize_map(Some(d.graph().vertex_count()))?;
        for v in d.graph().vertices() {
            map.serialize_entry(&v.to_string(), d.rotation(v))?;
        }
        map.end()
    }
}

impl Serialize for Edges<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let d = self.0;
        let g = d.graph();
        let mut map = s.serialize_map(Some(g.edge_count()))?;
        for e in g.edges() {
            let entry = EdgeEntry {
                tail: g.tail(e).to_string(),
                head: g.head(e).to_string(),
                crossings: d.crossings_of(e).to_vec(),
            };
            map.serialize_entry(&e.to_string(), &entry)?;
        }
        map.end()
    }
}

impl Serialize for Drawing {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Drawing", 4)?;
        st.serialize_field("m", &self.m())?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("rotations", &Rotations(self))?;
        st.serialize_field("edges", &Edges(self))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Drawing {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let file = DrawingFile::deserialize(d)?;
        from_file(file).map_err(serde::de::Error::custom)
    }
}

fn from_file(file: DrawingFile) -> Result<Drawing, Error> {
    let g = ProductGraph::new(file.m, file.n)?;
    if file.rotations.len() != g.vertex_count() {
        return Err(Error::Malformed(format!(
            "{} rotations for {} vertices",
            file.rotations.len(),
            g.vertex_count()
        )));
    }
    if file.edges.len() != g.edge_count() {
        return Err(Error::Malformed(format!(
            "{} edges listed, expected {}",
            file.edges.len(),
            g.edge_count()
        )));
    }
    let mut rotations = vec![None; g.vertex_count()];
    for (key, rot) in file.rotations {
        let v: VertexId = key.parse()?;
        if !g.contains_vertex(v) {
            return Err(Error::Malformed(format!("unknown vertex {key}")));
        }
        let arr: [EdgeId; 4] = rot
            .try_into()
            .map_err(|_| Error::Malformed(format!("rotation at {key} must have four entries")))?;
        rotations[g.vertex_index(v)] = Some(arr);
    }
    let rotations: Vec<[EdgeId; 4]> = rotations
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Malformed("missing rotation".into()))?;

    let mut crossings = vec![None; g.edge_count()];
    for (key, entry) in file.edges {
        let e: EdgeId = key.parse()?;
        if !g.contains_edge(e) {
            return Err(Error::Malformed(format!("unknown edge {key}")));
        }
        let tail: VertexId = entry.tail.parse()?;
        let head: VertexId = entry.head.parse()?;
        if tail != g.tail(e) || head != g.head(e) {
            return Err(Error::Malformed(format!("wrong endpoints for {key}")));
        }
        crossings[g.edge_index(e)] = Some(entry.crossings);
    }
    let crossings: Vec<Vec<CrossingRef>> = crossings
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Malformed("missing edge".into()))?;
    Drawing::from_parts(g, rotations, crossings)
}
