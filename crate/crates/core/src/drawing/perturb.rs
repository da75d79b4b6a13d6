//! Rerouting one edge through the faces of the rest of the drawing.

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{canonical, validate, Chirality, CrossingRef, Drawing, PlanarMap};
use crate::error::Error;
use crate::product_graph::EdgeId;

const MAX_ATTEMPTS: usize = 64;

/// One crossing of a rerouted edge. `slot` is the insertion index into the
/// crossing list of `other` once the rerouted edge has been removed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RouteCrossing {
    pub other: EdgeId,
    pub slot: usize,
    pub chirality: Chirality,
}

/// Where an edge leaves its tail, what it crosses, and where it enters its head.
/// The edge is placed counter-clockwise right after `tail_after` (resp. `head_after`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Route {
    pub tail_after: EdgeId,
    pub head_after: EdgeId,
    pub crossings: Vec<RouteCrossing>,
}

#[derive(Clone, Debug)]
pub struct Perturbation {
    pub drawing: Drawing,
    pub edge: EdgeId,
    pub route: Route,
}

fn predecessor(rot: &[EdgeId; 4], e: EdgeId) -> EdgeId {
    let k = rot.iter().position(|&x| x == e).expect("edge end in rotation");
    rot[(k + 3) % 4]
}

impl Drawing {
    /// The route currently taken by `e`.
    pub fn route_of(&self, e: EdgeId) -> Result<Route, Error> {
        let g = self.graph();
        let mut crossings = Vec::new();
        for (p, c) in self.crossings_of(e).iter().enumerate() {
            if c.other == e {
                return Err(Error::Precondition(format!("{e} crosses itself")));
            }
            let k = self.crossings_of(e)[..p].iter().filter(|x| x.other == c.other).count();
            let list = self.crossings_of(c.other);
            let q = list
                .iter()
                .enumerate()
                .filter(|(_, x)| x.other == e)
                .nth(k)
                .map(|(q, _)| q)
                .expect("consistent drawing");
            let slot = q - list[..q].iter().filter(|x| x.other == e).count();
            crossings.push(RouteCrossing { other: c.other, slot, chirality: c.chirality });
        }
        Ok(Route {
            tail_after: predecessor(self.rotation(g.tail(e)), e),
            head_after: predecessor(self.rotation(g.head(e)), e),
            crossings,
        })
    }

    fn without(&self, e: EdgeId) -> (Vec<Vec<EdgeId>>, Vec<Vec<CrossingRef>>) {
        let rot = self
            .rotations()
            .iter()
            .map(|r| r.iter().copied().filter(|&x| x != e).collect())
            .collect();
        let mut lists: Vec<Vec<CrossingRef>> = self
            .crossing_lists()
            .iter()
            .map(|l| l.iter().copied().filter(|c| c.other != e).collect())
            .collect();
        lists[self.graph().edge_index(e)].clear();
        (rot, lists)
    }

    /// Redraws `e` along `route`, leaving everything else in place.
    pub fn reroute(&self, e: EdgeId, route: &Route) -> Result<Drawing, Error> {
        let g = *self.graph();
        let (rot, mut lists) = self.without(e);
        let mut rotations = Vec::with_capacity(rot.len());
        let (tail, head) = (g.vertex_index(g.tail(e)), g.vertex_index(g.head(e)));
        for (vi, mut r) in rot.into_iter().enumerate() {
            if vi == tail || vi == head {
                let after = if vi == tail { route.tail_after } else { route.head_after };
                let k = r.iter().position(|&x| x == after).ok_or_else(|| {
                    Error::Precondition(format!("{after} does not end at {}", g.vertex_at(vi)))
                })?;
                r.insert(k + 1, e);
            }
            let arr: [EdgeId; 4] =
                r.try_into().map_err(|_| Error::Malformed("bad rotation after reroute".into()))?;
            rotations.push(arr);
        }
        let mut inserts: Vec<(usize, usize, usize, Chirality)> = Vec::new();
        for (order, c) in route.crossings.iter().enumerate() {
            if c.other == e || !g.contains_edge(c.other) {
                return Err(Error::Precondition(format!("route crosses {}", c.other)));
            }
            let oi = g.edge_index(c.other);
            if c.slot > lists[oi].len() {
                return Err(Error::Precondition(format!("slot {} past end of {}", c.slot, c.other)));
            }
            inserts.push((oi, c.slot, order, c.chirality));
        }
        inserts.sort_by(|a, b| (b.0, b.1, b.2).cmp(&(a.0, a.1, a.2)));
        for (oi, slot, _, chirality) in inserts {
            lists[oi].insert(slot, CrossingRef { other: e, chirality });
        }
        lists[g.edge_index(e)] = route
            .crossings
            .iter()
            .map(|c| CrossingRef { other: c.other, chirality: c.chirality })
            .collect();
        Drawing::from_parts(g, rotations, lists)
    }
}

struct Corner {
    face: usize,
    after: EdgeId,
}

fn corners(map: &PlanarMap, node: usize) -> Vec<Corner> {
    map.rotation_at(node)
        .iter()
        .map(|&d| Corner {
            face: map.face_of(map.sigma(d)),
            after: map.segment(map.dart_segment(d)).edge,
        })
        .collect()
}

/// Removes a random edge's crossings and redraws it along a random simple
/// path in the dual of the remaining drawing. The result always validates.
pub fn perturb(d: &Drawing, seed: u64) -> Result<Perturbation, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = *d.graph();
    let e = g.edge_at(rng.gen_range(0..g.edge_count()));
    let (rot, lists) = d.without(e);
    let map = PlanarMap::build(g, &rot, &lists, Some(e));
    let (u, w) = (g.tail(e), g.head(e));
    let tail_corners = corners(&map, map.vertex_node(u));
    let head_corners = corners(&map, map.vertex_node(w));

    let forbidden: BTreeSet<EdgeId> = g.incident(u).into_iter().chain(g.incident(w)).collect();

    // Dual distances to the faces where the edge may end.
    let mut dist = vec![usize::MAX; map.face_count()];
    let mut queue = VecDeque::new();
    for c in &head_corners {
        if dist[c.face] == usize::MAX {
            dist[c.face] = 0;
            queue.push_back(c.face);
        }
    }
    while let Some(f) = queue.pop_front() {
        for &x in &map.faces()[f] {
            let t = map.face_of(x ^ 1);
            if dist[t] == usize::MAX {
                dist[t] = dist[f] + 1;
                queue.push_back(t);
            }
        }
    }

    for _ in 0..MAX_ATTEMPTS {
        let start = tail_corners.choose(&mut rng).expect("vertex has corners");
        let mut cur = start.face;
        let mut visited = BTreeSet::from([cur]);
        let mut crossed = BTreeSet::new();
        let mut route = Vec::new();
        let end = loop {
            let ends: Vec<&Corner> = head_corners.iter().filter(|c| c.face == cur).collect();
            let moves: Vec<usize> = map.faces()[cur]
                .iter()
                .copied()
                .filter(|&x| {
                    let edge = map.segment(map.dart_segment(x)).edge;
                    !forbidden.contains(&edge)
                        && !crossed.contains(&edge)
                        && !visited.contains(&map.face_of(x ^ 1))
                })
                .collect();
            if !ends.is_empty() && (moves.is_empty() || rng.gen_bool(0.5)) {
                break Some(ends[rng.gen_range(0..ends.len())].after);
            }
            if moves.is_empty() {
                break None;
            }
            let x = if rng.gen_bool(0.7) {
                let best = moves.iter().map(|&x| dist[map.face_of(x ^ 1)]).min().unwrap();
                let near: Vec<usize> =
                    moves.iter().copied().filter(|&x| dist[map.face_of(x ^ 1)] == best).collect();
                near[rng.gen_range(0..near.len())]
            } else {
                moves[rng.gen_range(0..moves.len())]
            };
            let seg = map.segment(map.dart_segment(x));
            // The new edge leaves the face on the right of x for the one on its left.
            let ltr = !map.dart_forward(x);
            route.push(RouteCrossing {
                other: seg.edge,
                slot: seg.index,
                chirality: Chirality::from_passage(seg.edge, e, ltr),
            });
            crossed.insert(seg.edge);
            cur = map.face_of(x ^ 1);
            visited.insert(cur);
        };
        let Some(head_after) = end else { continue };
        let r = Route { tail_after: start.after, head_after, crossings: route };
        let out = d.reroute(e, &r)?;
        if validate(&out).is_valid() {
            return Ok(Perturbation { drawing: out, edge: e, route: r });
        }
    }
    Err(Error::Precondition(format!("no valid reroute of {e} found")))
}

/// A fuzzing instance: the canonical drawing after one to four seeded reroutes.
pub fn fuzz_drawing(m: usize, n: usize, seed: u64) -> Result<Drawing, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = canonical(m, n)?;
    let steps = rng.gen_range(1..=4);
    for _ in 0..steps {
        if let Ok(p) = perturb(&d, rng.gen()) {
            d = p.drawing;
        }
    }
    Ok(d)
}
