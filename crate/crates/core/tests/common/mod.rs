#![allow(dead_code)]

//! Builds drawings from explicit plane coordinates. Used as an oracle for the
//! combinatorial generator and to make hand-crafted fixtures.

use std::f64::consts::TAU;

use crossring::{Chirality, CrossingRef, Drawing, EdgeId, ProductGraph, VertexId};

type P = (f64, f64);

fn orient(a: P, b: P, c: P) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

/// Proper intersection parameters of segments `ab` and `cd`.
fn intersect(a: P, b: P, c: P, d: P) -> Option<(f64, f64)> {
    let d1 = orient(a, b, c);
    let d2 = orient(a, b, d);
    let d3 = orient(c, d, a);
    let d4 = orient(c, d, b);
    let eps = 1e-12;
    if d1.abs() < eps || d2.abs() < eps || d3.abs() < eps || d4.abs() < eps {
        return None;
    }
    if (d1 > 0.0) == (d2 > 0.0) || (d3 > 0.0) == (d4 > 0.0) {
        return None;
    }
    let t = d3 / (d3 - d4);
    let u = d1 / (d1 - d2);
    Some((t, u))
}

/// Turns polylines (one per edge, endpoints included) into a drawing.
pub fn from_polylines(m: usize, n: usize, route: impl Fn(EdgeId) -> Vec<P>) -> Drawing {
    let g = ProductGraph::new(m, n).unwrap();
    let lines: Vec<Vec<P>> = g.edges().map(&route).collect();
    let mut hits: Vec<Vec<(f64, CrossingRef)>> = vec![Vec::new(); g.edge_count()];
    for ei in 0..g.edge_count() {
        for fi in ei + 1..g.edge_count() {
            let (e, f) = (g.edge_at(ei), g.edge_at(fi));
            let (le, lf) = (&lines[ei], &lines[fi]);
            for s in 0..le.len() - 1 {
                for t in 0..lf.len() - 1 {
                    if let Some((pa, pb)) = intersect(le[s], le[s + 1], lf[t], lf[t + 1]) {
                        let de = (le[s + 1].0 - le[s].0, le[s + 1].1 - le[s].1);
                        let df = (lf[t + 1].0 - lf[t].0, lf[t + 1].1 - lf[t].1);
                        // e < f here; f passes e left to right when it heads to e's right.
                        let cross = de.0 * df.1 - de.1 * df.0;
                        let chi = if cross < 0.0 { Chirality::Plus } else { Chirality::Minus };
                        hits[ei].push((s as f64 + pa, CrossingRef { other: f, chirality: chi }));
                        hits[fi].push((t as f64 + pb, CrossingRef { other: e, chirality: chi }));
                    }
                }
            }
        }
    }
    let crossings: Vec<Vec<CrossingRef>> = hits
        .into_iter()
        .map(|mut h| {
            h.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
            h.into_iter().map(|x| x.1).collect()
        })
        .collect();
    let mut rotations = Vec::new();
    for v in g.vertices() {
        let mut ends: Vec<(f64, EdgeId)> = g
            .incident(v)
            .into_iter()
            .map(|e| {
                let l = &lines[g.edge_index(e)];
                let (p, q) = if g.tail(e) == v { (l[0], l[1]) } else { (l[l.len() - 1], l[l.len() - 2]) };
                ((q.1 - p.1).atan2(q.0 - p.0), e)
            })
            .collect();
        ends.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        rotations.push([ends[0].1, ends[1].1, ends[2].1, ends[3].1]);
    }
    Drawing::from_parts(g, rotations, crossings).expect("geometric drawing is consistent")
}

pub fn polar(r: f64, a: f64) -> P {
    (r * a.cos(), r * a.sin())
}

/// Samples a path that is linear in (radius, angle) between waypoints.
pub fn polar_path(waypoints: &[(f64, f64)]) -> Vec<P> {
    let steps = 23;
    let mut out = vec![polar(waypoints[0].0, waypoints[0].1)];
    for w in waypoints.windows(2) {
        let ((r0, a0), (r1, a1)) = (w[0], w[1]);
        for s in 1..=steps {
            let t = s as f64 / steps as f64;
            out.push(polar(r0 + (r1 - r0) * t, a0 + (a1 - a0) * t));
        }
    }
    out
}

/// Concentric layout: `v(i,j)` at radius `i+1`, angle `j·Δ`. Blue edges are
/// arcs and non-closing red edges are radial. `closing(j)` gives the
/// waypoints of `r(m-1,j)` in (radius, angle).
pub fn concentric(m: usize, n: usize, closing: impl Fn(usize) -> Vec<(f64, f64)>) -> Drawing {
    let delta = TAU / n as f64;
    let at = |v: VertexId| polar((v.i + 1) as f64, v.j as f64 * delta);
    let g = ProductGraph::new(m, n).unwrap();
    from_polylines(m, n, |e| {
        let mut line = raw_route(m, delta, &closing, e);
        let k = line.len() - 1;
        line[0] = at(g.tail(e));
        line[k] = at(g.head(e));
        line
    })
}

fn raw_route(m: usize, delta: f64, closing: &impl Fn(usize) -> Vec<(f64, f64)>, e: EdgeId) -> Vec<P> {
    match e {
        EdgeId::Blue { i, j } => {
            let r = (i + 1) as f64;
            polar_path(&[(r, (j as f64 - 1.0) * delta), (r, j as f64 * delta)])
        }
        EdgeId::Red { j, i } if i + 1 < m => {
            let a = j as f64 * delta;
            vec![polar((i + 1) as f64, a), polar((i + 2) as f64, a)]
        }
        EdgeId::Red { j, .. } => polar_path(&closing(j)),
    }
}

pub fn delta(n: usize) -> f64 {
    TAU / n as f64
}

/// The standard drawing, built from coordinates.
pub fn canonical_geo(m: usize, n: usize) -> Drawing {
    concentric(m, n, |j| canonical_closing(m, n, j))
}

fn canonical_closing(m: usize, n: usize, j: usize) -> Vec<(f64, f64)> {
    let d = delta(n);
    let a = j as f64 * d;
    let mf = m as f64;
    vec![(mf, a), (mf - 0.5, a + 0.5 * d), (1.5, a + 0.5 * d), (1.0, a)]
}

/// `m = 4`: the closing edge of `R(0)` crosses `r(1,0)`, so `R(0)` is a figure eight.
pub fn figure_eight(n: usize) -> Drawing {
    let d = delta(n);
    concentric(4, n, |j| {
        if j == 0 {
            vec![(4.0, 0.0), (2.5, 0.25 * d), (2.5, -0.25 * d), (1.5, -0.25 * d), (1.0, 0.0)]
        } else {
            canonical_closing(4, n, j)
        }
    })
}

/// `R(0)` is a simple curve enclosing `R(1)` and `R(2)`; the rest lie outside.
pub fn enclosing_loop(m: usize, n: usize) -> Drawing {
    let d = delta(n);
    let mf = m as f64;
    concentric(m, n, |j| {
        if j == 0 {
            vec![(mf, 0.0), (mf + 0.5, 0.0), (mf + 0.5, 2.75 * d), (0.5, 2.75 * d), (0.5, 0.0), (1.0, 0.0)]
        } else {
            canonical_closing(m, n, j)
        }
    })
}

/// `m = 4`: `R(0)` crosses every other red cycle twice.
pub fn crosses_all(n: usize) -> Drawing {
    let d = delta(n);
    let nf = n as f64;
    concentric(4, n, |j| {
        if j == 0 {
            vec![(4.0, 0.0), (2.5, 0.75 * d), (2.5, (nf - 0.25) * d), (1.5, (nf - 0.25) * d), (1.0, nf * d)]
        } else {
            canonical_closing(4, n, j)
        }
    })
}

/// `m = 4`: the closing edge of `R(j)` dips into the sliver of `R(j⊖1)`, so the
/// two cycles cross twice and the drawing stays robust for `n ≥ 7`.
pub fn double_crossing(n: usize, j: usize) -> Drawing {
    let d = delta(n);
    concentric(4, n, |k| {
        if k == j {
            let a = j as f64 * d;
            vec![
                (4.0, a),
                (2.5, a - 0.2 * d),
                (2.5, a - 1.2 * d),
                (0.5, a - 1.2 * d),
                (0.5, a),
                (1.0, a),
            ]
        } else {
            canonical_closing(4, n, k)
        }
    })
}

pub fn v(i: usize, j: usize) -> VertexId {
    VertexId::new(i, j)
}

/// Faces of the curve `R(j)` drawn alone, traced from its own rotation system.
pub fn curve_face_count(d: &Drawing, j: usize) -> usize {
    let g = d.graph();
    let edges = g.red_cycle(j);
    let on_curve = |e: EdgeId| edges.contains(&e);
    // Pieces of the curve between consecutive nodes, in walk order.
    let mut passes: Vec<(Option<(EdgeId, EdgeId)>, Chirality, bool)> = Vec::new();
    for &e in &edges {
        passes.push((None, Chirality::Plus, false));
        for c in d.crossings_of(e) {
            if on_curve(c.other) {
                let key = if e < c.other { (e, c.other) } else { (c.other, e) };
                passes.push((Some(key), c.chirality, e == key.0));
            }
        }
    }
    // Pass `p` sits between piece `p-1` (incoming) and piece `p` (outgoing).
    let len = passes.len();
    let mut rot: Vec<Vec<usize>> = Vec::new();
    let mut slot: std::collections::HashMap<(EdgeId, EdgeId), (usize, [usize; 2], [usize; 2])> =
        std::collections::HashMap::new();
    let mut node_of = vec![0; 2 * len];
    for (p, &(key, chir, is_min)) in passes.iter().enumerate() {
        let out = 2 * p;
        let inb = 2 * ((p + len - 1) % len) + 1;
        match key {
            None => {
                node_of[out] = rot.len();
                node_of[inb] = rot.len();
                rot.push(vec![out, inb]);
            }
            Some(k) => {
                let ent = slot.entry(k).or_insert((usize::MAX, [0; 2], [0; 2]));
                if is_min {
                    ent.1 = [out, inb];
                } else {
                    ent.2 = [out, inb];
                }
                ent.0 = if chir == Chirality::Plus { 0 } else { 1 };
            }
        }
    }
    let mut keys: Vec<_> = slot.keys().copied().collect();
    keys.sort();
    for k in keys {
        let (c, [ef, eb], [ff, fb]) = slot[&k];
        let r = if c == 0 { vec![ef, fb, eb, ff] } else { vec![ef, ff, eb, fb] };
        for &x in &r {
            node_of[x] = rot.len();
        }
        rot.push(r);
    }
    let sigma = |x: usize| {
        let r = &rot[node_of[x]];
        let p = r.iter().position(|&y| y == x).unwrap();
        r[(p + 1) % r.len()]
    };
    let mut seen = vec![false; 2 * len];
    let mut faces = 0;
    for s in 0..2 * len {
        if seen[s] {
            continue;
        }
        faces += 1;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = sigma(x ^ 1);
        }
    }
    faces
}
