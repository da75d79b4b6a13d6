//! The standard drawing with `(m-2)n` crossings.
//!
//! Blue cycles are concentric, `B(0)` innermost. `R(j)` runs radially outward
//! from `v(0,j)` to `v(m-1,j)`; its closing edge `r(m-1,j)` returns inward
//! through the sector between `R(j)` and `R(j⊕1)`, crossing `bl(i,j⊕1)` for
//! `i = m-2, .., 1`.

use super::{Chirality, CrossingRef, Drawing};
use crate::error::Error;
use crate::product_graph::{EdgeId, ProductGraph};

pub fn canonical(m: usize, n: usize) -> Result<Drawing, Error> {
    let g = ProductGraph::new(m, n)?;
    let mut rotations = Vec::with_capacity(g.vertex_count());
    for v in g.vertices() {
        let (i, j) = (v.i, v.j);
        let red_in = EdgeId::red((i + m - 1) % m, j);
        let red_out = EdgeId::red(i, j);
        let blue_back = EdgeId::blue(i, j);
        let blue_fwd = EdgeId::blue(i, (j + 1) % n);
        let rot = if i == 0 {
            [red_in, blue_fwd, blue_back, red_out]
        } else if i == m - 1 {
            [red_in, blue_back, blue_fwd, red_out]
        } else {
            [red_in, blue_back, red_out, blue_fwd]
        };
        rotations.push(rot);
    }

    let mut crossings = vec![Vec::new(); g.edge_count()];
    for j in 0..n {
        let closing = EdgeId::red(m - 1, j);
        for i in (1..m - 1).rev() {
            let b = EdgeId::blue(i, (j + 1) % n);
            crossings[g.edge_index(closing)]
                .push(CrossingRef { other: b, chirality: Chirality::Minus });
            crossings[g.edge_index(b)]
                .push(CrossingRef { other: closing, chirality: Chirality::Minus });
        }
    }
    Drawing::from_parts(g, rotations, crossings)
}
