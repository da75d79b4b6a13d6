//! Analysis of drawings of the torus-grid graphs `C_m × C_n`: robustness,
//! complementary regions of red cycles, associated crossing sets, and
//! certificates for the lower bound `cr(C_m × C_n) ≥ (m-2)n`.

pub mod association;
pub mod drawing;
pub mod error;
pub mod product_graph;
pub mod regions;
pub mod robustness;
pub mod solver;
mod union_find;
pub mod verifier;
pub mod zring;

pub use drawing::{canonical, validate, Chirality, CrossingId, CrossingRef, Drawing};
pub use error::Error;
pub use product_graph::{EdgeId, ProductGraph, VertexId};
pub use zring::CycIndex;
pub use verifier::{certify, Certificate};
