//! Exact computation and verification of the regular k-independence number.
//!
//! A set of vertices is *regular* when all of its members share one degree,
//! and *k-independent* when it induces a subgraph of maximum degree at most
//! `k`. `α_{k-reg}(G)` is the largest set that is both.

pub mod bounds;
pub mod closed_forms;
pub mod error;
pub mod families;
pub mod graph;
pub mod solver;
pub mod trees;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, Diameter, Graph, VertexSet};
