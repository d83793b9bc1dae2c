//! Radius, diameter, diametral pairs and eccentricities for Helly graphs
//! and their relatives.
//!
//! - [`helly`]: randomized subquadratic radius and diameter for Helly graphs,
//!   plus the parameterized `Small Eccentricities` partition refinement.
//! - [`c4free`]: linear-time central vertex, diametral pair and all
//!   eccentricities for C4-free Helly graphs.
//! - [`split`]: diametral pairs of split Helly graphs and Disjoint Set kernels.
//! - [`chordal`]: the clique-tree reduction from chordal diameter to split
//!   diameter, and the +1 approximation of all chordal eccentricities.
//! - [`oracles`]: LexBFS, class recognizers, a desk-scale Helly oracle and
//!   certified instance generators.
//!
//! Every algorithm is checked against [`metric::eccentricities_bruteforce`].

pub mod c4free;
pub mod chordal;
pub mod error;
pub mod fixtures;
pub mod gates;
pub mod graph;
pub mod helly;
pub mod metric;
pub mod oracles;
pub mod split;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use metric::{bfs, eccentricities_bruteforce, Distances, EccentricityProfile};
pub use vertex_set::VertexSet;
