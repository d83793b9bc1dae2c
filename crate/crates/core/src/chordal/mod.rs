//! Clique trees of chordal graphs, the reduction from chordal diameter to
//! split diameter, and a +1 approximation of all eccentricities.

mod clique_tree;
mod ecc;
mod incidence;
mod reduction;

pub use clique_tree::{build_clique_tree, weighted_centroid, CliqueTree};
pub use ecc::{chordal_ecc_plus_one, EccApprox, EccLevel};
pub use incidence::gates_via_incidence;
pub use reduction::{
    chordal_diameter, chordal_diameter_traced, chordal_diameter_with, emit_split_instance, CentroidStep, ChordalDiam,
    SelectedGate, SplitInstance,
};
