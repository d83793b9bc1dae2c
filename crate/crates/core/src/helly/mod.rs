//! Randomized radius and diameter for Helly graphs.
//!
//! - [`helly_radius`]: binary search over a sampled dominator test,
//!   `Õ(m√n)` time.
//! - [`small_eccentricities`]: all `b` with `A ⊆ N^k[b]` by partition
//!   refinement over `k` levels, `O(km)` on Helly graphs.
//! - [`helly_diametral_pair`]: exact diameter below `6⌈√n⌉` through
//!   [`vertices_ecc_at_most`], landmark sampling above.
//!
//! None of these check that the input is Helly; results on other graphs
//! carry no guarantee beyond the certificates each function documents.

mod diameter;
mod params;
mod radius;
mod small_ecc;

pub use diameter::{giant_diameter_pair, helly_diametral_pair, DiamPair, EstimatedEcc};
pub use params::{default_repeats, SampleParams};
pub use radius::{accept_radius, dominator_candidates, helly_radius, Acceptance, Landmarks, RadiusEstimate};
pub use small_ecc::{
    small_eccentricities, small_eccentricities_trace, vertices_ecc_at_most, PartitionGroup, PartitionState,
};
