//! Linear-time metric algorithms for C4-free Helly graphs.

mod all_ecc;
mod center;
mod certify;
mod diameter;
mod sweep;

pub use all_ecc::{c4h_all_eccentricities, c4h_center};
pub use center::{c4h_central_vertex, centers_in_clique};
pub use certify::{chordal_diameter_certify, ChordalDiameter};
pub use diameter::{c4h_diametral_pair, c4h_diametral_pair_from, c4h_diametral_pair_with, DiamBranch, DiamCertificate};
pub use sweep::multisweep;
