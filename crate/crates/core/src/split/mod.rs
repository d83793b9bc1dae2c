//! Split graphs in sparse form: diametral pairs of split Helly graphs,
//! general split diameter, and the Disjoint Set kernels behind it.

mod disjoint;
mod helly_pair;
mod sparse;

pub use disjoint::{disjoint_set, disjoint_set_bitpacked, disjoint_set_naive, Kernel, SetFamily};
pub use helly_pair::{split_helly_diametral_pair, split_helly_diametral_pair_traced, SplitPair};
pub use sparse::{split_diameter, split_diameter_pair, SparseSplit};
