//! Ground-truth tooling: LexBFS, class recognizers, the desk-scale Helly
//! oracle, exhaustive axiom checks and certified instance generators.

pub mod axioms;
pub mod generate;
pub mod helly;
pub mod lexbfs;
pub mod recognize;

pub use axioms::{verify_class_axioms, AxiomClass, AxiomReport};
pub use generate::{generate, GraphKind};
pub use helly::{desk_bound, exhaustive_violation, is_helly, is_helly_ballfamily, BallFamily};
pub use lexbfs::{is_lexbfs_order, lexbfs, LexBfsOrder};
pub use recognize::{is_c4_free, is_chordal, is_peo, is_split, ClassCertificate, ClassLabel, Witness};
