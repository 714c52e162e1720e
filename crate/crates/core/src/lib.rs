//! Neighborhood-prime labelings: a bijection `f: V -> {1..n}` such that every
//! vertex of degree at least 2 sees neighbor labels with gcd 1.
//!
//! - [`graph`]: graphs, labelings, and the verifier.
//! - [`families`]: generators with fixed vertex numberings.
//! - [`labelers`]: constructive labelings per family, plus the contraction
//!   and pendant transformations.
//! - [`search`]: exact backtracking search, a brute-force oracle, and the
//!   number theory the firecracker labeling needs.
//! - [`trees_enum`]: free tree enumeration and the all-trees scan.
//! - [`io`] and [`cli`]: file formats and the `nprime` binary.

pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod labelers;
pub mod search;
pub mod trees_enum;

pub use error::{Error, Result};
pub use families::{generate, FamilySpec};
pub use graph::{
    gcd, gcd_of, is_neighborhood_prime, is_tree, neighborhood, verify, Graph, Labeling,
    VerificationReport, Vertex, Violation,
};
pub use labelers::{contract_one_max, extend_pendant, label_family, label_path};
pub use search::{
    brute_force_oracle, find_labeling, SearchConfig, SearchOutcome, Status, StatusKind,
};
