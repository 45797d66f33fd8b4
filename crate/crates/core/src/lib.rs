//! Exact computation of odd-sum chromatic numbers.
//!
//! An *odd-sum coloring* of a graph assigns positive integers to vertices so
//! that adjacent vertices receive different values and every closed
//! neighborhood sums to an odd number; the *odd-sum chromatic number* is the
//! least number of distinct values over all such colorings. The crate
//! provides:
//!
//! - [`graph`]: a bitset-adjacency graph type with the structural invariants
//!   the rest of the crate leans on (girth, bipartiteness, biconnectivity,
//!   edge-count planarity bounds, induced subgraphs, catalogs, seeded
//!   random graphs);
//! - [`odd_domination`]: odd-dominating sets as the affine solution space of
//!   `(A + I)x = 1` over GF(2) — bit-packed elimination, counting,
//!   Gray-code enumeration, and a subset brute-force oracle;
//! - [`coloring`]: exact chromatic numbers by saturation-guided
//!   branch-and-bound with an independent brute-force oracle;
//! - [`odd_sum`]: the odd-sum solver that minimizes over parity partitions,
//!   certificates with validating round trips, and a definition-level
//!   oracle;
//! - [`families`]: deterministic labeled constructions realizing extreme
//!   combinations of maximum degree, girth, bipartiteness, and solution
//!   counts;
//! - [`surfaces`]: closed-form surface invariants and the divergence of the
//!   odd-sum bound from the Heawood number;
//! - [`codec`]: graph6, JSON, and DOT serialization.

pub mod codec;
pub mod coloring;
pub mod families;
pub mod graph;
pub mod odd_domination;
pub mod odd_sum;
pub mod set;
pub mod surfaces;

pub use coloring::{chromatic_number, ColoringError, ProperColoring};
pub use num_bigint::BigUint;
pub use rand;
pub use graph::{Girth, Graph, GraphError, DEFAULT_SEED};
pub use odd_domination::{
    count_odd_dominating_sets, enumerate_odd_dominating_sets, solve_odd_domination, OdsError,
};
pub use odd_sum::{odd_sum_chromatic, OddSumCertificate, OddSumError};
pub use set::VertexSet;
