//! SD-KE decomposition of matchable graphs.
//!
//! A graph with a perfect matching `M` splits into the vertices that lie on
//! an mm-alternating closed walk (the SD part) and the rest (the KE part).
//! The determinant and permanent of the adjacency matrix factor across the
//! split; this crate computes the split, both sides of those identities, and
//! brute-force oracles to check them.
//!
//! ```
//! use sdke::{fixtures, partition, factorization_report, FactorOptions};
//!
//! let g = fixtures::jposy12();
//! let p = partition(&g).unwrap();
//! assert_eq!(p.ke_labels(&g), vec![10, 11]);
//! let r = factorization_report(&g, &FactorOptions::default()).unwrap();
//! assert!(r.ok());
//! ```

pub mod alternating;
pub mod cli;
pub mod decomposition;
pub mod determinantal;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod matching;
pub mod verification;

pub use alternating::{
    has_mm_closed_walk, reachable_set, semi_jposy_witness, verify_walk, AlternatingWalk,
    ReachSet, WalkDefect, WalkKind,
};
pub use decomposition::{
    check_stability_under_deletion, ke_part, ke_vertices_general, partition, sd_ke_cut,
    sd_ke_partition, sd_ke_partition_in_order, sd_part, sd_vertices_general, Certificate,
    SdKePartition, StabilityReport,
};
pub use determinantal::{
    det_adjacency, det_via_sachs, enumerate_sachs, factorization_report, perm_adjacency,
    perm_via_sachs, sachs_cut_disjointness, DetMethod, FactorOptions, FactorizationReport,
    PermMethod, SachsComponent, SachsSubgraph,
};
pub use error::{Error, Result};
pub use graph::{export_dot, parse_edge_list, serialize_edge_list, EdgeRef, Graph};
pub use matching::{
    enumerate_maximum_matchings, enumerate_perfect_matchings, is_matchable, matching_number,
    maximum_matching, perfect_matching, Matching,
};
pub use verification::{
    independence_number, is_koenig_egervary, random_matchable_graph, run_theorem_suite,
    SuiteConfig, TheoremReport,
};
