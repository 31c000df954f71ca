//! Multigraded Betti numbers of graph edge ideals, and subgraph detection
//! read off from them.
//!
//! The edge ideal of a simple graph `G` on `x_1, …, x_n` is generated by the
//! products `x_i x_j` over its edges. Its multigraded Betti numbers are
//! computed exactly through Hochster's formula, as reduced homology of
//! restrictions of the independence complex of `G`. On top of that sit
//! detectors that decide from Betti numbers alone whether `G` contains a
//! complete or complete bipartite graph at given vertices, each checked
//! against a brute-force combinatorial oracle.
//!
//! ```
//! use edge_betti::{betti_table, FieldSpec, Graph};
//!
//! let path = Graph::new(6, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 6)])?;
//! let graded = betti_table(&path, FieldSpec::GF2)?.graded();
//! assert_eq!(graded.get(1, 3), 4);
//! assert_eq!(graded.get(1, 4), 3);
//! # Ok::<(), edge_betti::Error>(())
//! ```
//!
//! The guide in `book/` walks through the same material with runnable
//! examples; its chapters are compiled as doctests below.

pub mod cli;
pub mod detect;
mod error;
pub mod graph;
pub mod hochster;
pub mod homology;

pub use detect::{
    check_full_betti_dominance, check_km_equality, detect_km_syzygy, detect_krs_syzygy,
    k33_k222_scan, kuratowski_desk_scan, oracle_contains_km_at, oracle_contains_multipartite_at,
    Certificate, DetectionResult, Pattern, WitnessKind,
};
pub use error::{Error, Result};
pub use graph::{Graph, MultiDegree, PartitionSpec, Relabeled, VertexSet};
pub use hochster::{
    betti_table, betti_table_capped, closed_form_complete, closed_form_multipartite,
    first_syzygy_triple, graded_from_multigraded, multigraded_betti_at, BettiTable, GradedRow,
};
pub use homology::{
    matrix_rank, reduced_homology_dims, restricted_independence_complex, FieldMatrix, FieldSpec,
    RestrictedComplex,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    mod complexes {}
    #[doc = include_str!("../../../book/src/betti.md")]
    mod betti {}
    #[doc = include_str!("../../../book/src/closed-forms.md")]
    mod closed_forms {}
    #[doc = include_str!("../../../book/src/detection.md")]
    mod detection {}
    #[doc = include_str!("../../../book/src/kuratowski.md")]
    mod kuratowski {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
