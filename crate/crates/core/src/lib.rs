//! Three-dimensional stable matching with cyclic incomplete preferences.
//!
//! Men rank women, women rank dogs and dogs rank men; lists may be incomplete.
//! The crate models an instance as a directed graph on `3n` vertices where the
//! gender of a vertex is its id modulo 3, and provides:
//!
//! * parsing, validation and normalization of instances ([`instance`],
//!   [`parse`], [`normalize`](mod@normalize));
//! * family and matching enumeration, blocking-triple detection and a
//!   stable-matching search, plus an independent brute-force oracle
//!   ([`stability`], [`oracle`]);
//! * rank-1 subgraph classification and an exhaustive parallel scan of all
//!   dimension-3 instances per basic shape ([`basic`], [`search`]);
//! * the k-gender generalization and its subdivision construction ([`kgen`]);
//! * the named instances without stable matchings ([`builtin`]).
//!
//! ```
//! use cycmatch::{builtin, find_stable_matching};
//!
//! let fig2 = builtin::get("fig2").unwrap();
//! assert!(find_stable_matching(&fig2).is_none());
//! ```

pub mod basic;
pub mod builtin;
pub mod cli;
mod engine;
pub mod generate;
pub mod instance;
pub mod kgen;
pub mod normalize;
pub mod oracle;
pub mod parse;
pub mod search;
pub mod stability;

pub use basic::{basic_subgraph, classify_basic_shape, BasicShape, BasicSubgraph, ShapeClass};
pub use instance::{validate, Instance, ValidationReport, VertexId};
pub use kgen::{k_enumerate_families, k_find_stable_matching, subdivide, KFamily, KInstance};
pub use normalize::normalize;
pub use oracle::brute_force_stable_exists;
pub use parse::parse_instance;
pub use search::{
    build_instance, search_counterexamples, verify_small_dimensions, ExtensionChoice,
};
pub use stability::{
    enumerate_families, enumerate_maximal_matchings, find_blocking_triples, find_stable_matching,
    is_stable, rank_in_matching, ExtendedRank, Family, Matching,
};
