//! Exact toolkit for the cosecure domination problem on simple graphs.
//!
//! A cosecure dominating set is a dominating set `S` in which every member
//! `v` has a neighbor `u` outside `S` such that `(S \ {v}) ∪ {u}` still
//! dominates. The crate provides:
//!
//! - certificate-producing verifiers ([`domsets`]),
//! - brute-force optimal oracles for domination, cosecure domination and set
//!   cover ([`oracle`]),
//! - a polynomial-time solver for chain graphs with an explicit optimal
//!   witness ([`chain`]),
//! - generators for five hardness-reduction gadgets plus an empirical
//!   cross-checker of their cardinality offsets ([`gadgets`]),
//! - structural validators for the gadget witnesses ([`classcheck`]),
//! - deterministic instance generators ([`gen`]).
//!
//! # Example
//!
//! ```
//! use cosecure::gen;
//! use cosecure::chain::csdn_chain;
//! use cosecure::oracle::min_cosecure;
//!
//! let g = gen::path(4);
//! assert_eq!(csdn_chain(&g).unwrap(), 2);
//! assert_eq!(min_cosecure(&g).unwrap().value, 2);
//! ```

#![forbid(unsafe_code)]
// dense 0..n vertex loops index parallel arrays throughout
#![allow(clippy::needless_range_loop)]

pub mod chain;
pub mod classcheck;
pub mod domsets;
pub mod gadgets;
pub mod gen;
pub mod graph;
pub mod oracle;

pub use chain::{csdn_chain, csdn_complete_bipartite, ChainError, ChainReport};
pub use domsets::{certify_cosecure, is_dominating, CosecureCertificate, CosecureFailure};
pub use gadgets::{ReductionArtifact, ReductionKind};
pub use graph::{Bipartition, Graph, GraphError, ParseError, Side, VertexSet};
pub use oracle::{min_cosecure, min_dominating, min_set_cover, OracleOptions, OracleResult};
