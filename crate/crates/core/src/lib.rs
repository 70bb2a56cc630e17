//! Distance graphs with large girth and exponentially large chromatic number.
//!
//! The crate builds the base graphs `G_{4n}` (balanced 0/1 vectors of length
//! `4n`, adjacent when their scalar product is `n`), samples random edge
//! subsets of them, and searches for subgraphs that avoid every cycle of
//! length at most `k` while keeping the independence number small. Exact
//! solvers certify the results, and the [`lll`] module evaluates the Local
//! Lemma inequalities behind the construction at finite `n`.
//!
//! The crate is `no_std` (it needs `alloc`). Enabling the `std` feature adds
//! wall-clock time limits to [`solvers::SolveBudget`]; the `serde` feature
//! derives serialization for the report types.

#![cfg_attr(not(any(feature = "std", test)), no_std)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod base;
pub mod bitset;
mod error;
pub mod graph;
pub mod lll;
pub mod model;
pub mod search;
pub mod solvers;

pub use base::{build_base_graph, BaseGraph, BitVertex, EdgeSubset};
pub use error::{Error, Result};
pub use graph::Graph;

/// Version string recorded in certificates.
pub const SOLVER_VERSION: &str = concat!("distgirth-core/", env!("CARGO_PKG_VERSION"));
