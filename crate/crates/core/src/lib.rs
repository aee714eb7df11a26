//! Minimum positive co-degree machinery for uniform hypergraphs.
//!
//! The crate is `no_std` (it needs `alloc`) and contains every algorithm:
//! the hypergraph representation with co-degree queries, a catalog of named
//! 3-graphs, lower-bound constructions, subgraph containment and copy
//! counting, canonical forms, the exhaustive `co⁺ex(n, F)` search and the
//! inequality checkers. File formats, the CLI and thread pools live in the
//! `poscodeg` crate.
//!
//! ```
//! use poscodeg_core::{catalog, embed};
//!
//! let k4_minus = catalog::get("K4-").unwrap().graph;
//! let k222 = catalog::complete_multipartite(&[2, 2, 2]).unwrap();
//! assert_eq!(k222.min_positive_codegree().unwrap(), 2);
//! assert!(embed::contains_copy(&k4_minus, &k222).unwrap().is_none());
//! ```
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bitset;
pub mod canon;
pub mod catalog;
pub mod constructions;
pub mod embed;
mod error;
pub mod exec;
pub mod hypergraph;
pub mod partition;
pub mod search;
pub mod verify;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, PairSet, Vertex, MAX_VERTICES};
pub use partition::{Partition, PartitionMode};

/// Exact rational used by every reported ratio.
pub type Ratio = num_rational::Ratio<i64>;
