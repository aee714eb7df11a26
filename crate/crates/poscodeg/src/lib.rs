//! File formats, a thread-pool executor, the command-line front end and the
//! reproduction suite for `poscodeg-core`.

pub mod cli;
pub mod io;
pub mod parallel;
pub mod report;
pub mod reproduce;

use poscodeg_core::{catalog, Hypergraph, Result};

/// Catalog graphs by name, plus the family `J<k>` for any `k`.
pub fn named_graph(name: &str) -> Result<Hypergraph> {
    match catalog::get(name) {
        Ok(g) => Ok(g.graph),
        Err(e) => match name.strip_prefix('J').and_then(|k| k.parse().ok()) {
            Some(k) => catalog::j_k(k),
            None => Err(e),
        },
    }
}
