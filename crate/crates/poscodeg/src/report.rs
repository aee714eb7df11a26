//! JSON shapes and text renderings of search results.

use std::fmt::Write;

use poscodeg_core::search::{ExistsReport, Existence, SearchReport, Witness};
use poscodeg_core::{Ratio, Vertex};
use serde::Serialize;

use crate::io::GraphJson;

pub fn ratio_string(r: Ratio) -> String {
    r.to_string()
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessJson {
    pub edges: Vec<[Vertex; 3]>,
    pub hash: String,
    pub isolated_vertices: usize,
    pub known_as: Vec<String>,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        WitnessJson {
            edges: w.form.edges(),
            hash: format!("{:016x}", w.form.hash()),
            isolated_vertices: w.isolated_vertices,
            known_as: w.known_as.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchJson {
    pub n: usize,
    pub forbidden: String,
    pub exact_value: usize,
    pub exhaustive: bool,
    pub nodes_explored: u64,
    pub witness_count: usize,
    pub omitted_witnesses: usize,
    pub witnesses: Vec<WitnessJson>,
}

impl From<&SearchReport> for SearchJson {
    fn from(r: &SearchReport) -> Self {
        SearchJson {
            n: r.n,
            forbidden: r.forbidden.clone(),
            exact_value: r.exact_value,
            exhaustive: r.exhaustive,
            nodes_explored: r.nodes_explored,
            witness_count: r.witnesses.len() + r.omitted_witnesses,
            omitted_witnesses: r.omitted_witnesses,
            witnesses: r.witnesses.iter().map(WitnessJson::from).collect(),
        }
    }
}

fn edge_list(edges: &[[Vertex; 3]]) -> String {
    let sep = if edges.iter().flatten().any(|&v| v > 9) { "-" } else { "" };
    let parts: Vec<String> = edges.iter().map(|e| format!("{}{sep}{}{sep}{}", e[0], e[1], e[2])).collect();
    parts.join(" ")
}

pub fn search_text(r: &SearchReport) -> String {
    let mut out = String::new();
    writeln!(out, "forbidden {}", r.forbidden).unwrap();
    writeln!(out, "n {}", r.n).unwrap();
    if r.exhaustive {
        writeln!(out, "value {}", r.exact_value).unwrap();
    } else {
        writeln!(out, "value >= {}", r.exact_value).unwrap();
    }
    writeln!(out, "exhaustive {}", r.exhaustive).unwrap();
    writeln!(out, "nodes {}", r.nodes_explored).unwrap();
    writeln!(out, "witnesses {}", r.witnesses.len() + r.omitted_witnesses).unwrap();
    for (i, w) in r.witnesses.iter().enumerate() {
        let edges = w.form.edges();
        let names = if w.known_as.is_empty() {
            String::new()
        } else {
            format!(" = {}", w.known_as.join(" = "))
        };
        writeln!(
            out,
            "  #{} {} edges, {} isolated{}",
            i + 1,
            edges.len(),
            w.isolated_vertices,
            names
        )
        .unwrap();
        writeln!(out, "     {}", edge_list(&edges)).unwrap();
    }
    if r.omitted_witnesses > 0 {
        writeln!(out, "  ... {} more", r.omitted_witnesses).unwrap();
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct DecisionJson {
    pub n: usize,
    pub forbidden: String,
    pub k: usize,
    pub outcome: &'static str,
    pub witness: Option<GraphJson>,
    pub nodes_explored: u64,
}

impl DecisionJson {
    pub fn new(n: usize, forbidden: &str, k: usize, r: &ExistsReport) -> Self {
        let (outcome, witness) = match &r.outcome {
            Existence::Witness(h) => ("witness", Some(GraphJson::from(h))),
            Existence::Refuted => ("refuted", None),
            Existence::Unknown => ("unknown", None),
        };
        DecisionJson {
            n,
            forbidden: forbidden.to_string(),
            k,
            outcome,
            witness,
            nodes_explored: r.nodes_explored,
        }
    }
}
