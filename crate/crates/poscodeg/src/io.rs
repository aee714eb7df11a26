//! The `HG v1` text format and its JSON mirror.
//!
//! Text: a header line `n m r`, then `m` lines of `r` space-separated
//! 0-based vertices. JSON: `{"n":…,"r":…,"edges":[[…],…]}`. Writers emit
//! edges sorted lexicographically with sorted vertices, so a graph read
//! and written again comes back byte for byte when its input was already
//! in that order.

use std::fs;
use std::path::Path;

use poscodeg_core::{Error as GraphError, Hypergraph, Vertex};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid JSON graph: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>, FormatError> {
    text.split_whitespace()
        .map(|tok| tok.parse().map_err(|_| syntax(line, format!("expected a non-negative integer, got `{tok}`"))))
        .collect()
}

pub fn parse_hg(text: &str) -> Result<Hypergraph, FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| syntax(1, "missing header `n m r`"))?;
    let head = numbers(1, header)?;
    let [n, m, r] = head[..] else {
        return Err(syntax(1, "header must be `n m r`"));
    };
    let mut edges = Vec::with_capacity(m);
    for (line, content) in lines.by_ref() {
        if edges.len() == m {
            if content.trim().is_empty() {
                continue;
            }
            return Err(syntax(line, format!("more than {m} edge lines")));
        }
        let edge = numbers(line, content)?;
        if edge.len() != r {
            return Err(syntax(line, format!("expected {r} vertices, got {}", edge.len())));
        }
        let edge: Vec<Vertex> = edge
            .into_iter()
            .map(|v| Vertex::try_from(v).map_err(|_| syntax(line, "vertex index too large")))
            .collect::<Result<_, _>>()?;
        edges.push(edge);
    }
    if edges.len() != m {
        return Err(syntax(text.lines().count().max(1), format!("expected {m} edges, found {}", edges.len())));
    }
    Ok(Hypergraph::new(n, r, edges)?)
}

pub fn write_hg(h: &Hypergraph) -> String {
    let mut out = format!("{} {} {}\n", h.n(), h.edge_count(), h.r());
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub r: usize,
    pub edges: Vec<Vec<Vertex>>,
}

impl From<&Hypergraph> for GraphJson {
    fn from(h: &Hypergraph) -> Self {
        GraphJson {
            n: h.n(),
            r: h.r(),
            edges: h.edges().iter().map(|e| e.to_vec()).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Hypergraph {
    type Error = GraphError;

    fn try_from(g: GraphJson) -> Result<Self, GraphError> {
        Hypergraph::new(g.n, g.r, g.edges)
    }
}

pub fn parse_json(text: &str) -> Result<Hypergraph, FormatError> {
    let g: GraphJson = serde_json::from_str(text)?;
    Ok(Hypergraph::try_from(g)?)
}

pub fn write_json(h: &Hypergraph) -> String {
    serde_json::to_string(&GraphJson::from(h)).expect("graph serialises")
}

/// Reads either format; JSON is recognised by a leading `{`.
pub fn parse_graph(text: &str) -> Result<Hypergraph, FormatError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_hg(text)
    }
}

pub fn read_graph(path: &Path) -> Result<Hypergraph, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_text() {
        let text = "4 3 3\n0 1 2\n0 1 3\n0 2 3\n";
        let h = parse_hg(text).unwrap();
        assert_eq!(write_hg(&h), text);
        assert_eq!(parse_json(&write_json(&h)).unwrap(), h);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_hg(""), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse_hg("3 1 3\n0 1\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse_hg("3 2 3\n0 1 2\n"), Err(FormatError::Syntax { .. })));
        assert!(matches!(parse_hg("3 1 3\n0 1 5\n"), Err(FormatError::Graph(_))));
        assert!(matches!(parse_hg("3 1 3\n0 x 2\n"), Err(FormatError::Syntax { line: 2, .. })));
    }
}
