//! Named 3-graphs and the parametric families they come from.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::{Error, Hypergraph, Result, Vertex};

#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: &'static str,
    pub graph: Hypergraph,
    pub source: &'static str,
}

struct Entry {
    name: &'static str,
    aliases: &'static [&'static str],
    n: usize,
    /// Edges as printed (1-based).
    edges: &'static [[Vertex; 3]],
    source: &'static str,
}

const ENTRIES: &[Entry] = &[
    Entry {
        name: "K4-",
        aliases: &["K4minus", "K4^-"],
        n: 4,
        // 123, 124, 134
        edges: &[[1, 2, 3], [1, 2, 4], [1, 3, 4]],
        source: "K4- table",
    },
    Entry {
        name: "F5",
        aliases: &[],
        n: 5,
        // 123, 124, 345
        edges: &[[1, 2, 3], [1, 2, 4], [3, 4, 5]],
        source: "F5 table",
    },
    Entry {
        name: "F32",
        aliases: &["F3,2"],
        n: 5,
        // 123, 145, 245, 345
        edges: &[[1, 2, 3], [1, 4, 5], [2, 4, 5], [3, 4, 5]],
        source: "F3,2 table",
    },
    Entry {
        name: "Fano",
        aliases: &["fano", "F"],
        n: 7,
        // 123, 345, 156, 246, 147, 257, 367
        edges: &[
            [1, 2, 3],
            [3, 4, 5],
            [1, 5, 6],
            [2, 4, 6],
            [1, 4, 7],
            [2, 5, 7],
            [3, 6, 7],
        ],
        source: "Fano plane table",
    },
    Entry {
        name: "K4",
        aliases: &[],
        n: 4,
        // 123, 124, 134, 234
        edges: &[[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]],
        source: "K4 table",
    },
    Entry {
        name: "F33",
        aliases: &["F3,3"],
        n: 6,
        // 123, 145, 146, 156, 245, 246, 256, 345, 346, 356
        edges: &[
            [1, 2, 3],
            [1, 4, 5],
            [1, 4, 6],
            [1, 5, 6],
            [2, 4, 5],
            [2, 4, 6],
            [2, 5, 6],
            [3, 4, 5],
            [3, 4, 6],
            [3, 5, 6],
        ],
        source: "F3,3 table",
    },
    Entry {
        name: "C5",
        aliases: &[],
        n: 5,
        // 123, 234, 345, 145, 125
        edges: &[[1, 2, 3], [2, 3, 4], [3, 4, 5], [1, 4, 5], [1, 2, 5]],
        source: "C5 table",
    },
    Entry {
        name: "C5-",
        aliases: &["C5minus", "C5^-"],
        n: 5,
        // 123, 234, 345, 145
        edges: &[[1, 2, 3], [2, 3, 4], [3, 4, 5], [1, 4, 5]],
        source: "C5- table",
    },
    Entry {
        name: "J4",
        aliases: &[],
        n: 5,
        // 123, 124, 125, 134, 135, 145
        edges: &[[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5], [1, 4, 5]],
        source: "J4 table",
    },
    Entry {
        name: "H6",
        aliases: &[],
        n: 6,
        // 123, 124, 345, 346, 561, 562, 135, 146, 236, 245
        edges: &[
            [1, 2, 3],
            [1, 2, 4],
            [3, 4, 5],
            [3, 4, 6],
            [5, 6, 1],
            [5, 6, 2],
            [1, 3, 5],
            [1, 4, 6],
            [2, 3, 6],
            [2, 4, 5],
        ],
        source: "(6,3,2)-design, blow-up construction",
    },
];

/// Every catalog name, in table order, followed by `K222`.
pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).chain(["K222"]).collect()
}

pub fn get(name: &str) -> Result<NamedGraph> {
    if matches!(name, "K222" | "K2,2,2") {
        return Ok(NamedGraph {
            name: "K222",
            graph: complete_multipartite(&[2, 2, 2])?,
            source: "complete 3-partite K2,2,2",
        });
    }
    let entry = ENTRIES
        .iter()
        .find(|e| e.name == name || e.aliases.contains(&name))
        .ok_or_else(|| Error::UnknownGraph(name.to_string()))?;
    let edges: Vec<[Vertex; 3]> = entry
        .edges
        .iter()
        .map(|e| [e[0] - 1, e[1] - 1, e[2] - 1])
        .collect();
    Ok(NamedGraph {
        name: entry.name,
        graph: Hypergraph::from_triples(entry.n, &edges)?,
        source: entry.source,
    })
}

pub fn all() -> Vec<NamedGraph> {
    names()
        .into_iter()
        .map(|name| get(name).expect("catalog entries are valid"))
        .collect()
}

/// `J_k`: vertex 0 together with every pair of `1..=k`.
pub fn j_k(k: usize) -> Result<Hypergraph> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("J_k needs k >= 2, got {k}")));
    }
    let mut edges = Vec::new();
    for i in 1..=k as Vertex {
        for j in i + 1..=k as Vertex {
            edges.push([0, i, j]);
        }
    }
    Hypergraph::from_triples(k + 1, &edges)
}

/// The complete multipartite 3-graph: classes are consecutive vertex
/// ranges, edges are all triples meeting three distinct classes.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Hypergraph> {
    if sizes.contains(&0) {
        return Err(Error::InvalidParameter("classes must be non-empty".to_string()));
    }
    if sizes.len() < 3 {
        return Err(Error::InvalidParameter(format!(
            "need at least 3 classes, got {}",
            sizes.len()
        )));
    }
    let n: usize = sizes.iter().sum();
    if n > crate::MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: crate::MAX_VERTICES,
        });
    }
    let mut class = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        class.extend(core::iter::repeat_n(i, s));
    }
    let mut edges = Vec::new();
    for c in 0..n {
        for b in 0..c {
            if class[b] == class[c] {
                continue;
            }
            for a in 0..b {
                if class[a] != class[b] && class[a] != class[c] {
                    edges.push([a as Vertex, b as Vertex, c as Vertex]);
                }
            }
        }
    }
    Hypergraph::from_triples(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_sizes() {
        let expect = [
            ("K4-", 4, 3),
            ("F5", 5, 3),
            ("F32", 5, 4),
            ("Fano", 7, 7),
            ("K4", 4, 4),
            ("F33", 6, 10),
            ("C5", 5, 5),
            ("C5-", 5, 4),
            ("J4", 5, 6),
            ("H6", 6, 10),
            ("K222", 6, 8),
        ];
        for (name, n, m) in expect {
            let g = get(name).unwrap().graph;
            assert_eq!((g.n(), g.edge_count()), (n, m), "{name}");
        }
        assert_eq!(names().len(), expect.len());
        assert!(get("K5").is_err());
        assert_eq!(get("F3,2").unwrap().name, "F32");
    }

    #[test]
    fn h6_is_a_two_design() {
        let h6 = get("H6").unwrap().graph;
        let pairs = h6.positive_pairs().unwrap();
        assert_eq!(pairs.len(), 15);
        assert!(pairs.iter().all(|(_, d)| d == 2));
    }

    #[test]
    fn fano_pairs_lie_on_one_line() {
        let fano = get("Fano").unwrap().graph;
        for u in 0..7 {
            for v in u + 1..7 {
                assert_eq!(fano.pair_codegree(u, v), 1);
            }
        }
        assert_eq!(fano.min_positive_codegree().unwrap(), 1);
    }

    #[test]
    fn j_k_family() {
        assert_eq!(j_k(2).unwrap().edge_count(), 1);
        assert_eq!(j_k(5).unwrap().edge_count(), 10);
        assert_eq!(j_k(5).unwrap().n(), 6);
        assert!(j_k(1).is_err());
        assert_eq!(j_k(4).unwrap(), get("J4").unwrap().graph);
    }

    #[test]
    fn multipartite() {
        assert_eq!(complete_multipartite(&[2, 2, 2]).unwrap().edge_count(), 8);
        assert_eq!(
            complete_multipartite(&[1, 1, 1, 1]).unwrap(),
            get("K4").unwrap().graph
        );
        assert_eq!(complete_multipartite(&[1, 1, 1]).unwrap().edge_count(), 1);
        assert!(complete_multipartite(&[2, 2]).is_err());
        assert!(complete_multipartite(&[2, 0, 2, 1]).is_err());
    }
}
