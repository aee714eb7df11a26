//! Vertex partitions, partiteness checks and small-graph k-colouring search.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Hypergraph, Result, Vertex, VertexSet};

/// Largest graph [`find_k_partition`] will search exhaustively.
pub const FIND_PARTITION_CAP: usize = 12;

/// Disjoint vertex classes covering `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    classes: Vec<Vec<Vertex>>,
}

impl Partition {
    /// Validates disjointness and cover. Empty classes are rejected unless
    /// `allow_empty` is set.
    pub fn new(n: usize, classes: Vec<Vec<Vertex>>, allow_empty: bool) -> Result<Self> {
        let mut seen = VertexSet::empty(n);
        let mut classes = classes;
        for class in &mut classes {
            if class.is_empty() && !allow_empty {
                return Err(Error::InvalidPartition("empty class"));
            }
            class.sort_unstable();
            for &v in class.iter() {
                if v as usize >= n {
                    return Err(Error::InvalidPartition("vertex out of range"));
                }
                if seen.contains(v) {
                    return Err(Error::InvalidPartition("classes overlap"));
                }
                seen.insert(v);
            }
        }
        if seen.len() != n {
            return Err(Error::InvalidPartition("classes do not cover every vertex"));
        }
        Ok(Partition { n, classes })
    }

    /// Consecutive classes `0..sizes[0]`, `sizes[0]..sizes[0]+sizes[1]`, ...
    pub fn consecutive(sizes: &[usize]) -> Self {
        let mut next = 0 as Vertex;
        let classes = sizes
            .iter()
            .map(|&s| {
                let class: Vec<Vertex> = (next..next + s as Vertex).collect();
                next += s as Vertex;
                class
            })
            .collect();
        Partition {
            n: next as usize,
            classes,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[Vec<Vertex>] {
        &self.classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Class index of every vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                labels[v as usize] = i;
            }
        }
        labels
    }

    pub fn class_set(&self, index: usize) -> VertexSet {
        VertexSet::from_vertices(self.n, self.classes[index].iter().copied())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionMode {
    /// Every edge meets every class at most once.
    KPartite,
    /// Exactly two classes `(X, Y)`; every edge has two vertices in `X` and one in `Y`.
    OneWayBipartite,
}

pub fn check_partition(h: &Hypergraph, p: &Partition, mode: PartitionMode) -> Result<bool> {
    if p.n() != h.n() {
        return Err(Error::InvalidPartition("partition has the wrong vertex count"));
    }
    let labels = p.labels();
    match mode {
        PartitionMode::KPartite => Ok(h.edges().iter().all(|e| {
            let mut seen: Vec<usize> = e.iter().map(|&v| labels[v as usize]).collect();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        })),
        PartitionMode::OneWayBipartite => {
            if p.classes().len() != 2 {
                return Err(Error::InvalidPartition("one-way mode needs exactly two classes"));
            }
            h.require_triples()?;
            Ok(h.edges().iter().all(|e| {
                e.iter().filter(|&&v| labels[v as usize] == 0).count() == 2
            }))
        }
    }
}

/// Finds a partition into `k` classes meeting every edge at most once, if one
/// exists. Exhaustive over colourings, with the usual symmetry restriction
/// that a vertex may open at most one new class.
///
/// Classes are non-empty whenever `n >= k`.
pub fn find_k_partition(h: &Hypergraph, k: usize) -> Result<Option<Partition>> {
    if h.n() > FIND_PARTITION_CAP {
        return Err(Error::Infeasible {
            what: "k-partition search",
            size: h.n(),
            cap: FIND_PARTITION_CAP,
        });
    }
    if k == 0 {
        return Ok(if h.n() == 0 {
            Some(Partition::new(0, Vec::new(), true)?)
        } else {
            None
        });
    }
    let n = h.n();
    // edges indexed by their largest vertex, so each is checked once it is fully coloured
    let mut closing: Vec<Vec<&[Vertex]>> = vec![Vec::new(); n];
    for e in h.edges() {
        closing[*e.last().unwrap() as usize].push(e);
    }
    let mut colour = vec![usize::MAX; n];
    if !colour_from(0, 0, k, &closing, &mut colour) {
        return Ok(None);
    }
    let mut classes = vec![Vec::new(); k];
    for (v, &c) in colour.iter().enumerate() {
        classes[c].push(v as Vertex);
    }
    // fill empty classes from classes with spare vertices; splitting a class keeps edges transversal
    while let Some(empty) = classes.iter().position(Vec::is_empty) {
        let Some(donor) = classes.iter().position(|c| c.len() >= 2) else {
            break;
        };
        let v = classes[donor].pop().unwrap();
        classes[empty].push(v);
    }
    Partition::new(n, classes, true).map(Some)
}

fn colour_from(
    v: usize,
    used: usize,
    k: usize,
    closing: &[Vec<&[Vertex]>],
    colour: &mut [usize],
) -> bool {
    if v == colour.len() {
        return true;
    }
    for c in 0..k.min(used + 1) {
        colour[v] = c;
        let ok = closing[v].iter().all(|e| {
            let mut cs: Vec<usize> = e.iter().map(|&w| colour[w as usize]).collect();
            cs.sort_unstable();
            cs.windows(2).all(|w| w[0] != w[1])
        });
        if ok && colour_from(v + 1, used.max(c + 1), k, closing, colour) {
            return true;
        }
    }
    colour[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_minus() -> Hypergraph {
        Hypergraph::from_triples(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3]]).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![vec![0, 1], vec![2]], false).is_ok());
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]], false).is_err());
        assert!(Partition::new(3, vec![vec![0, 1]], false).is_err());
        assert!(Partition::new(3, vec![vec![0, 1, 2], vec![]], false).is_err());
        assert!(Partition::new(3, vec![vec![0, 1, 2], vec![]], true).is_ok());
        assert_eq!(Partition::consecutive(&[2, 0, 1]).classes()[2], vec![2]);
    }

    #[test]
    fn singleton_classes_are_always_partite() {
        let k4 = Hypergraph::from_triples(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
        let p = Partition::new(4, vec![vec![0], vec![1], vec![2], vec![3]], false).unwrap();
        assert!(check_partition(&k4, &p, PartitionMode::KPartite).unwrap());
    }

    #[test]
    fn one_way_orientation_matters() {
        // X = {0,1,2}, Y = {3,4}
        let mut edges = Vec::new();
        for a in 0..3 {
            for b in a + 1..3 {
                for y in 3..5 {
                    edges.push([a, b, y]);
                }
            }
        }
        let h = Hypergraph::from_triples(5, &edges).unwrap();
        let xy = Partition::new(5, vec![vec![0, 1, 2], vec![3, 4]], false).unwrap();
        let yx = Partition::new(5, vec![vec![3, 4], vec![0, 1, 2]], false).unwrap();
        assert!(check_partition(&h, &xy, PartitionMode::OneWayBipartite).unwrap());
        assert!(!check_partition(&h, &yx, PartitionMode::OneWayBipartite).unwrap());
        let three = Partition::new(5, vec![vec![0, 1], vec![2], vec![3, 4]], false).unwrap();
        assert!(check_partition(&h, &three, PartitionMode::OneWayBipartite).is_err());
    }

    #[test]
    fn k4_minus_is_not_tripartite() {
        assert_eq!(find_k_partition(&k4_minus(), 3).unwrap(), None);
        assert!(find_k_partition(&k4_minus(), 4).unwrap().is_some());
    }

    #[test]
    fn found_partition_is_valid_and_full() {
        let edge = Hypergraph::from_triples(5, &[[0, 1, 2]]).unwrap();
        let p = find_k_partition(&edge, 3).unwrap().unwrap();
        assert!(check_partition(&edge, &p, PartitionMode::KPartite).unwrap());
        assert!(p.class_sizes().iter().all(|&s| s > 0));
    }

    #[test]
    fn size_cap() {
        let big = Hypergraph::empty(13).unwrap();
        assert!(find_k_partition(&big, 3).unwrap_err().is_infeasible());
    }
}
