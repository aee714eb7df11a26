//! Immutable r-uniform hypergraphs with co-degree queries.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result, VertexSet};

pub type Vertex = u32;

/// Largest vertex count any [`Hypergraph`] may have.
pub const MAX_VERTICES: usize = 1024;

#[inline]
pub(crate) fn pair_index(u: Vertex, v: Vertex) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    b as usize * (b as usize - 1) / 2 + a as usize
}

/// Per-pair common neighbourhoods of a 3-graph, stored only for pairs of
/// positive co-degree.
#[derive(Clone)]
struct PairLinks {
    slot: Vec<u32>,
    pairs: Vec<(Vertex, Vertex)>,
    nbhd: Vec<VertexSet>,
    partners: Vec<VertexSet>,
}

const NO_SLOT: u32 = u32::MAX;

impl PairLinks {
    fn build(n: usize, edges: &[Box<[Vertex]>]) -> Self {
        let mut slot = vec![NO_SLOT; n * n.saturating_sub(1) / 2];
        let mut map: BTreeMap<(Vertex, Vertex), VertexSet> = BTreeMap::new();
        for e in edges {
            let (a, b, c) = (e[0], e[1], e[2]);
            for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
                map.entry((x, y))
                    .or_insert_with(|| VertexSet::empty(n))
                    .insert(z);
            }
        }
        let mut partners = vec![VertexSet::empty(n); n];
        let mut pairs = Vec::with_capacity(map.len());
        let mut nbhd = Vec::with_capacity(map.len());
        for ((x, y), set) in map {
            slot[pair_index(x, y)] = pairs.len() as u32;
            partners[x as usize].insert(y);
            partners[y as usize].insert(x);
            pairs.push((x, y));
            nbhd.push(set);
        }
        PairLinks {
            slot,
            pairs,
            nbhd,
            partners,
        }
    }

    #[inline]
    fn get(&self, u: Vertex, v: Vertex) -> Option<&VertexSet> {
        match self.slot[pair_index(u, v)] {
            NO_SLOT => None,
            s => Some(&self.nbhd[s as usize]),
        }
    }
}

/// An r-uniform hypergraph on vertices `0..n`.
///
/// Edges are stored sorted (each edge ascending, the list lexicographic) and
/// without duplicates. For `r = 3` the common neighbourhood `N(u, v)` of
/// every pair is cached as a bitset.
#[derive(Clone)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Box<[Vertex]>>,
    degrees: Vec<usize>,
    links: Option<PairLinks>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.r == other.r && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph")
            .field("n", &self.n)
            .field("r", &self.r)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Hypergraph {
    /// Builds a hypergraph, sorting and deduplicating the edge list.
    ///
    /// Rejects edges of the wrong size, with a repeated vertex, or with a
    /// vertex `>= n`, reporting the offending edge index.
    pub fn new<E, I>(n: usize, r: usize, edges: I) -> Result<Self>
    where
        E: AsRef<[Vertex]>,
        I: IntoIterator<Item = E>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        if r < 2 {
            return Err(Error::UnsupportedUniformity(r));
        }
        let mut list: Vec<Box<[Vertex]>> = Vec::new();
        for (index, edge) in edges.into_iter().enumerate() {
            let edge = edge.as_ref();
            if edge.len() != r {
                return Err(Error::WrongArity {
                    edge: index,
                    expected: r,
                    found: edge.len(),
                });
            }
            let mut sorted: Box<[Vertex]> = edge.into();
            sorted.sort_unstable();
            if let Some(&v) = sorted.iter().find(|&&v| v as usize >= n) {
                return Err(Error::VertexOutOfRange {
                    edge: index,
                    vertex: v,
                    n,
                });
            }
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertex {
                    edge: index,
                    vertex: w[0],
                });
            }
            list.push(sorted);
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(n, r, list))
    }

    /// Convenience constructor for 3-graphs.
    pub fn from_triples(n: usize, triples: &[[Vertex; 3]]) -> Result<Self> {
        Self::new(n, 3, triples)
    }

    /// The edgeless 3-graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new::<[Vertex; 3], _>(n, 3, [])
    }

    fn from_sorted(n: usize, r: usize, edges: Vec<Box<[Vertex]>>) -> Self {
        let mut degrees = vec![0; n];
        for e in &edges {
            for &v in e.iter() {
                degrees[v as usize] += 1;
            }
        }
        let links = (r == 3).then(|| PairLinks::build(n, &edges));
        Hypergraph {
            n,
            r,
            edges,
            degrees,
            links,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Box<[Vertex]>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edges(&self) -> bool {
        !self.edges.is_empty()
    }

    /// Membership test; `edge` may be given in any order.
    pub fn has_edge(&self, edge: &[Vertex]) -> bool {
        if edge.len() != self.r {
            return false;
        }
        let mut key: Vec<Vertex> = edge.to_vec();
        key.sort_unstable();
        self.edges
            .binary_search_by(|e| e.as_ref().cmp(key.as_slice()))
            .is_ok()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.degrees[v as usize]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        (0..self.n as Vertex)
            .filter(|&v| self.degrees[v as usize] == 0)
            .collect()
    }

    pub(crate) fn require_triples(&self) -> Result<()> {
        if self.r == 3 {
            Ok(())
        } else {
            Err(Error::UnsupportedUniformity(self.r))
        }
    }

    fn links(&self) -> Result<&PairLinks> {
        self.links
            .as_ref()
            .ok_or(Error::UnsupportedUniformity(self.r))
    }

    fn validate_set(&self, set: &[Vertex], size: usize) -> Result<Vec<Vertex>> {
        if set.len() != size {
            return Err(Error::MalformedSet("wrong number of vertices"));
        }
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        if sorted.iter().any(|&v| v as usize >= self.n) {
            return Err(Error::MalformedSet("vertex out of range"));
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedSet("repeated vertex"));
        }
        Ok(sorted)
    }

    /// Number of edges containing the `(r-1)`-set `set`.
    pub fn codegree(&self, set: &[Vertex]) -> Result<usize> {
        let set = self.validate_set(set, self.r - 1)?;
        if let Some(links) = &self.links {
            return Ok(links.get(set[0], set[1]).map_or(0, VertexSet::len));
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| set.iter().all(|v| e.binary_search(v).is_ok()))
            .count())
    }

    /// Co-degree of the pair `{u, v}` in a 3-graph. Panics if `r != 3`.
    #[inline]
    pub fn pair_codegree(&self, u: Vertex, v: Vertex) -> usize {
        self.pair_link(u, v).map_or(0, VertexSet::len)
    }

    /// `N(u, v)` when it is non-empty. Panics if `r != 3`.
    #[inline]
    pub fn pair_link(&self, u: Vertex, v: Vertex) -> Option<&VertexSet> {
        if u == v {
            return None;
        }
        self.links
            .as_ref()
            .expect("pair queries need a 3-graph")
            .get(u, v)
    }

    /// Vertices sharing at least one edge with `v`. Panics if `r != 3`.
    pub fn positive_partners(&self, v: Vertex) -> &VertexSet {
        &self
            .links
            .as_ref()
            .expect("pair queries need a 3-graph")
            .partners[v as usize]
    }

    /// Co-degrees of every `(r-1)`-set lying in some edge.
    fn shadow_codegrees(&self) -> BTreeMap<Vec<Vertex>, usize> {
        let mut map = BTreeMap::new();
        for e in &self.edges {
            for skip in 0..self.r {
                let key: Vec<Vertex> = e
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                *map.entry(key).or_insert(0) += 1;
            }
        }
        map
    }

    /// `δ⁺_{r-1}(H)`: the least co-degree among `(r-1)`-sets of positive
    /// co-degree. Undefined (an error) for a graph without edges.
    pub fn min_positive_codegree(&self) -> Result<usize> {
        if self.edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let min = match &self.links {
            Some(links) => links.nbhd.iter().map(VertexSet::len).min(),
            None => self.shadow_codegrees().into_values().min(),
        };
        Ok(min.expect("a non-empty graph has a positive set"))
    }

    /// Largest co-degree of any `(r-1)`-set (0 for an edgeless graph).
    pub fn max_codegree(&self) -> usize {
        match &self.links {
            Some(links) => links.nbhd.iter().map(VertexSet::len).max().unwrap_or(0),
            None => self.shadow_codegrees().into_values().max().unwrap_or(0),
        }
    }

    /// `δ_{r-1}(H)`: the least co-degree over all `(r-1)`-sets, zeros included.
    pub fn min_codegree(&self) -> Result<usize> {
        let k = self.r - 1;
        if self.n < k {
            return Err(Error::TooFewVertices {
                n: self.n,
                needed: k,
            });
        }
        if let Some(links) = &self.links {
            let all_pairs = self.n * (self.n - 1) / 2;
            if links.pairs.len() < all_pairs {
                return Ok(0);
            }
            return Ok(links.nbhd.iter().map(VertexSet::len).min().unwrap_or(0));
        }
        let shadow = self.shadow_codegrees();
        if shadow.len() < binomial(self.n, k) {
            return Ok(0);
        }
        Ok(shadow.into_values().min().unwrap_or(0))
    }

    /// The common neighbourhood `N(u, v)` of a 3-graph.
    pub fn neighborhood(&self, u: Vertex, v: Vertex) -> Result<VertexSet> {
        let links = self.links()?;
        if u == v {
            return Err(Error::MalformedSet("neighbourhood of a vertex with itself"));
        }
        if u as usize >= self.n || v as usize >= self.n {
            return Err(Error::MalformedSet("vertex out of range"));
        }
        Ok(links
            .get(u, v)
            .cloned()
            .unwrap_or_else(|| VertexSet::empty(self.n)))
    }

    /// All pairs of positive co-degree of a 3-graph, with their co-degrees.
    pub fn positive_pairs(&self) -> Result<PairSet> {
        let links = self.links()?;
        Ok(PairSet {
            pairs: links
                .pairs
                .iter()
                .zip(&links.nbhd)
                .map(|(&(u, v), set)| ([u, v], set.len()))
                .collect(),
        })
    }

    /// True iff no edge lies entirely inside `set`.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        !self
            .edges
            .iter()
            .any(|e| e.iter().all(|&v| set.contains(v)))
    }

    /// True iff every `(r-1)`-subset of `set` has co-degree zero, i.e. no
    /// edge meets `set` in `r-1` or more vertices.
    pub fn is_strongly_independent(&self, set: &VertexSet) -> bool {
        !self
            .edges
            .iter()
            .any(|e| e.iter().filter(|&&v| set.contains(v)).count() + 1 >= self.r)
    }

    /// The same graph with `extra` isolated vertices appended.
    pub fn with_isolated_vertices(&self, extra: usize) -> Result<Self> {
        Self::new(self.n + extra, self.r, self.edges.iter())
    }

    /// The graph obtained by deleting `v` (and its edges); vertices above
    /// `v` shift down by one.
    pub fn remove_vertex(&self, v: Vertex) -> Result<Self> {
        if v as usize >= self.n {
            return Err(Error::MalformedSet("vertex out of range"));
        }
        let edges = self.edges.iter().filter(|e| !e.contains(&v)).map(|e| {
            e.iter()
                .map(|&w| if w > v { w - 1 } else { w })
                .collect::<Vec<_>>()
        });
        Self::new(self.n - 1, self.r, edges)
    }

    /// Applies the relabelling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::MalformedSet("permutation has the wrong length"));
        }
        let mut seen = VertexSet::empty(self.n);
        for &p in perm {
            if p as usize >= self.n || seen.contains(p) {
                return Err(Error::MalformedSet("not a permutation"));
            }
            seen.insert(p);
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| perm[v as usize]).collect::<Vec<_>>());
        Self::new(self.n, self.r, edges)
    }

    /// This graph with additional edges.
    pub fn with_edges<E: AsRef<[Vertex]>>(&self, extra: impl IntoIterator<Item = E>) -> Result<Self> {
        let mut edges: Vec<Vec<Vertex>> = self.edges.iter().map(|e| e.to_vec()).collect();
        edges.extend(extra.into_iter().map(|e| e.as_ref().to_vec()));
        Self::new(self.n, self.r, edges)
    }
}

/// `E⁺`: the pairs of positive co-degree of a 3-graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSet {
    pairs: Vec<([Vertex; 2], usize)>,
}

impl PairSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ([Vertex; 2], usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn codegree(&self, u: Vertex, v: Vertex) -> usize {
        let key = if u < v { [u, v] } else { [v, u] };
        self.pairs
            .binary_search_by(|(p, _)| p.cmp(&key))
            .map_or(0, |i| self.pairs[i].1)
    }

    /// `Σ d(x, y)` over the positive pairs; equals `3|E|`.
    pub fn codegree_sum(&self) -> usize {
        self.pairs.iter().map(|&(_, d)| d).sum()
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_minus() -> Hypergraph {
        // 1-based {123, 124, 134}
        Hypergraph::from_triples(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3]]).unwrap()
    }

    fn k222() -> Hypergraph {
        let mut edges = Vec::new();
        for a in [0, 1] {
            for b in [2, 3] {
                for c in [4, 5] {
                    edges.push([a, b, c]);
                }
            }
        }
        Hypergraph::from_triples(6, &edges).unwrap()
    }

    #[test]
    fn construction_normalizes() {
        let h = k4_minus();
        assert_eq!(h.edge_count(), 3);
        let empty = Hypergraph::empty(5).unwrap();
        assert_eq!(empty.edge_count(), 0);
        let dup = Hypergraph::from_triples(4, &[[0, 1, 2], [2, 1, 0]]).unwrap();
        assert_eq!(dup.edge_count(), 1);
        assert_eq!(&*dup.edges()[0], &[0, 1, 2]);
    }

    #[test]
    fn construction_errors_name_the_edge() {
        assert_eq!(
            Hypergraph::from_triples(4, &[[0, 1, 2], [0, 1, 1]]),
            Err(Error::RepeatedVertex { edge: 1, vertex: 1 })
        );
        assert_eq!(
            Hypergraph::from_triples(4, &[[0, 1, 4]]),
            Err(Error::VertexOutOfRange {
                edge: 0,
                vertex: 4,
                n: 4
            })
        );
        assert_eq!(
            Hypergraph::new(4, 3, [vec![0, 1]]),
            Err(Error::WrongArity {
                edge: 0,
                expected: 3,
                found: 2
            })
        );
        assert!(Hypergraph::empty(MAX_VERTICES + 1).is_err());
    }

    #[test]
    fn codegrees_of_k4_minus() {
        let h = k4_minus();
        assert_eq!(h.codegree(&[0, 1]).unwrap(), 2);
        assert_eq!(h.codegree(&[2, 3]).unwrap(), 1);
        assert_eq!(h.min_positive_codegree().unwrap(), 1);
        assert_eq!(h.min_codegree().unwrap(), 1);
        assert_eq!(h.neighborhood(0, 1).unwrap().to_vec(), vec![2, 3]);
        assert_eq!(h.neighborhood(2, 3).unwrap().to_vec(), vec![0]);
        assert!(h.neighborhood(1, 1).is_err());
        assert!(h.codegree(&[1, 1]).is_err());
        assert!(h.codegree(&[1]).is_err());
        let mut degrees: Vec<usize> = h.positive_pairs().unwrap().iter().map(|p| p.1).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 1, 2, 2, 2]);
    }

    #[test]
    fn pair_outside_all_edges() {
        let h = Hypergraph::from_triples(6, &[[0, 1, 2]]).unwrap();
        assert_eq!(h.codegree(&[3, 4]).unwrap(), 0);
        assert!(h.neighborhood(3, 4).unwrap().is_empty());
        assert_eq!(h.positive_pairs().unwrap().len(), 3);
        assert_eq!(h.min_codegree().unwrap(), 0);
    }

    #[test]
    fn empty_graph_has_no_min_positive_codegree() {
        assert_eq!(
            Hypergraph::empty(5).unwrap().min_positive_codegree(),
            Err(Error::EmptyGraph)
        );
        assert!(Hypergraph::empty(1).unwrap().min_codegree().is_err());
    }

    #[test]
    fn complete_graphs() {
        let k4 = Hypergraph::from_triples(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
        assert_eq!(k4.min_codegree().unwrap(), 2);
        let h = k222();
        assert_eq!(h.min_positive_codegree().unwrap(), 2);
        assert_eq!(h.min_codegree().unwrap(), 0);
    }

    #[test]
    fn independence() {
        let h = k222();
        let class = VertexSet::from_vertices(6, [0, 1]);
        assert!(h.is_independent(&class));
        assert!(h.is_strongly_independent(&class));
        assert!(h.is_independent(&VertexSet::empty(6)));
        let k = k4_minus();
        assert!(!k.is_independent(&VertexSet::from_vertices(4, [0, 1, 2])));
        assert!(!k.is_strongly_independent(&VertexSet::from_vertices(4, [0, 1])));
    }

    #[test]
    fn general_uniformity() {
        let h = Hypergraph::new(5, 4, [[0, 1, 2, 3], [0, 1, 2, 4]]).unwrap();
        assert_eq!(h.codegree(&[0, 1, 2]).unwrap(), 2);
        assert_eq!(h.codegree(&[0, 1, 3]).unwrap(), 1);
        assert_eq!(h.min_positive_codegree().unwrap(), 1);
        assert_eq!(h.min_codegree().unwrap(), 0);
        assert!(h.positive_pairs().is_err());
        let full = Hypergraph::new(5, 4, (0..5u32).map(|s| (0..5u32).filter(|&v| v != s).collect::<Vec<_>>())).unwrap();
        assert_eq!(full.min_codegree().unwrap(), 2);
    }

    #[test]
    fn vertex_operations() {
        let h = k4_minus();
        assert_eq!(h.with_isolated_vertices(2).unwrap().n(), 6);
        let g = h.remove_vertex(0).unwrap();
        assert_eq!(g.edge_count(), 0);
        let g = h.remove_vertex(3).unwrap();
        assert_eq!(g.edges().len(), 1);
        let p = h.relabel(&[3, 2, 1, 0]).unwrap();
        assert!(p.has_edge(&[3, 2, 1]));
        assert!(h.relabel(&[0, 0, 1, 2]).is_err());
    }
}
