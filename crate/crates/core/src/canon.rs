//! Canonical forms of small 3-graphs.
//!
//! Edges of a 3-graph on `n <= 10` vertices are encoded as a bitmask over
//! the triples of `0..n` in colex order (`{a<b<c}` sorted by `c`, then `b`,
//! then `a`). The canonical form is the relabelling whose triple bit string,
//! read from triple 0 onward, is lexicographically least, taken over the
//! relabellings that list colour-refinement classes in a fixed order.
//! Colour refinement is isomorphism invariant, so two graphs have the same
//! canonical form exactly when they are isomorphic.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Hypergraph, Result, Vertex};

/// Largest vertex count with a canonical form.
pub const CANON_CAP: usize = 10;

/// Bitmask over colex-ordered triples.
pub type EdgeMask = u128;

const fn binom3(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

const fn binom2(n: usize) -> usize {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// Colex rank of the triple `{a, b, c}`; any argument order.
#[inline]
pub const fn triple_index(a: usize, b: usize, c: usize) -> usize {
    let (mut x, mut y, mut z) = (a, b, c);
    if x > y {
        let t = x;
        x = y;
        y = t;
    }
    if y > z {
        let t = y;
        y = z;
        z = t;
    }
    if x > y {
        let t = x;
        x = y;
        y = t;
    }
    binom3(z) + binom2(y) + x
}

/// Number of triples on `n` vertices.
pub const fn triple_count(n: usize) -> usize {
    binom3(n)
}

const TRIPLES: [[u8; 3]; binom3(CANON_CAP)] = {
    let mut out = [[0u8; 3]; binom3(CANON_CAP)];
    let mut c = 0;
    while c < CANON_CAP {
        let mut b = 0;
        while b < c {
            let mut a = 0;
            while a < b {
                out[triple_index(a, b, c)] = [a as u8, b as u8, c as u8];
                a += 1;
            }
            b += 1;
        }
        c += 1;
    }
    out
};

/// The triple with colex rank `index` (for indices below `C(10, 3)`).
#[inline]
pub fn triple_at(index: usize) -> [Vertex; 3] {
    let t = TRIPLES[index];
    [t[0] as Vertex, t[1] as Vertex, t[2] as Vertex]
}

/// Edge mask of a 3-graph on at most [`CANON_CAP`] vertices.
pub fn edge_mask(h: &Hypergraph) -> Result<EdgeMask> {
    check_size(h)?;
    Ok(h.edges()
        .iter()
        .fold(0, |m, e| m | 1 << triple_index(e[0] as usize, e[1] as usize, e[2] as usize)))
}

/// The 3-graph on `n` vertices with the given edge mask.
pub fn graph_from_mask(n: usize, mask: EdgeMask) -> Hypergraph {
    let edges: Vec<[Vertex; 3]> = mask_triples(mask).collect();
    Hypergraph::from_triples(n, &edges).expect("mask triples fit the vertex count")
}

/// Triples of a mask in colex order.
pub fn mask_triples(mask: EdgeMask) -> impl Iterator<Item = [Vertex; 3]> {
    let mut rest = mask;
    core::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(triple_at(i))
    })
}

fn check_size(h: &Hypergraph) -> Result<()> {
    h.require_triples()?;
    if h.n() > CANON_CAP {
        return Err(Error::Infeasible {
            what: "canonical form",
            size: h.n(),
            cap: CANON_CAP,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    mask: EdgeMask,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Edge mask of the canonical relabelling.
    pub fn mask(&self) -> EdgeMask {
        self.mask
    }

    /// Canonical edge list, lexicographically sorted.
    pub fn edges(&self) -> Vec<[Vertex; 3]> {
        let mut edges: Vec<[Vertex; 3]> = mask_triples(self.mask).collect();
        edges.sort_unstable();
        edges
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        graph_from_mask(self.n(), self.mask)
    }

    /// Stable 64-bit digest of the form.
    pub fn hash(&self) -> u64 {
        let mut x = self.n as u64;
        for word in [self.mask as u64, (self.mask >> 64) as u64] {
            x ^= word;
            // splitmix64 finaliser
            x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = x;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            x = z ^ (z >> 31);
        }
        x
    }
}

pub fn canonical_form(h: &Hypergraph) -> Result<CanonicalForm> {
    let mask = edge_mask(h)?;
    Ok(canonical_form_of_mask(h.n(), mask))
}

/// Canonical form of the graph on `n <= 10` vertices with edge mask `mask`.
pub fn canonical_form_of_mask(n: usize, mask: EdgeMask) -> CanonicalForm {
    assert!(n <= CANON_CAP);
    CanonicalForm {
        n: n as u8,
        mask: Canonizer::new(n, mask).run(),
    }
}

struct Canonizer {
    n: usize,
    total: usize,
    /// `link[u][v]` has bit `w` set when `{u, v, w}` is an edge.
    link: [[u16; CANON_CAP]; CANON_CAP],
    /// Vertices grouped by refined colour, colours in increasing order.
    blocks: Vec<Vec<usize>>,
    best: Option<EdgeMask>,
}

impl Canonizer {
    fn new(n: usize, mask: EdgeMask) -> Self {
        let mut link = [[0u16; CANON_CAP]; CANON_CAP];
        for [a, b, c] in mask_triples(mask) {
            let (a, b, c) = (a as usize, b as usize, c as usize);
            link[a][b] |= 1 << c;
            link[b][a] |= 1 << c;
            link[a][c] |= 1 << b;
            link[c][a] |= 1 << b;
            link[b][c] |= 1 << a;
            link[c][b] |= 1 << a;
        }
        let mut canon = Canonizer {
            n,
            total: triple_count(n),
            link,
            blocks: Vec::new(),
            best: None,
        };
        canon.blocks = canon.refine();
        canon
    }

    fn codegree(&self, u: usize, v: usize) -> u32 {
        self.link[u][v].count_ones()
    }

    /// Colour refinement starting from the degree-and-co-degree profile.
    fn refine(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut colour = vec![0usize; n];
        let mut classes = if n == 0 { 0 } else { 1 };
        loop {
            let signatures: Vec<(usize, Vec<(usize, u32)>)> = (0..n)
                .map(|v| {
                    let mut around: Vec<(usize, u32)> = (0..n)
                        .filter(|&u| u != v)
                        .map(|u| (colour[u], self.codegree(u, v)))
                        .collect();
                    around.sort_unstable();
                    (colour[v], around)
                })
                .collect();
            let mut distinct = signatures.clone();
            distinct.sort();
            distinct.dedup();
            for v in 0..n {
                colour[v] = distinct.binary_search(&signatures[v]).unwrap();
            }
            if distinct.len() == classes {
                break;
            }
            classes = distinct.len();
        }
        let mut blocks = vec![Vec::new(); classes];
        for v in 0..n {
            blocks[colour[v]].push(v);
        }
        blocks
    }

    fn run(mut self) -> EdgeMask {
        let order: Vec<usize> = self
            .blocks
            .iter()
            .enumerate()
            .flat_map(|(c, b)| core::iter::repeat_n(c, b.len()))
            .collect();
        let mut vertex_at = vec![0usize; self.n];
        let mut used = 0u16;
        self.place(0, &order, &mut vertex_at, &mut used, 0);
        let key = self.best.unwrap_or(0);
        // key holds triple 0 in its most significant position
        (0..self.total).fold(0, |m, i| {
            if key >> (self.total - 1 - i) & 1 == 1 {
                m | 1 << i
            } else {
                m
            }
        })
    }

    fn place(&mut self, label: usize, order: &[usize], vertex_at: &mut [usize], used: &mut u16, key: EdgeMask) {
        if label == self.n {
            if self.best.is_none_or(|b| key < b) {
                self.best = Some(key);
            }
            return;
        }
        let block = order[label];
        for i in 0..self.blocks[block].len() {
            let v = self.blocks[block][i];
            if *used >> v & 1 == 1 {
                continue;
            }
            // triples {x, y, label} with x < y < label, in colex order
            let mut next = key;
            for y in 0..label {
                let row = self.link[vertex_at[y]][v];
                for &x in &vertex_at[..y] {
                    next = next << 1 | EdgeMask::from(row >> x & 1);
                }
            }
            if let Some(best) = self.best {
                let fixed = triple_count(label + 1);
                if next > best >> (self.total - fixed) {
                    continue;
                }
            }
            vertex_at[label] = v;
            *used |= 1 << v;
            self.place(label + 1, order, vertex_at, used, next);
            *used &= !(1 << v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn all_perms(n: usize) -> Vec<Vec<Vertex>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, (n - 1) as Vertex);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn triple_ranks_round_trip() {
        for i in 0..triple_count(CANON_CAP) {
            let [a, b, c] = triple_at(i);
            assert!(a < b && b < c);
            assert_eq!(triple_index(c as usize, a as usize, b as usize), i);
        }
        assert_eq!(triple_index(0, 1, 2), 0);
        assert_eq!(triple_index(0, 1, 3), 1);
    }

    #[test]
    fn invariant_under_relabelling() {
        let k4m = catalog::get("K4-").unwrap().graph;
        let reference = canonical_form(&k4m).unwrap();
        for p in all_perms(4) {
            assert_eq!(canonical_form(&k4m.relabel(&p).unwrap()).unwrap(), reference);
        }
        let fano = catalog::get("Fano").unwrap().graph;
        let reference = canonical_form(&fano).unwrap();
        for p in all_perms(7).into_iter().step_by(37) {
            assert_eq!(canonical_form(&fano.relabel(&p).unwrap()).unwrap(), reference);
        }
    }

    #[test]
    fn separates_non_isomorphic() {
        let h6 = canonical_form(&catalog::get("H6").unwrap().graph).unwrap();
        let k222 = canonical_form(&catalog::get("K222").unwrap().graph).unwrap();
        assert_ne!(h6, k222);
        assert_ne!(h6.hash(), k222.hash());
        let c5 = canonical_form(&catalog::get("C5").unwrap().graph).unwrap();
        let j4 = canonical_form(&catalog::get("J4").unwrap().graph).unwrap();
        assert_ne!(c5, j4);
    }

    #[test]
    fn canonical_graph_is_isomorphic() {
        for g in catalog::all() {
            let form = canonical_form(&g.graph).unwrap();
            let back = form.to_hypergraph();
            assert_eq!(back.edge_count(), g.graph.edge_count());
            assert_eq!(canonical_form(&back).unwrap(), form);
        }
    }

    #[test]
    fn blown_up_edge_matches_edge() {
        let edge = Hypergraph::from_triples(3, &[[0, 1, 2]]).unwrap();
        let blown = crate::constructions::blow_up(&edge, &[1, 1, 1]).unwrap();
        assert_eq!(canonical_form(&blown).unwrap(), canonical_form(&edge).unwrap());
        let shifted = Hypergraph::from_triples(5, &[[2, 3, 4]]).unwrap();
        let plain = Hypergraph::from_triples(5, &[[0, 1, 4]]).unwrap();
        assert_eq!(canonical_form(&shifted).unwrap(), canonical_form(&plain).unwrap());
    }

    #[test]
    fn size_cap() {
        assert!(canonical_form(&Hypergraph::empty(11).unwrap()).unwrap_err().is_infeasible());
        assert_eq!(canonical_form(&Hypergraph::empty(0).unwrap()).unwrap().mask(), 0);
    }
}
