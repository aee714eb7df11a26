//! Subgraph containment, copy counting, automorphisms and the
//! "every four vertices span 0 or 2 edges" predicate.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::exec::{Executor, Sequential};
use crate::{Error, Hypergraph, Result, Vertex, VertexSet};

/// Largest pattern [`count_copies`] accepts.
pub const COUNT_PATTERN_CAP: usize = 7;
/// Largest host [`count_copies`] accepts.
pub const COUNT_HOST_CAP: usize = 64;
/// Largest graph [`automorphism_count`] accepts.
pub const AUTOMORPHISM_CAP: usize = 12;

/// An injective vertex map `V(F) -> V(H)` carrying edges of `F` to edges of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<Vertex>,
}

impl Embedding {
    /// `map[v]` is the image of pattern vertex `v`.
    pub fn map(&self) -> &[Vertex] {
        &self.map
    }

    pub fn is_valid(&self, f: &Hypergraph, h: &Hypergraph) -> bool {
        let mut seen = VertexSet::empty(h.n());
        for &w in &self.map {
            if w as usize >= h.n() || seen.contains(w) {
                return false;
            }
            seen.insert(w);
        }
        self.map.len() == f.n()
            && f.edges().iter().all(|e| {
                let image: Vec<Vertex> = e.iter().map(|&v| self.map[v as usize]).collect();
                h.has_edge(&image)
            })
    }
}

/// Backtracking matcher for 3-graphs. Pattern vertices are placed in
/// descending degree order (ties by index); the candidates for each vertex
/// are cut down by intersecting the host neighbourhoods `N(φa, φb)` of every
/// pattern edge it closes and by the positive co-degree partners of its
/// already placed pattern partners.
struct Matcher<'a> {
    h: &'a Hypergraph,
    order: Vec<Vertex>,
    closes: Vec<Vec<(usize, usize)>>,
    partners: Vec<Vec<(usize, usize)>>,
    base: Vec<VertexSet>,
    /// For existence queries: the previous position holding a twin of this
    /// pattern vertex, whose image must be smaller.
    twin_before: Vec<Option<usize>>,
    /// For existence queries: `host_class[w]` is the least host twin of `w`.
    /// Only the first unused member of a class is tried at each depth.
    host_class: Option<Vec<Vertex>>,
}

impl<'a> Matcher<'a> {
    fn new(f: &Hypergraph, h: &'a Hypergraph) -> Result<Self> {
        f.require_triples()?;
        h.require_triples()?;
        let mut order: Vec<Vertex> = (0..f.n() as Vertex).collect();
        order.sort_by_key(|&v| (core::cmp::Reverse(f.degree(v)), v));
        let mut position = vec![0; f.n()];
        for (i, &v) in order.iter().enumerate() {
            position[v as usize] = i;
        }
        let mut closes = vec![Vec::new(); f.n()];
        for e in f.edges() {
            let mut pos = [position[e[0] as usize], position[e[1] as usize], position[e[2] as usize]];
            pos.sort_unstable();
            closes[pos[2]].push((pos[0], pos[1]));
        }
        let mut partners = vec![Vec::new(); f.n()];
        for (i, &v) in order.iter().enumerate() {
            for (j, &u) in order[..i].iter().enumerate() {
                let d = f.pair_codegree(u, v);
                if d > 0 {
                    partners[i].push((j, d));
                }
            }
        }
        let base = order
            .iter()
            .map(|&v| {
                let need = f.degree(v);
                VertexSet::from_vertices(
                    h.n(),
                    (0..h.n() as Vertex).filter(|&w| h.degree(w) >= need),
                )
            })
            .collect();
        Ok(Matcher {
            h,
            order,
            closes,
            partners,
            base,
            twin_before: vec![None; f.n()],
            host_class: None,
        })
    }

    /// Prunes symmetric branches when the visitor stops at the first
    /// embedding. Host twins are used when there are any, otherwise the
    /// images of pattern twins are ordered; the two reductions are not
    /// combined.
    fn break_twin_symmetry(&mut self, f: &Hypergraph) {
        let classes = host_twin_classes(self.h);
        if classes.iter().enumerate().any(|(w, &c)| c as usize != w) {
            self.host_class = Some(classes);
            return;
        }
        let swapped_is_edge = |e: &[Vertex], u: Vertex, v: Vertex| {
            let img: Vec<Vertex> = e.iter().map(|&x| if x == u { v } else if x == v { u } else { x }).collect();
            f.has_edge(&img)
        };
        for i in 0..self.len() {
            let v = self.order[i];
            self.twin_before[i] = (0..i).rev().find(|&j| {
                let u = self.order[j];
                f.edges().iter().all(|e| swapped_is_edge(e, u, v))
            });
        }
    }

    fn len(&self) -> usize {
        self.order.len()
    }

    /// Visits every embedding whose first placed vertex maps into `roots`.
    /// The visitor receives `(order, image)` with `image[i]` the host vertex
    /// of pattern vertex `order[i]`.
    fn run<V>(&self, roots: &VertexSet, visit: &mut V) -> ControlFlow<()>
    where
        V: FnMut(&[Vertex], &[Vertex]) -> ControlFlow<()>,
    {
        if self.len() == 0 {
            return visit(&self.order, &[]);
        }
        if self.len() > self.h.n() {
            return ControlFlow::Continue(());
        }
        let mut image = vec![0; self.len()];
        let mut used = VertexSet::empty(self.h.n());
        let mut scratch = vec![VertexSet::empty(self.h.n()); self.len()];
        self.extend(0, roots, &mut image, &mut used, &mut scratch, visit)
    }

    fn extend<V>(
        &self,
        depth: usize,
        roots: &VertexSet,
        image: &mut [Vertex],
        used: &mut VertexSet,
        scratch: &mut [VertexSet],
        visit: &mut V,
    ) -> ControlFlow<()>
    where
        V: FnMut(&[Vertex], &[Vertex]) -> ControlFlow<()>,
    {
        let mut cand = core::mem::take(&mut scratch[depth]);
        let flow = self.try_candidates(depth, roots, &mut cand, image, used, scratch, visit);
        scratch[depth] = cand;
        flow
    }

    #[allow(clippy::too_many_arguments)]
    fn try_candidates<V>(
        &self,
        depth: usize,
        roots: &VertexSet,
        cand: &mut VertexSet,
        image: &mut [Vertex],
        used: &mut VertexSet,
        scratch: &mut [VertexSet],
        visit: &mut V,
    ) -> ControlFlow<()>
    where
        V: FnMut(&[Vertex], &[Vertex]) -> ControlFlow<()>,
    {
        cand.copy_from(&self.base[depth]);
        if depth == 0 {
            cand.intersect_with(roots);
        }
        for &(a, b) in &self.closes[depth] {
            match self.h.pair_link(image[a], image[b]) {
                Some(n) => cand.intersect_with(n),
                None => return ControlFlow::Continue(()),
            }
        }
        for &(j, _) in &self.partners[depth] {
            cand.intersect_with(self.h.positive_partners(image[j]));
        }
        cand.difference_with(used);
        let floor = self.twin_before[depth].map(|j| image[j]);
        let mut tried = self.host_class.as_ref().map(|_| VertexSet::empty(self.h.n()));
        for w in cand.iter() {
            if floor.is_some_and(|x| w <= x) {
                continue;
            }
            if let (Some(classes), Some(tried)) = (&self.host_class, tried.as_mut()) {
                let c = classes[w as usize];
                if tried.contains(c) {
                    continue;
                }
                tried.insert(c);
            }
            if self.partners[depth]
                .iter()
                .any(|&(j, d)| d > 1 && self.h.pair_codegree(image[j], w) < d)
            {
                continue;
            }
            image[depth] = w;
            if depth + 1 == self.len() {
                visit(&self.order, image)?;
                continue;
            }
            used.insert(w);
            let flow = self.extend(depth + 1, roots, image, used, scratch, visit);
            used.remove(w);
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn count_from(&self, roots: &VertexSet) -> u64 {
        let mut count = 0u64;
        let _ = self.run(roots, &mut |_, _| {
            count += 1;
            ControlFlow::Continue(())
        });
        count
    }
}

/// Least vertex of each class of twins: `x` and `y` are twins when
/// swapping them is an automorphism, that is `N(x, z) - y = N(y, z) - x`
/// for every other `z`.
fn host_twin_classes(h: &Hypergraph) -> Vec<Vertex> {
    let n = h.n() as Vertex;
    let empty = VertexSet::empty(h.n());
    let link_without = |a: Vertex, z: Vertex, drop: Vertex| {
        let mut s = VertexSet::empty(h.n());
        s.copy_from(h.pair_link(a, z).unwrap_or(&empty));
        s.remove(drop);
        s
    };
    let twins = |x: Vertex, y: Vertex| {
        h.degree(x) == h.degree(y)
            && (0..n)
                .filter(|&z| z != x && z != y)
                .all(|z| link_without(x, z, y) == link_without(y, z, x))
    };
    let mut class: Vec<Vertex> = (0..n).collect();
    for y in 0..n {
        if let Some(x) = (0..y).find(|&x| class[x as usize] == x && twins(x, y)) {
            class[y as usize] = x;
        }
    }
    class
}

fn require_pattern_edges(f: &Hypergraph) -> Result<()> {
    if f.has_edges() {
        Ok(())
    } else {
        Err(Error::NotApplicable("the pattern has no edges".to_string()))
    }
}

/// A copy of `f` inside `h` (as a subgraph, not necessarily induced), if any.
pub fn contains_copy(f: &Hypergraph, h: &Hypergraph) -> Result<Option<Embedding>> {
    require_pattern_edges(f)?;
    let mut matcher = Matcher::new(f, h)?;
    matcher.break_twin_symmetry(f);
    let mut found = None;
    let all = VertexSet::full(h.n());
    let _ = matcher.run(&all, &mut |order, image| {
        let mut map = vec![0; order.len()];
        for (&v, &w) in order.iter().zip(image) {
            map[v as usize] = w;
        }
        found = Some(Embedding { map });
        ControlFlow::Break(())
    });
    Ok(found)
}

pub fn is_free(f: &Hypergraph, h: &Hypergraph) -> Result<bool> {
    contains_copy(f, h).map(|e| e.is_none())
}

/// Number of edge-preserving injections `V(F) -> V(H)`.
pub fn count_injections(f: &Hypergraph, h: &Hypergraph) -> Result<u64> {
    count_injections_with(f, h, &Sequential)
}

/// [`count_injections`] with one shard per image of the first placed vertex.
pub fn count_injections_with<X: Executor>(f: &Hypergraph, h: &Hypergraph, exec: &X) -> Result<u64> {
    let matcher = Matcher::new(f, h)?;
    if matcher.len() == 0 {
        return Ok(1);
    }
    let n = h.n();
    let parts = exec.map(n, |root| {
        matcher.count_from(&VertexSet::from_vertices(n, [root as Vertex]))
    });
    Ok(parts.into_iter().sum())
}

/// `|Aut(F)|`, counted as the edge-preserving bijections of `F`.
pub fn automorphism_count(f: &Hypergraph) -> Result<u64> {
    if f.n() > AUTOMORPHISM_CAP {
        return Err(Error::Infeasible {
            what: "automorphism count",
            size: f.n(),
            cap: AUTOMORPHISM_CAP,
        });
    }
    count_injections(f, f)
}

/// Number of (not necessarily induced) copies of `f` in `h`: injections
/// divided by `|Aut(F)|`.
pub fn count_copies(f: &Hypergraph, h: &Hypergraph) -> Result<u64> {
    count_copies_with(f, h, &Sequential)
}

pub fn count_copies_with<X: Executor>(f: &Hypergraph, h: &Hypergraph, exec: &X) -> Result<u64> {
    require_pattern_edges(f)?;
    if f.n() > COUNT_PATTERN_CAP {
        return Err(Error::Infeasible {
            what: "copy counting pattern",
            size: f.n(),
            cap: COUNT_PATTERN_CAP,
        });
    }
    if h.n() > COUNT_HOST_CAP {
        return Err(Error::Infeasible {
            what: "copy counting host",
            size: h.n(),
            cap: COUNT_HOST_CAP,
        });
    }
    let aut = automorphism_count(f)?;
    Ok(count_injections_with(f, h, exec)? / aut)
}

/// Outcome of [`span_profile`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanProfile {
    /// The first 4-set (in lexicographic order) spanning neither 0 nor 2 edges.
    pub violation: Option<([Vertex; 4], usize)>,
}

impl SpanProfile {
    pub fn ok(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks that every 4 vertices span exactly 0 or 2 edges.
pub fn span_profile(h: &Hypergraph) -> Result<SpanProfile> {
    h.require_triples()?;
    let n = h.n() as Vertex;
    let edge = |a: Vertex, b: Vertex, c: Vertex| h.pair_link(a, b).is_some_and(|s| s.contains(c));
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let abc = usize::from(edge(a, b, c));
                for d in c + 1..n {
                    let count = abc
                        + usize::from(edge(a, b, d))
                        + usize::from(edge(a, c, d))
                        + usize::from(edge(b, c, d));
                    if count != 0 && count != 2 {
                        return Ok(SpanProfile {
                            violation: Some(([a, b, c, d], count)),
                        });
                    }
                }
            }
        }
    }
    Ok(SpanProfile { violation: None })
}

pub fn span_profile_ok(h: &Hypergraph) -> Result<bool> {
    span_profile(h).map(|p| p.ok())
}

/// Copies of `K4⁻` through the edge `abc`:
/// `|N(ab)∩N(bc)| + |N(ab)∩N(ac)| + |N(bc)∩N(ac)|`.
pub fn per_edge_k4minus_count(h: &Hypergraph, edge: [Vertex; 3]) -> Result<usize> {
    h.require_triples()?;
    if !h.has_edge(&edge) {
        return Err(Error::NotAnEdge);
    }
    let [a, b, c] = edge;
    let ab = h.pair_link(a, b).expect("edge pair");
    let bc = h.pair_link(b, c).expect("edge pair");
    let ac = h.pair_link(a, c).expect("edge pair");
    Ok(ab.intersection_len(bc) + ab.intersection_len(ac) + bc.intersection_len(ac))
}
