//! Lower-bound constructions.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::catalog::{self, complete_multipartite};
use crate::{Error, Hypergraph, Partition, Result, Vertex, MAX_VERTICES};

/// Replaces vertex `i` of `h` by a class of `sizes[i]` vertices; edges are
/// all transversals of the original edges. Classes are consecutive ranges.
pub fn blow_up(h: &Hypergraph, sizes: &[usize]) -> Result<Hypergraph> {
    blow_up_with_classes(h, sizes).map(|(g, _)| g)
}

pub fn blow_up_with_classes(h: &Hypergraph, sizes: &[usize]) -> Result<(Hypergraph, Partition)> {
    if sizes.len() != h.n() {
        return Err(Error::InvalidParameter(format!(
            "expected {} class sizes, got {}",
            h.n(),
            sizes.len()
        )));
    }
    let n: usize = sizes.iter().sum();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let classes = Partition::consecutive(sizes);
    let mut edges: Vec<Vec<Vertex>> = Vec::new();
    for e in h.edges() {
        let mut partial: Vec<Vec<Vertex>> = vec![Vec::new()];
        for &v in e.iter() {
            let class = &classes.classes()[v as usize];
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    class.iter().map(move |&w| {
                        let mut q = p.clone();
                        q.push(w);
                        q
                    })
                })
                .collect();
        }
        edges.extend(partial);
    }
    Ok((Hypergraph::new(n, h.r(), edges)?, classes))
}

/// Class sizes for `n` vertices in `k` classes differing by at most one;
/// larger classes first.
pub fn balanced_sizes(n: usize, k: usize) -> Vec<usize> {
    (0..k).map(|i| n / k + usize::from(i < n % k)).collect()
}

pub fn balanced_complete_k_partite(n: usize, k: usize) -> Result<Hypergraph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("need k >= 3, got {k}")));
    }
    if n < k {
        return Err(Error::TooFewVertices { n, needed: k });
    }
    complete_multipartite(&balanced_sizes(n, k))
}

/// Blow-up of the (6,3,2)-design with the given class sizes.
pub fn h6_blow_up(sizes: &[usize; 6]) -> Result<Hypergraph> {
    blow_up(&catalog::get("H6")?.graph, sizes)
}

/// Angle measured in millionths of a degree, normalised to `[0°, 360°)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Angle(i64);

pub const MICRO_DEGREES_PER_TURN: i64 = 360_000_000;
const HALF_TURN: i64 = MICRO_DEGREES_PER_TURN / 2;

impl Angle {
    pub fn from_micro_degrees(micro: i64) -> Self {
        Angle(micro.rem_euclid(MICRO_DEGREES_PER_TURN))
    }

    /// Rounds to the nearest micro-degree.
    pub fn from_degrees(degrees: f64) -> Self {
        let scaled = degrees * 1e6;
        let rounded = if scaled >= 0.0 {
            (scaled + 0.5) as i64
        } else {
            (scaled - 0.5) as i64
        };
        Self::from_micro_degrees(rounded)
    }

    pub fn micro_degrees(self) -> i64 {
        self.0
    }
}

/// Points on the unit circle; a triple is an edge when its triangle
/// contains the origin, i.e. when all three circular gaps between its
/// points are below 180°.
///
/// Rejects coincident and antipodal points.
pub fn circle_construction(angles: &[Angle]) -> Result<Hypergraph> {
    let n = angles.len();
    for i in 0..n {
        for j in i + 1..n {
            let diff = (angles[i].0 - angles[j].0).rem_euclid(MICRO_DEGREES_PER_TURN);
            if diff == 0 {
                return Err(Error::DuplicatePoints { first: i, second: j });
            }
            if diff == HALF_TURN {
                return Err(Error::AntipodalPoints { first: i, second: j });
            }
        }
    }
    let mut edges = Vec::new();
    for c in 0..n {
        for b in 0..c {
            for a in 0..b {
                let mut t = [angles[a].0, angles[b].0, angles[c].0];
                t.sort_unstable();
                let gaps = [t[1] - t[0], t[2] - t[1], MICRO_DEGREES_PER_TURN - (t[2] - t[0])];
                if gaps.iter().all(|&g| g < HALF_TURN) {
                    edges.push([a as Vertex, b as Vertex, c as Vertex]);
                }
            }
        }
    }
    Hypergraph::from_triples(n, &edges)
}

/// `n` equally spaced points starting at 0°.
pub fn regular_polygon(n: usize) -> Vec<Angle> {
    (0..n as i64)
        .map(|j| Angle::from_micro_degrees(j * MICRO_DEGREES_PER_TURN / n as i64))
        .collect()
}

/// One point from each antipodal pair of `2n` equally spaced slots: point
/// `j` sits at `j·180°/n`, moved to the opposite side when bit `j` of
/// `pattern` is set. Every generic configuration of `n` points has the same
/// circle construction as one of the `2^n` patterns.
pub fn circle_pattern(n: usize, pattern: u64) -> Vec<Angle> {
    (0..n as i64)
        .map(|j| {
            let base = j * HALF_TURN / n as i64;
            let flip = if pattern >> j & 1 == 1 { HALF_TURN } else { 0 };
            Angle::from_micro_degrees(base + flip)
        })
        .collect()
}

/// Complete one-way bipartite graph: `X = 0..x`, `Y = x..x+y`, edges every
/// `{x1, x2, y}`.
pub fn one_way_bipartite_complete(x_size: usize, y_size: usize) -> Result<Hypergraph> {
    if x_size < 2 || y_size < 1 {
        return Err(Error::InvalidParameter(format!(
            "one-way bipartite needs |X| >= 2 and |Y| >= 1, got ({x_size}, {y_size})"
        )));
    }
    let n = x_size + y_size;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let mut edges = Vec::new();
    for a in 0..x_size as Vertex {
        for b in a + 1..x_size as Vertex {
            for y in x_size as Vertex..n as Vertex {
                edges.push([a, b, y]);
            }
        }
    }
    Hypergraph::from_triples(n, &edges)
}

pub fn is_prime(q: u32) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Points of `PG(2, q)` as normalised vectors (first non-zero coordinate 1).
fn projective_points(q: u32) -> Vec<[u32; 3]> {
    let mut points = Vec::new();
    for b in 0..q {
        for c in 0..q {
            points.push([1, b, c]);
        }
    }
    for c in 0..q {
        points.push([0, 1, c]);
    }
    points.push([0, 0, 1]);
    points
}

/// Point-line incidence graph of the projective plane over the prime field
/// `F_q`. Returns the side size `q²+q+1` and the incidences `(point, line)`.
/// The graph is `(q+1)`-regular and contains no 4-cycle.
pub fn projective_plane_incidence(q: u32) -> Result<(usize, Vec<(Vertex, Vertex)>)> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let points = projective_points(q);
    let mut incidences = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for (j, l) in points.iter().enumerate() {
            let dot = (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q;
            if dot == 0 {
                incidences.push((i as Vertex, j as Vertex));
            }
        }
    }
    Ok((points.len(), incidences))
}

/// Tripartite 3-graph on `X ∪ Y ∪ Z` (consecutive ranges) whose edges are
/// `{x, y, z}` for every `x ∈ X` and every edge `yz` of the bipartite graph.
pub fn tripartite_from_bipartite(
    x_size: usize,
    y_size: usize,
    z_size: usize,
    bipartite: &[(Vertex, Vertex)],
) -> Result<Hypergraph> {
    let n = x_size + y_size + z_size;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let (y0, z0) = (x_size as Vertex, (x_size + y_size) as Vertex);
    let mut edges = Vec::with_capacity(x_size * bipartite.len());
    for &(y, z) in bipartite {
        if y as usize >= y_size || z as usize >= z_size {
            return Err(Error::InvalidParameter(
                "bipartite edge outside its classes".to_string(),
            ));
        }
        for x in 0..x_size as Vertex {
            edges.push([x, y0 + y, z0 + z]);
        }
    }
    Hypergraph::from_triples(n, &edges)
}

/// The `K_{2,2,2}`-free construction over `PG(2, q)` with `|X| = x_size`.
pub fn k222_tripartite(q: u32, x_size: usize) -> Result<Hypergraph> {
    if x_size == 0 {
        return Err(Error::InvalidParameter("|X| must be positive".to_string()));
    }
    let (side, incidences) = projective_plane_incidence(q)?;
    tripartite_from_bipartite(x_size, side, side, &incidences)
}

/// The classes `(X, Y, Z)` of [`k222_tripartite`].
pub fn k222_classes(q: u32, x_size: usize) -> Result<Partition> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let side = (q * q + q + 1) as usize;
    Ok(Partition::consecutive(&[x_size, side, side]))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Origin-in-triangle by orientation signs of the three edges.
    fn contains_origin(p: [(f64, f64); 3]) -> bool {
        let cross = |a: (f64, f64), b: (f64, f64)| a.0 * b.1 - a.1 * b.0;
        let s = [cross(p[0], p[1]), cross(p[1], p[2]), cross(p[2], p[0])];
        s.iter().all(|&x| x > 0.0) || s.iter().all(|&x| x < 0.0)
    }

    fn brute_force_circle(degrees: &[f64]) -> Vec<[Vertex; 3]> {
        let pts: Vec<(f64, f64)> = degrees
            .iter()
            .map(|d| (d.to_radians().cos(), d.to_radians().sin()))
            .collect();
        let mut edges = Vec::new();
        for a in 0..pts.len() {
            for b in a + 1..pts.len() {
                for c in b + 1..pts.len() {
                    if contains_origin([pts[a], pts[b], pts[c]]) {
                        edges.push([a as Vertex, b as Vertex, c as Vertex]);
                    }
                }
            }
        }
        edges
    }

    #[test]
    fn pentagon_has_five_edges() {
        let degrees = [0.0, 72.0, 144.0, 216.0, 288.0];
        assert_eq!(brute_force_circle(&degrees).len(), 5);
        let h = circle_construction(&regular_polygon(5)).unwrap();
        assert_eq!(h.edge_count(), 5);
    }

    #[test]
    fn circle_matches_geometry() {
        let configs: &[&[f64]] = &[
            &[0.0, 10.0, 20.0],
            &[3.0, 100.0, 200.0, 250.0, 330.0, 359.0],
            &[12.5, 47.0, 91.0, 170.0, 181.0, 260.0, 300.0],
        ];
        for degrees in configs {
            let angles: Vec<Angle> = degrees.iter().map(|&d| Angle::from_degrees(d)).collect();
            let h = circle_construction(&angles).unwrap();
            let expect = Hypergraph::from_triples(degrees.len(), &brute_force_circle(degrees)).unwrap();
            assert_eq!(h, expect, "{degrees:?}");
        }
        let semicircle = [0.0, 10.0, 20.0].map(Angle::from_degrees);
        assert_eq!(circle_construction(&semicircle).unwrap().edge_count(), 0);
    }

    #[test]
    fn circle_rejects_degenerate_points() {
        let dup = [0.0, 90.0, 360.0].map(Angle::from_degrees);
        assert_eq!(
            circle_construction(&dup),
            Err(Error::DuplicatePoints { first: 0, second: 2 })
        );
        let anti = [0.0, 45.0, 225.0].map(Angle::from_degrees);
        assert_eq!(
            circle_construction(&anti),
            Err(Error::AntipodalPoints { first: 1, second: 2 })
        );
    }

    #[test]
    fn blow_ups() {
        let h6 = catalog::get("H6").unwrap().graph;
        assert_eq!(blow_up(&h6, &[1; 6]).unwrap(), h6);
        let edge = Hypergraph::from_triples(3, &[[0, 1, 2]]).unwrap();
        assert_eq!(
            blow_up(&edge, &[2, 2, 2]).unwrap(),
            complete_multipartite(&[2, 2, 2]).unwrap()
        );
        let big = blow_up(&h6, &[3; 6]).unwrap();
        assert_eq!(big.min_positive_codegree().unwrap(), 6);
        let shrunk = blow_up(&h6, &[1, 1, 1, 0, 0, 0]).unwrap();
        assert_eq!(shrunk.edge_count(), 1);
        assert!(blow_up(&h6, &[1; 5]).is_err());
    }

    #[test]
    fn balanced_partite_codegrees() {
        assert_eq!(balanced_sizes(10, 4), vec![3, 3, 2, 2]);
        let k6 = balanced_complete_k_partite(6, 3).unwrap();
        assert_eq!(k6, complete_multipartite(&[2, 2, 2]).unwrap());
        assert_eq!(k6.min_positive_codegree().unwrap(), 2);
        let cases = [(12, 6, 8), (10, 5, 6)];
        for (n, k, delta) in cases {
            let g = balanced_complete_k_partite(n, k).unwrap();
            assert_eq!(g.min_positive_codegree().unwrap(), delta);
        }
        assert!(balanced_complete_k_partite(2, 3).is_err());
        assert!(balanced_complete_k_partite(6, 2).is_err());
    }

    #[test]
    fn one_way_codegrees() {
        let g = one_way_bipartite_complete(5, 5).unwrap();
        assert_eq!(g.min_positive_codegree().unwrap(), 4);
        let g = one_way_bipartite_complete(5, 4).unwrap();
        assert_eq!(g.min_positive_codegree().unwrap(), 4);
        assert_eq!(one_way_bipartite_complete(2, 1).unwrap().edge_count(), 1);
        assert!(one_way_bipartite_complete(1, 4).is_err());
    }

    #[test]
    fn projective_planes() {
        for q in [2, 3, 5] {
            let (side, inc) = projective_plane_incidence(q).unwrap();
            assert_eq!(side as u32, q * q + q + 1);
            let mut deg = vec![0; side];
            for &(p, _) in &inc {
                deg[p as usize] += 1;
            }
            assert!(deg.iter().all(|&d| d == q + 1));
        }
        assert_eq!(projective_plane_incidence(4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn k222_construction_codegrees() {
        let g = k222_tripartite(2, 3).unwrap();
        assert_eq!(g.n(), 17);
        assert_eq!(g.min_positive_codegree().unwrap(), 3);
        assert_eq!(g.pair_codegree(0, 1), 0);
        let g = k222_tripartite(3, 4).unwrap();
        assert_eq!(g.min_positive_codegree().unwrap(), 4);
        let g = k222_tripartite(3, 2).unwrap();
        assert_eq!(g.min_positive_codegree().unwrap(), 2);
    }
}
