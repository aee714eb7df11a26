//! Checkers for the quantitative bounds, evaluated on concrete graphs.
//!
//! Every quantity is an exact integer or rational.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::embed;
use crate::exec::Executor;
use crate::partition::find_k_partition;
use crate::{catalog, constructions, Error, Hypergraph, Partition, Ratio, Result, Vertex, VertexSet};

fn ratio(num: usize, den: usize) -> Ratio {
    Ratio::new(num as i64, den as i64)
}

fn nonempty_delta(h: &Hypergraph) -> Result<usize> {
    h.require_triples()?;
    h.min_positive_codegree()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeBoundReport {
    pub n: usize,
    pub delta: usize,
    /// `δ⁺ / n`.
    pub c: Ratio,
    pub lhs: usize,
    /// `c³ n³ / 6`.
    pub rhs: Ratio,
    pub holds: bool,
}

/// `|E| >= (c³/6) n³` where `c = δ⁺/n`.
pub fn edge_bound_check(h: &Hypergraph) -> Result<EdgeBoundReport> {
    let delta = nonempty_delta(h)?;
    let rhs = Ratio::from_integer((delta * delta * delta) as i64) / 6;
    let lhs = h.edge_count();
    Ok(EdgeBoundReport {
        n: h.n(),
        delta,
        c: ratio(delta, h.n()),
        lhs,
        rhs,
        holds: Ratio::from_integer(lhs as i64) >= rhs,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSetReport {
    pub n: usize,
    pub delta: usize,
    pub set_size: usize,
    /// `n - |S|`.
    pub bound: usize,
    pub holds: bool,
}

/// `δ⁺ <= n - |S|` for an independent set `S`.
pub fn independent_set_bound_check(h: &Hypergraph, set: &VertexSet) -> Result<IndependentSetReport> {
    let delta = nonempty_delta(h)?;
    if set.iter().any(|v| v as usize >= h.n()) {
        return Err(Error::MalformedSet("vertex outside the graph"));
    }
    if !h.is_independent(set) {
        return Err(Error::NotIndependent);
    }
    let bound = h.n() - set.len();
    Ok(IndependentSetReport {
        n: h.n(),
        delta,
        set_size: set.len(),
        bound,
        holds: delta <= bound,
    })
}

/// Greedy maximal independent sets, one per starting vertex: starting at
/// `s`, vertices `s, s+1, ...` (cyclically) are added whenever the set stays
/// independent. Duplicates are removed.
pub fn greedy_independent_sets(h: &Hypergraph) -> Vec<VertexSet> {
    let n = h.n();
    let mut out: Vec<VertexSet> = Vec::new();
    for s in 0..n {
        let mut set = VertexSet::empty(n);
        for i in 0..n {
            let v = ((s + i) % n) as Vertex;
            set.insert(v);
            if !h.is_independent(&set) {
                set.remove(v);
            }
        }
        if !out.contains(&set) {
            out.push(set);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupersaturationReport {
    pub n: usize,
    pub delta: usize,
    /// `δ⁺/n - 1/3`.
    pub epsilon: Ratio,
    pub min_per_edge: usize,
    /// `3εn`.
    pub per_edge_bound: Ratio,
    pub total_copies: u64,
    /// `εn⁴ / 162`.
    pub copies_bound: Ratio,
    pub holds: bool,
}

/// Copies of `K4-` per edge and in total, against `3εn` and `εn⁴/162`.
/// Applies when `δ⁺ >= n/3`.
pub fn supersaturation_check<X: Executor>(h: &Hypergraph, exec: &X) -> Result<SupersaturationReport> {
    let delta = nonempty_delta(h)?;
    let n = h.n();
    let epsilon = ratio(delta, n) - Ratio::new(1, 3);
    if epsilon < Ratio::from_integer(0) {
        return Err(Error::NotApplicable(format!(
            "minimum positive co-degree {delta} is below n/3 for n = {n}"
        )));
    }
    let mut min_per_edge = usize::MAX;
    for e in h.edges() {
        let count = embed::per_edge_k4minus_count(h, [e[0], e[1], e[2]])?;
        min_per_edge = min_per_edge.min(count);
    }
    let k4m = catalog::get("K4-")?.graph;
    let total_copies = embed::count_copies_with(&k4m, h, exec)?;
    let per_edge_bound = epsilon * 3 * n as i64;
    let n4 = (n * n * n * n) as i64;
    let copies_bound = epsilon * n4 / 162;
    let holds = Ratio::from_integer(min_per_edge as i64) >= per_edge_bound
        && Ratio::from_integer(total_copies as i64) >= copies_bound;
    Ok(SupersaturationReport {
        n,
        delta,
        epsilon,
        min_per_edge,
        per_edge_bound,
        total_copies,
        copies_bound,
        holds,
    })
}

/// Sequential form of [`supersaturation_check`].
pub fn supersaturation_check_seq(h: &Hypergraph) -> Result<SupersaturationReport> {
    supersaturation_check(h, &crate::exec::Sequential)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TStatistic {
    /// `Σ C(d(x,y), 2)` over positive pairs.
    pub t: u64,
    pub positive_pairs: usize,
    /// `δ⁺`, or 0 without edges.
    pub delta: usize,
    /// `|E⁺| · C(δ⁺, 2)`.
    pub lower_bound: u64,
    pub holds: bool,
}

pub fn t_statistic(h: &Hypergraph) -> Result<TStatistic> {
    let pairs = h.positive_pairs()?;
    let choose2 = |d: usize| (d * d.saturating_sub(1) / 2) as u64;
    let t = pairs.iter().map(|(_, d)| choose2(d)).sum();
    let delta = if h.has_edges() { h.min_positive_codegree()? } else { 0 };
    let lower_bound = pairs.len() as u64 * choose2(delta);
    Ok(TStatistic {
        t,
        positive_pairs: pairs.len(),
        delta,
        lower_bound,
        holds: lower_bound <= t,
    })
}

/// Whether the 2-graph of pairs `{x, y}` with `xyz1` and `xyz2` both edges
/// has no 4-cycle.
pub fn link_c4_free(h: &Hypergraph, z1: Vertex, z2: Vertex) -> Result<bool> {
    h.require_triples()?;
    let n = h.n();
    for z in [z1, z2] {
        if z as usize >= n {
            return Err(Error::VertexOutOfRange { edge: 0, vertex: z, n });
        }
    }
    if z1 == z2 {
        return Err(Error::InvalidParameter("z1 and z2 must differ".to_string()));
    }
    let empty = VertexSet::empty(n);
    let adjacency: Vec<VertexSet> = (0..n as Vertex)
        .map(|x| {
            if x == z1 || x == z2 {
                return empty.clone();
            }
            let mut common = h.pair_link(x, z1).unwrap_or(&empty).clone();
            common.intersect_with(h.pair_link(x, z2).unwrap_or(&empty));
            common.remove(z1);
            common.remove(z2);
            common
        })
        .collect();
    for u in 0..n {
        for v in u + 1..n {
            if adjacency[u].intersection_len(&adjacency[v]) >= 2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DichotomyRow {
    pub n: usize,
    pub construction: String,
    pub delta: usize,
    pub free: bool,
    /// For non-3-partite `F`: the construction is `F`-free with `δ⁺ = ⌊n/3⌋`.
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DichotomyReport {
    pub three_partite: bool,
    pub partition: Option<Partition>,
    pub rows: Vec<DichotomyRow>,
}

/// Splits `F` by 3-partiteness. Non-3-partite `F` get the balanced complete
/// 3-partite lower bound certified at each `n`; 3-partite `F` get the best
/// `F`-free projective-plane construction that fits, with no claim attached.
pub fn dichotomy_probe(f: &Hypergraph, n_list: &[usize]) -> Result<DichotomyReport> {
    f.require_triples()?;
    let partition = find_k_partition(f, 3)?;
    let three_partite = partition.is_some();
    let mut rows = Vec::new();
    for &n in n_list {
        let row = if three_partite {
            best_k222_type(f, n)?
        } else {
            let g = constructions::balanced_complete_k_partite(n, 3)?;
            let delta = g.min_positive_codegree()?;
            let free = embed::is_free(f, &g)?;
            DichotomyRow {
                n,
                construction: format!("complete 3-partite ({})", join(&constructions::balanced_sizes(n, 3))),
                delta,
                free,
                certified: free && delta == n / 3,
            }
        };
        rows.push(row);
    }
    Ok(DichotomyReport {
        three_partite,
        partition,
        rows,
    })
}

fn best_k222_type(f: &Hypergraph, n: usize) -> Result<DichotomyRow> {
    Ok(match k222_type(f, n)? {
        Some((construction, g)) => DichotomyRow {
            n,
            construction,
            delta: g.min_positive_codegree()?,
            free: true,
            certified: false,
        },
        None => DichotomyRow {
            n,
            construction: "none".to_string(),
            delta: 0,
            free: true,
            certified: false,
        },
    })
}

/// The `F`-free projective-plane tripartite graph with largest `δ⁺` that
/// fits in `n` vertices, padded with isolated vertices.
fn k222_type(f: &Hypergraph, n: usize) -> Result<Option<(String, Hypergraph)>> {
    let mut best: Option<(usize, String, Hypergraph)> = None;
    for q in (2..).filter(|&q| constructions::is_prime(q)) {
        let side = (q * q + q + 1) as usize;
        let x = q as usize + 1;
        if 2 * side + x > n {
            break;
        }
        let g = constructions::k222_tripartite(q, x)?.with_isolated_vertices(n - 2 * side - x)?;
        let delta = g.min_positive_codegree()?;
        if best.as_ref().is_none_or(|b| delta > b.0) && embed::is_free(f, &g)? {
            best = Some((delta, format!("projective-plane tripartite (q={q}, |X|={x})"), g));
        }
    }
    Ok(best.map(|(_, name, g)| (name, g)))
}

fn join(sizes: &[usize]) -> String {
    sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
}

/// A fraction as `(numerator, denominator)`.
pub type Fraction = (i64, i64);

/// Reference bounds on the positive co-degree density: `(lower, upper)`.
pub const DENSITY_BOUNDS: [(&str, Fraction, Fraction); 9] = [
    ("K4-", (1, 3), (1, 3)),
    ("F5", (1, 3), (1, 3)),
    ("F32", (1, 2), (1, 2)),
    ("Fano", (2, 3), (2, 3)),
    ("K4", (1, 2), (2, 3)),
    ("F33", (3, 5), (3, 4)),
    ("C5", (1, 2), (2, 3)),
    ("C5-", (1, 3), (1, 2)),
    ("J4", (1, 2), (2, 3)),
];

pub fn density_bounds(name: &str) -> Option<(Ratio, Ratio)> {
    let canonical = catalog::get(name).ok()?.name;
    DENSITY_BOUNDS
        .iter()
        .find(|(n, _, _)| *n == canonical)
        .map(|&(_, lo, hi)| (Ratio::new(lo.0, lo.1), Ratio::new(hi.0, hi.1)))
}

fn j_index(name: &str) -> Option<usize> {
    name.strip_prefix('J')?.parse().ok()
}

/// The named lower-bound construction for `F` on `n` vertices.
pub fn lower_bound_construction(name: &str, n: usize) -> Result<Option<(String, Hypergraph)>> {
    let canonical = match catalog::get(name) {
        Ok(g) => g.name.to_string(),
        Err(_) if j_index(name).is_some() => name.to_string(),
        Err(e) => return Err(e),
    };
    let partite = |k: usize| -> Result<Option<(String, Hypergraph)>> {
        if n < k {
            return Ok(None);
        }
        let g = constructions::balanced_complete_k_partite(n, k)?;
        Ok(Some((
            format!("complete {k}-partite ({})", join(&constructions::balanced_sizes(n, k))),
            g,
        )))
    };
    match canonical.as_str() {
        "K4-" | "F5" | "C5-" => partite(3),
        "F32" | "C5" => partite(4),
        "F33" => partite(5),
        "Fano" => partite(6),
        "K4" if n >= 3 => {
            let (x, y) = (n - n / 2, n / 2);
            Ok(Some((
                format!("one-way bipartite ({x},{y})"),
                constructions::one_way_bipartite_complete(x, y)?,
            )))
        }
        "K222" => k222_type(&catalog::get("K222")?.graph, n),
        other => match j_index(other) {
            Some(k) if k >= 3 => partite(k),
            _ => Ok(None),
        },
    }
}

/// Best known `(lower, upper)` for co⁺ex(n, F) at `n >= 3`, from the
/// constructions and the exact and upper-bound theorems.
pub fn reference_bounds(name: &str, n: usize) -> Result<(usize, usize)> {
    if n < 3 {
        return Ok((0, 0));
    }
    let f = match catalog::get(name) {
        Ok(g) => g.graph,
        Err(_) => match j_index(name) {
            Some(k) => catalog::j_k(k)?,
            None => return Err(Error::UnknownGraph(name.to_string())),
        },
    };
    let canonical = catalog::get(name).map(|g| g.name.to_string()).unwrap_or(name.to_string());
    let trivial = n - 2;
    let floor = |num: usize, den: usize| num * n / den;
    let upper = match canonical.as_str() {
        "K4-" => n / 3,
        "F5" if n >= 6 => n / 3,
        "F32" if n.is_multiple_of(4) => n / 2,
        "F32" => (n - 1) / 2,
        "Fano" | "K4" | "C5" => floor(2, 3),
        "F33" => floor(3, 4),
        "C5-" => n / 2,
        other => match j_index(other) {
            Some(k) if k >= 3 => (k - 2) * n / (k - 1),
            _ => trivial,
        },
    }
    .min(trivial);
    let mut lower = usize::from(f.edge_count() > 1);
    if let Some((_, g)) = lower_bound_construction(name, n)? {
        if g.has_edges() && embed::is_free(&f, &g)? {
            lower = lower.max(g.min_positive_codegree()?);
        }
    }
    Ok((lower, upper))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub name: String,
    pub construction: String,
    pub delta: usize,
    pub ratio: Ratio,
    pub reference_lower: Ratio,
    pub reference_upper: Ratio,
    /// Freeness by embedding, checked for `n <= FREENESS_CHECK_CAP`.
    pub free: Option<bool>,
}

impl TableRow {
    pub fn within_bounds(&self) -> bool {
        self.ratio <= self.reference_upper
    }
}

pub const FREENESS_CHECK_CAP: usize = 30;

/// One row per catalog graph with density bounds.
pub fn table_emit(n: usize) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for (name, _, _) in DENSITY_BOUNDS {
        let (reference_lower, reference_upper) = density_bounds(name).expect("listed");
        let Some((construction, g)) = lower_bound_construction(name, n)? else {
            continue;
        };
        let delta = g.min_positive_codegree()?;
        let free = if n <= FREENESS_CHECK_CAP {
            Some(embed::is_free(&catalog::get(name)?.graph, &g)?)
        } else {
            None
        };
        rows.push(TableRow {
            name: name.to_string(),
            construction,
            delta,
            ratio: ratio(delta, n),
            reference_lower,
            reference_upper,
            free,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(name: &str) -> Hypergraph {
        catalog::get(name).unwrap().graph
    }

    fn complete(n: usize) -> Hypergraph {
        let mut edges = Vec::new();
        for c in 0..n as Vertex {
            for b in 0..c {
                for a in 0..b {
                    edges.push([a, b, c]);
                }
            }
        }
        Hypergraph::from_triples(n, &edges).unwrap()
    }

    #[test]
    fn edge_bound_examples() {
        let r = edge_bound_check(&named("K222")).unwrap();
        assert_eq!((r.lhs, r.rhs), (8, Ratio::new(4, 3)));
        assert!(r.holds);
        let r = edge_bound_check(&complete(6)).unwrap();
        assert_eq!((r.lhs, r.rhs), (20, Ratio::new(64, 6)));
        let r = edge_bound_check(&Hypergraph::from_triples(3, &[[0, 1, 2]]).unwrap()).unwrap();
        // c = 1/3 on 3 vertices: c³n³/6 = 1/6
        assert_eq!(r.rhs, Ratio::new(1, 6));
        assert!(r.holds);
        assert!(edge_bound_check(&Hypergraph::empty(4).unwrap()).is_err());
    }

    #[test]
    fn independent_set_examples() {
        let k222 = named("K222");
        let class = VertexSet::from_vertices(6, [0, 1]);
        let r = independent_set_bound_check(&k222, &class).unwrap();
        assert_eq!((r.delta, r.bound, r.holds), (2, 4, true));
        let owb = constructions::one_way_bipartite_complete(5, 5).unwrap();
        let y = VertexSet::from_vertices(10, 5..10);
        let r = independent_set_bound_check(&owb, &y).unwrap();
        assert_eq!((r.delta, r.bound), (4, 5));
        let r = independent_set_bound_check(&owb, &VertexSet::empty(10)).unwrap();
        assert_eq!(r.bound, 10);
        let edge = VertexSet::from_vertices(10, [0, 1, 5]);
        assert_eq!(independent_set_bound_check(&owb, &edge), Err(Error::NotIndependent));
    }

    #[test]
    fn greedy_sets_are_maximal() {
        let g = named("Fano");
        for s in greedy_independent_sets(&g) {
            assert!(g.is_independent(&s));
            for v in 0..7 {
                if !s.contains(v) {
                    let mut t = s.clone();
                    t.insert(v);
                    assert!(!g.is_independent(&t));
                }
            }
        }
    }

    #[test]
    fn supersaturation_examples() {
        let r = supersaturation_check_seq(&complete(6)).unwrap();
        assert_eq!(r.epsilon, Ratio::new(1, 3));
        assert_eq!(r.min_per_edge, 9);
        assert_eq!(r.per_edge_bound, Ratio::from_integer(6));
        assert!(r.holds);
        let r = supersaturation_check_seq(&named("K222")).unwrap();
        assert_eq!(r.epsilon, Ratio::from_integer(0));
        assert_eq!(r.total_copies, 0);
        assert!(r.holds);
        let r = supersaturation_check_seq(&complete(7)).unwrap();
        assert_eq!(r.epsilon, Ratio::new(8, 21));
        assert_eq!(r.total_copies, 140);
        assert_eq!(r.copies_bound, Ratio::new(8 * 2401, 21 * 162));
        let owb = constructions::one_way_bipartite_complete(2, 7).unwrap();
        assert!(matches!(supersaturation_check_seq(&owb), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn t_statistic_examples() {
        let r = t_statistic(&named("H6")).unwrap();
        assert_eq!((r.t, r.positive_pairs), (15, 15));
        let r = t_statistic(&Hypergraph::from_triples(3, &[[0, 1, 2]]).unwrap()).unwrap();
        assert_eq!(r.t, 0);
        let r = t_statistic(&named("K222")).unwrap();
        assert_eq!((r.t, r.positive_pairs, r.lower_bound), (12, 12, 12));
        assert!(r.holds);
        assert_eq!(t_statistic(&Hypergraph::empty(3).unwrap()).unwrap().t, 0);
    }

    #[test]
    fn link_examples() {
        let g = constructions::k222_tripartite(2, 3).unwrap();
        for z1 in 0..g.n() as Vertex {
            for z2 in z1 + 1..g.n() as Vertex {
                assert!(link_c4_free(&g, z1, z2).unwrap());
            }
        }
        // K222 on classes {0,1},{2,3},{4,5}: z = 0, 1 see a 4-cycle on 2..6
        assert!(!link_c4_free(&named("K222"), 0, 1).unwrap());
        assert!(link_c4_free(&Hypergraph::empty(4).unwrap(), 0, 1).unwrap());
        assert!(link_c4_free(&g, 2, 2).is_err());
    }

    #[test]
    fn dichotomy_examples() {
        let r = dichotomy_probe(&named("K4-"), &[9]).unwrap();
        assert!(!r.three_partite);
        assert_eq!(r.rows[0].delta, 3);
        assert!(r.rows[0].certified);
        let r = dichotomy_probe(&named("K222"), &[20]).unwrap();
        assert!(r.three_partite);
        assert!(r.rows.iter().all(|row| !row.certified));
        assert_eq!(r.rows[0].delta, 3);
        let edge = Hypergraph::from_triples(3, &[[0, 1, 2]]).unwrap();
        let r = dichotomy_probe(&edge, &[12]).unwrap();
        assert!(r.three_partite);
        assert_eq!(r.rows[0].delta, 0);
    }

    #[test]
    fn table_at_sixty() {
        let rows = table_emit(60).unwrap();
        let get = |name: &str| rows.iter().find(|r| r.name == name).unwrap();
        assert_eq!(get("F32").ratio, Ratio::new(1, 2));
        assert_eq!(get("Fano").ratio, Ratio::new(2, 3));
        assert_eq!(get("F33").ratio, Ratio::new(3, 5));
        assert_eq!(get("K4").ratio, Ratio::new(29, 60));
        for row in rows.iter().filter(|r| r.name != "K4") {
            assert_eq!(row.ratio, row.reference_lower, "{}", row.name);
            assert!(row.free.is_none());
        }
    }

    #[test]
    fn reference_bounds_small() {
        assert_eq!(reference_bounds("K4-", 6).unwrap(), (2, 2));
        assert_eq!(reference_bounds("F5", 5).unwrap(), (1, 3));
        assert_eq!(reference_bounds("F32", 6).unwrap(), (2, 2));
        assert_eq!(reference_bounds("C5-", 6).unwrap(), (2, 3));
        assert_eq!(reference_bounds("J5", 10).unwrap(), (6, 7));
    }
}
