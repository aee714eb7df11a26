//! Exact positive co-degree Turán numbers at small `n`.
//!
//! Graphs on `n <= 7` vertices are edge masks over colex-ordered triples
//! (see [`canon`]). Two exhaustive strategies are available:
//!
//! * **labeled**: a depth-first scan of every labeled edge set on `n <= 6`
//!   vertices, with triple `{0,1,2}` forced in;
//! * **extension**: vertex-by-vertex generation. Deleting a vertex lowers
//!   `δ⁺` by at most one, so every `n`-vertex answer restricts to an
//!   `m`-vertex graph that is empty or has `δ⁺ >= k - (n - m)`. Those are
//!   generated level by level up to isomorphism, and the last vertex is
//!   added by scanning its link.
//!
//! Both prune partial edge sets that contain a copy of `F` and pairs whose
//! co-degree can no longer reach `k`. Work is split into fixed shards that
//! do not depend on the executor, so results and node counts are
//! deterministic.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::{self, canonical_form_of_mask, triple_at, triple_count, triple_index, CanonicalForm};
use crate::exec::Executor;
use crate::{catalog, constructions, Error, Hypergraph, Result};

/// Largest `n` accepted by [`copex_exact`] and [`exists_with_delta`].
pub const SEARCH_CAP: usize = 7;
/// Largest `n` for the labeled strategy.
pub const LABELED_CAP: usize = 6;
/// Largest `n` for [`ff_classification_check`].
pub const CLASSIFICATION_CAP: usize = 6;
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;
/// Witnesses kept in a report; the rest are only counted.
pub const WITNESS_LIMIT: usize = 1000;

const MAX_PAIRS: usize = 21;
const LABELED_PREFIX: usize = 10;
const EXTENSION_PREFIX: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Labeled scan up to [`LABELED_CAP`], extension above.
    #[default]
    Auto,
    Labeled,
    Extension,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of search nodes before giving up.
    pub budget: u64,
    pub method: Method,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: DEFAULT_BUDGET,
            method: Method::Auto,
        }
    }
}

impl SearchConfig {
    fn method_for(&self, n: usize) -> Result<Method> {
        match self.method {
            Method::Auto if n <= LABELED_CAP => Ok(Method::Labeled),
            Method::Auto => Ok(Method::Extension),
            Method::Labeled if n > LABELED_CAP => Err(Error::Infeasible {
                what: "labeled search",
                size: n,
                cap: LABELED_CAP,
            }),
            m => Ok(m),
        }
    }
}

#[inline]
fn pair_id(a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    b * (b - 1) / 2 + a
}

fn mask_bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    core::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(i)
    })
}

/// Minimum positive co-degree of an edge mask; 0 for the empty mask.
fn mask_delta(mask: u64) -> usize {
    let mut cod = [0u8; MAX_PAIRS];
    for t in mask_bits(mask) {
        let [a, b, c] = triple_at(t).map(|v| v as usize);
        cod[pair_id(a, b)] += 1;
        cod[pair_id(a, c)] += 1;
        cod[pair_id(b, c)] += 1;
    }
    cod.iter().filter(|&&d| d > 0).min().map_or(0, |&d| d as usize)
}

/// Labeled copies of `F` among the triples of `K_n`.
struct Space {
    total: usize,
    pairs: Vec<[usize; 3]>,
    copies: Vec<Vec<u64>>,
}

impl Space {
    fn new(f: &Hypergraph, n: usize) -> Result<Self> {
        f.require_triples()?;
        if !f.has_edges() {
            return Err(Error::InvalidParameter("forbidden graph has no edges".to_string()));
        }
        if n > SEARCH_CAP {
            return Err(Error::Infeasible {
                what: "exact search",
                size: n,
                cap: SEARCH_CAP,
            });
        }
        let total = triple_count(n);
        let pairs = (0..total)
            .map(|t| {
                let [a, b, c] = triple_at(t).map(|v| v as usize);
                [pair_id(a, b), pair_id(a, c), pair_id(b, c)]
            })
            .collect();
        let mut copies = vec![Vec::new(); total];
        if f.n() <= n {
            let mut found = BTreeSet::new();
            let mut image = vec![0usize; f.n()];
            collect_copies(f, n, 0, &mut image, 0, &mut found);
            for mask in found {
                for t in mask_bits(mask) {
                    copies[t].push(mask);
                }
            }
        }
        Ok(Space { total, pairs, copies })
    }

    #[inline]
    fn completes_copy(&self, mask: u64, t: usize) -> bool {
        self.copies[t].iter().any(|&c| c & !mask == 0)
    }
}

fn collect_copies(f: &Hypergraph, n: usize, depth: usize, image: &mut [usize], used: u32, found: &mut BTreeSet<u64>) {
    if depth == f.n() {
        let mask = f.edges().iter().fold(0u64, |m, e| {
            m | 1 << triple_index(image[e[0] as usize], image[e[1] as usize], image[e[2] as usize])
        });
        found.insert(mask);
        return;
    }
    for v in 0..n {
        if used >> v & 1 == 0 {
            image[depth] = v;
            collect_copies(f, n, depth + 1, image, used | 1 << v, found);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    First,
    All,
}

struct Dfs<'a> {
    space: &'a Space,
    end: usize,
    k: u8,
    accept_empty: bool,
    mode: Mode,
    cap: u64,
    nodes: u64,
    aborted: bool,
    cur: [u8; MAX_PAIRS],
    rem: [u8; MAX_PAIRS],
    found: Vec<u64>,
}

impl<'a> Dfs<'a> {
    #[allow(clippy::too_many_arguments)]
    fn new(space: &'a Space, start: usize, end: usize, base: u64, k: u8, accept_empty: bool, mode: Mode, cap: u64) -> Self {
        let mut dfs = Dfs {
            space,
            end,
            k,
            accept_empty,
            mode,
            cap,
            nodes: 0,
            aborted: false,
            cur: [0; MAX_PAIRS],
            rem: [0; MAX_PAIRS],
            found: Vec::new(),
        };
        for t in mask_bits(base) {
            for p in space.pairs[t] {
                dfs.cur[p] += 1;
            }
        }
        for t in start..end {
            for p in space.pairs[t] {
                dfs.rem[p] += 1;
            }
        }
        dfs
    }

    fn feasible(&self) -> bool {
        (0..MAX_PAIRS).all(|p| self.cur[p] == 0 || self.cur[p] + self.rem[p] >= self.k)
    }

    fn run(&mut self, t: usize, mask: u64, forced: &[bool]) {
        if self.aborted || (self.mode == Mode::First && !self.found.is_empty()) {
            return;
        }
        if self.nodes >= self.cap {
            self.aborted = true;
            return;
        }
        self.nodes += 1;
        if t == self.end {
            if mask != 0 || self.accept_empty {
                self.found.push(mask);
            }
            return;
        }
        let ps = self.space.pairs[t];
        for p in ps {
            self.rem[p] -= 1;
        }
        let choice = forced.first().copied();
        let rest = forced.get(1..).unwrap_or(&[]);
        if choice != Some(false) {
            let with = mask | 1 << t;
            let fits = ps.iter().all(|&p| self.cur[p] > 0 || 1 + self.rem[p] >= self.k);
            if fits && !self.space.completes_copy(with, t) {
                for p in ps {
                    self.cur[p] += 1;
                }
                self.run(t + 1, with, rest);
                for p in ps {
                    self.cur[p] -= 1;
                }
            }
        }
        if choice != Some(true) && ps.iter().all(|&p| self.cur[p] == 0 || self.cur[p] + self.rem[p] >= self.k) {
            self.run(t + 1, mask, rest);
        }
        for p in ps {
            self.rem[p] += 1;
        }
    }
}

struct Shard {
    nodes: u64,
    aborted: bool,
    forms: Vec<u64>,
}

/// Canonical masks of every `F`-free graph found, in sorted order.
struct Outcome {
    forms: Vec<u64>,
    nodes: u64,
    exhaustive: bool,
}

fn canonical_u64(n: usize, mask: u64) -> u64 {
    canonical_form_of_mask(n, mask as u128).mask() as u64
}

fn bits_of(index: usize, len: usize) -> Vec<bool> {
    (0..len).map(|i| index >> (len - 1 - i) & 1 == 1).collect()
}

/// Folds shard results in shard order, dropping everything from the first
/// shard that ran out of budget onward.
fn merge(shards: Vec<Shard>, n: usize, budget: u64, mode: Mode) -> Outcome {
    let mut forms = BTreeSet::new();
    let mut nodes = 0u64;
    let mut exhaustive = true;
    for shard in shards {
        nodes += shard.nodes;
        if shard.aborted || nodes > budget {
            exhaustive = false;
            nodes = nodes.min(budget);
            break;
        }
        forms.extend(shard.forms.iter().map(|&m| canonical_u64(n, m)));
        if mode == Mode::First && !forms.is_empty() {
            break;
        }
    }
    Outcome {
        forms: forms.into_iter().collect(),
        nodes,
        exhaustive,
    }
}

fn labeled<X: Executor>(space: &Space, n: usize, k: u8, mode: Mode, budget: u64, exec: &X) -> Outcome {
    let prefix = space.total.saturating_sub(1).min(LABELED_PREFIX);
    let shards = exec.map(1 << prefix, |s| {
        let mut forced = vec![true];
        forced.extend(bits_of(s, prefix));
        let mut dfs = Dfs::new(space, 0, space.total, 0, k, false, mode, budget);
        if dfs.feasible() {
            dfs.run(0, 0, &forced);
        }
        Shard {
            nodes: dfs.nodes,
            aborted: dfs.aborted,
            forms: dfs.found,
        }
    });
    merge(shards, n, budget, mode)
}

/// Extends each base graph on `m - 1` vertices by vertex `m - 1`.
#[allow(clippy::too_many_arguments)]
fn extend_level<X: Executor>(
    space: &Space,
    bases: &[u64],
    m: usize,
    k: u8,
    accept_empty: bool,
    mode: Mode,
    budget: u64,
    exec: &X,
) -> Outcome {
    let start = triple_count(m - 1);
    let end = triple_count(m);
    let prefix = (end - start).min(EXTENSION_PREFIX);
    let per_base = 1usize << prefix;
    let shards = exec.map(bases.len() * per_base, |s| {
        let base = bases[s / per_base];
        let forced = bits_of(s % per_base, prefix);
        let mut dfs = Dfs::new(space, start, end, base, k, accept_empty, mode, budget);
        if dfs.feasible() {
            dfs.run(start, base, &forced);
        }
        Shard {
            nodes: dfs.nodes,
            aborted: dfs.aborted,
            forms: dfs.found,
        }
    });
    merge(shards, m, budget, mode)
}

fn extension<X: Executor>(space: &Space, n: usize, k: u8, mode: Mode, budget: u64, exec: &X) -> Outcome {
    let mut bases = vec![0u64];
    let mut nodes = 0u64;
    for m in 1..=n {
        let last = m == n;
        let level_k = (k as usize).saturating_sub(n - m) as u8;
        let level_mode = if last { mode } else { Mode::All };
        let out = extend_level(space, &bases, m, level_k, !last, level_mode, budget - nodes, exec);
        nodes += out.nodes;
        if !out.exhaustive || last {
            return Outcome {
                forms: if last { out.forms } else { Vec::new() },
                nodes,
                exhaustive: out.exhaustive,
            };
        }
        bases = out.forms;
    }
    unreachable!("the last level returns")
}

fn enumerate<X: Executor>(
    space: &Space,
    n: usize,
    k: usize,
    mode: Mode,
    config: &SearchConfig,
    exec: &X,
) -> Result<Outcome> {
    debug_assert!(k >= 1 && k + 2 <= n);
    Ok(match config.method_for(n)? {
        Method::Labeled => labeled(space, n, k as u8, mode, config.budget, exec),
        _ => extension(space, n, k as u8, mode, config.budget, exec),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Existence {
    /// An `F`-free graph with `δ⁺ >= k`, in canonical labelling.
    Witness(Hypergraph),
    /// The whole pruned space was searched without finding one.
    Refuted,
    /// The node budget ran out first.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExistsReport {
    pub outcome: Existence,
    pub nodes_explored: u64,
}

fn empty_graph(n: usize) -> Hypergraph {
    Hypergraph::empty(n).expect("small vertex count")
}

/// Decides whether some `F`-free 3-graph on `n` vertices has minimum
/// positive co-degree at least `k`. The empty graph counts as `δ⁺ = 0`.
pub fn exists_with_delta<X: Executor>(
    n: usize,
    f: &Hypergraph,
    k: usize,
    config: &SearchConfig,
    exec: &X,
) -> Result<ExistsReport> {
    let space = Space::new(f, n)?;
    config.method_for(n)?;
    if k == 0 {
        return Ok(ExistsReport {
            outcome: Existence::Witness(empty_graph(n)),
            nodes_explored: 0,
        });
    }
    if k + 2 > n {
        return Ok(ExistsReport {
            outcome: Existence::Refuted,
            nodes_explored: 0,
        });
    }
    let out = enumerate(&space, n, k, Mode::First, config, exec)?;
    let outcome = match out.forms.first() {
        Some(&mask) => Existence::Witness(canon::graph_from_mask(n, mask as u128)),
        None if out.exhaustive => Existence::Refuted,
        None => Existence::Unknown,
    };
    Ok(ExistsReport {
        outcome,
        nodes_explored: out.nodes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub form: CanonicalForm,
    pub isolated_vertices: usize,
    /// Named constructions isomorphic to this witness.
    pub known_as: Vec<String>,
}

impl Witness {
    pub fn graph(&self) -> Hypergraph {
        self.form.to_hypergraph()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub n: usize,
    pub forbidden: String,
    /// co⁺ex(n, F) when `exhaustive`; otherwise the best value found.
    pub exact_value: usize,
    /// Up to [`WITNESS_LIMIT`] witnesses in canonical order.
    pub witnesses: Vec<Witness>,
    pub omitted_witnesses: usize,
    pub exhaustive: bool,
    pub nodes_explored: u64,
}

/// co⁺ex(n, F) with every extremal graph up to isomorphism.
pub fn copex_exact<X: Executor>(
    name: &str,
    f: &Hypergraph,
    n: usize,
    config: &SearchConfig,
    exec: &X,
) -> Result<SearchReport> {
    let space = Space::new(f, n)?;
    config.method_for(n)?;
    let mut nodes = 0u64;
    let mut exhaustive = true;
    let mut value = 0;
    let mut forms = vec![0u64];
    for k in (1..=n.saturating_sub(2)).rev() {
        let remaining = SearchConfig {
            budget: config.budget - nodes,
            ..*config
        };
        let out = enumerate(&space, n, k, Mode::All, &remaining, exec)?;
        nodes += out.nodes;
        exhaustive &= out.exhaustive;
        if !out.forms.is_empty() {
            value = k;
            forms = out.forms;
            break;
        }
    }
    let known = known_forms(n);
    let omitted = forms.len().saturating_sub(WITNESS_LIMIT);
    let witnesses = forms
        .into_iter()
        .take(WITNESS_LIMIT)
        .map(|mask| {
            let form = canonical_form_of_mask(n, mask as u128);
            let graph = form.to_hypergraph();
            Witness {
                form,
                isolated_vertices: graph.isolated_vertices().len(),
                known_as: known.get(&form).cloned().unwrap_or_default(),
            }
        })
        .collect();
    Ok(SearchReport {
        n,
        forbidden: name.to_string(),
        exact_value: value,
        witnesses,
        omitted_witnesses: omitted,
        exhaustive,
        nodes_explored: nodes,
    })
}

/// Compositions of `n` into `parts` non-negative summands, in lexicographic order.
fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn join(sizes: &[usize]) -> String {
    sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
}

/// Named constructions on exactly `n` vertices (padded with isolated
/// vertices), keyed by canonical form.
pub fn known_forms(n: usize) -> BTreeMap<CanonicalForm, Vec<String>> {
    let mut named: Vec<(String, Hypergraph)> = Vec::new();
    for g in catalog::all() {
        named.push((g.name.to_string(), g.graph));
    }
    for m in 3..=n {
        for k in 3..=m {
            if let Ok(g) = constructions::balanced_complete_k_partite(m, k) {
                let sizes = constructions::balanced_sizes(m, k);
                named.push((format!("complete {k}-partite ({})", join(&sizes)), g));
            }
        }
        for x in 2..m {
            if let Ok(g) = constructions::one_way_bipartite_complete(x, m - x) {
                named.push((format!("one-way bipartite ({x},{})", m - x), g));
            }
        }
    }
    if n >= 6 {
        for sizes in compositions(n - 6, 6) {
            let sizes: [usize; 6] = core::array::from_fn(|i| sizes[i] + 1);
            if let Ok(g) = constructions::h6_blow_up(&sizes) {
                named.push((format!("H6 blow-up ({})", join(&sizes)), g));
            }
        }
    }
    let mut out: BTreeMap<CanonicalForm, Vec<String>> = BTreeMap::new();
    for (name, g) in named {
        if g.n() > n || g.n() > canon::CANON_CAP {
            continue;
        }
        let extra = n - g.n();
        let padded = g.with_isolated_vertices(extra).expect("small vertex count");
        let label = if extra == 0 {
            name
        } else {
            format!("{name} + {extra} isolated")
        };
        let form = canon::canonical_form(&padded).expect("within canonical cap");
        let names = out.entry(form).or_default();
        if !names.contains(&label) {
            names.push(label);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedForm {
    pub form: CanonicalForm,
    pub circle: bool,
    pub h6_blow_up: bool,
}

impl ClassifiedForm {
    pub fn classified(&self) -> bool {
        self.circle || self.h6_blow_up
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub n: usize,
    /// Labeled graphs in which every 4-set spans 0 or 2 edges.
    pub labeled_survivors: u64,
    /// Survivors up to isomorphism.
    pub classes: Vec<ClassifiedForm>,
}

impl ClassificationReport {
    pub fn unclassified(&self) -> usize {
        self.classes.iter().filter(|c| !c.classified()).count()
    }
}

/// Enumerates every labeled 3-graph on `n <= 6` vertices whose 4-sets span
/// 0 or 2 edges and matches each against circle constructions and blow-ups
/// of the (6,3,2)-design.
pub fn ff_classification_check<X: Executor>(n: usize, exec: &X) -> Result<ClassificationReport> {
    if n > CLASSIFICATION_CAP {
        return Err(Error::Infeasible {
            what: "classification check",
            size: n,
            cap: CLASSIFICATION_CAP,
        });
    }
    let total = triple_count(n);
    let mut quads = Vec::new();
    for d in 0..n {
        for c in 0..d {
            for b in 0..c {
                for a in 0..b {
                    quads.push(
                        (1u64 << triple_index(a, b, c))
                            | (1 << triple_index(a, b, d))
                            | (1 << triple_index(a, c, d))
                            | (1 << triple_index(b, c, d)),
                    );
                }
            }
        }
    }
    let chunk_bits = total.min(8);
    let chunk_len = 1u64 << (total - chunk_bits);
    let chunks = exec.map(1 << chunk_bits, |c| {
        let mut survivors = 0u64;
        let mut forms = BTreeSet::new();
        for mask in c as u64 * chunk_len..(c as u64 + 1) * chunk_len {
            if quads.iter().all(|&q| matches!((mask & q).count_ones(), 0 | 2)) {
                survivors += 1;
                forms.insert(canonical_form_of_mask(n, mask as u128));
            }
        }
        (survivors, forms)
    });
    let mut survivors = 0;
    let mut forms = BTreeSet::new();
    for (s, f) in chunks {
        survivors += s;
        forms.extend(f);
    }
    let mut circle = BTreeSet::new();
    for pattern in 0..1u64 << n {
        let g = constructions::circle_construction(&constructions::circle_pattern(n, pattern))?;
        circle.insert(canon::canonical_form(&g)?);
    }
    let mut h6 = BTreeSet::new();
    for sizes in compositions(n, 6) {
        let sizes: [usize; 6] = core::array::from_fn(|i| sizes[i]);
        h6.insert(canon::canonical_form(&constructions::h6_blow_up(&sizes)?)?);
    }
    let classes = forms
        .into_iter()
        .map(|form| ClassifiedForm {
            form,
            circle: circle.contains(&form),
            h6_blow_up: h6.contains(&form),
        })
        .collect();
    Ok(ClassificationReport {
        n,
        labeled_survivors: survivors,
        classes,
    })
}

/// Minimum positive co-degree of a small graph, 0 when it has no edges.
pub fn delta_or_zero(h: &Hypergraph) -> Result<usize> {
    Ok(mask_delta(canon::edge_mask(h)? as u64))
}
