//! The acceptance criteria as runnable checks.
//!
//! Each criterion returns a pass/fail flag with one note per sub-check.
//! Forbidden graphs come from [`Context::lookup`], so a corrupted catalog
//! entry can be injected to confirm that the affected criteria fail.

use std::fmt;
use std::time::{Duration, Instant};

use poscodeg_core::canon::{canonical_form, triple_at, triple_count};
use poscodeg_core::constructions::{self, Angle, MICRO_DEGREES_PER_TURN};
use poscodeg_core::search::{self, SearchConfig, SearchReport};
use poscodeg_core::{catalog, embed, verify, Hypergraph, Result, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::parallel::{default_jobs, Parallel};

pub type Lookup = dyn Fn(&str) -> Result<Hypergraph> + Sync;

pub struct Context {
    /// Source of every forbidden graph.
    pub lookup: Box<Lookup>,
    /// Node budget for the 7-vertex probes, which are informational.
    pub probe_budget: u64,
    pub jobs: usize,
}

impl Default for Context {
    fn default() -> Self {
        Context {
            lookup: Box::new(crate::named_graph),
            probe_budget: search::DEFAULT_BUDGET,
            jobs: default_jobs(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub notes: Vec<String>,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        writeln!(f, "criterion {} {mark} {}", self.id, self.title)?;
        for note in &self.notes {
            writeln!(f, "    {note}")?;
        }
        Ok(())
    }
}

pub const TITLES: [&str; 9] = [
    "exact small-n values by exhaustive search",
    "construction certificates at n = 30",
    "blow-up laws",
    "0-or-2 span profile and classification at n = 6",
    "supersaturation on complete 3-graphs",
    "lemma suites",
    "K222 machinery",
    "monotonicity and Lipschitz steps",
    "determinism across worker counts",
];

/// Sub-check accumulator.
struct Tally {
    passed: bool,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            passed: true,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, note: impl Into<String>) {
        let note = note.into();
        self.passed &= ok;
        self.notes.push(if ok { format!("ok   {note}") } else { format!("FAIL {note}") });
    }

    fn info(&mut self, note: impl Into<String>) {
        self.notes.push(format!("info {}", note.into()));
    }

    /// Records an error from a sub-check as a failure.
    fn attempt<T>(&mut self, what: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, format!("{what}: {e}"));
                None
            }
        }
    }
}

pub fn run_all(ctx: &Context) -> Vec<CriterionResult> {
    (1..=9).map(|id| run_criterion(id, ctx)).collect()
}

pub fn run_criterion(id: u8, ctx: &Context) -> CriterionResult {
    let exec = Parallel::new(ctx.jobs).expect("thread pool");
    let mut t = Tally::new();
    match id {
        1 => exact_values(ctx, &exec, &mut t),
        2 => certificates(ctx, &mut t),
        3 => blow_up_laws(ctx, &mut t),
        4 => span_profile(ctx, &exec, &mut t),
        5 => supersaturation(&exec, &mut t),
        6 => lemma_suites(ctx, &mut t),
        7 => k222_machinery(ctx, &mut t),
        8 => monotonicity(ctx, &exec, &mut t),
        9 => determinism(&mut t),
        _ => t.check(false, format!("no criterion {id}")),
    }
    CriterionResult {
        id,
        title: TITLES.get(id as usize - 1).copied().unwrap_or("unknown"),
        passed: t.passed,
        notes: t.notes,
    }
}

fn exact(ctx: &Context, exec: &Parallel, name: &str, n: usize, budget: u64) -> Result<(SearchReport, Duration)> {
    let f = (ctx.lookup)(name)?;
    let start = Instant::now();
    let config = SearchConfig {
        budget,
        ..SearchConfig::default()
    };
    let r = search::copex_exact(name, &f, n, &config, exec)?;
    Ok((r, start.elapsed()))
}

const SEARCH_LIMIT: Duration = Duration::from_secs(300);

fn has_witness(r: &SearchReport, g: &Hypergraph) -> bool {
    let form = canonical_form(g).expect("small graph");
    r.witnesses.iter().any(|w| w.form == form)
}

fn expect_value(
    ctx: &Context,
    exec: &Parallel,
    t: &mut Tally,
    name: &str,
    n: usize,
    range: (usize, usize),
) -> Option<SearchReport> {
    let (lo, hi) = range;
    let (r, took) = t.attempt(&format!("co+ex({n}, {name})"), exact(ctx, exec, name, n, search::DEFAULT_BUDGET))?;
    let shown = if lo == hi { lo.to_string() } else { format!("[{lo},{hi}]") };
    t.check(
        r.exhaustive && (lo..=hi).contains(&r.exact_value) && took < SEARCH_LIMIT,
        format!(
            "co+ex({n}, {name}) = {} (expected {shown}), exhaustive {}, {} witnesses, {took:.2?}",
            r.exact_value,
            r.exhaustive,
            r.witnesses.len() + r.omitted_witnesses
        ),
    );
    Some(r)
}

fn exact_values(ctx: &Context, exec: &Parallel, t: &mut Tally) {
    for n in 3..=6 {
        let r = expect_value(ctx, exec, t, "K4-", n, (n / 3, n / 3));
        if let (6, Some(r)) = (n, r) {
            let k222 = catalog::get("K222").expect("catalog").graph;
            let h6 = catalog::get("H6").expect("catalog").graph;
            t.check(
                has_witness(&r, &k222) && has_witness(&r, &h6),
                "n = 6 witnesses include K222 and H6",
            );
            for w in &r.witnesses {
                let named = if w.known_as.is_empty() { "unnamed".to_string() } else { w.known_as.join(", ") };
                t.info(format!(
                    "K4- n = 6 witness: {} edges, {} isolated, {named}",
                    w.form.edges().len(),
                    w.isolated_vertices
                ));
            }
        }
    }
    for n in 4..=6 {
        expect_value(ctx, exec, t, "F5", n, (2, 2));
    }
    if let Some(r) = expect_value(ctx, exec, t, "F32", 4, (2, 2)) {
        let k4 = catalog::get("K4").expect("catalog").graph;
        t.check(has_witness(&r, &k4), "K4 is a witness at n = 4");
    }
    for n in 5..=6 {
        expect_value(ctx, exec, t, "F32", n, (2, 2));
    }
    expect_value(ctx, exec, t, "C5-", 6, (2, 3));
}

fn certificates(ctx: &Context, t: &mut Tally) {
    let n = 30;
    let partite = |k| constructions::balanced_complete_k_partite(n, k);
    let cases: Vec<(String, Result<Hypergraph>, usize, Vec<String>)> = vec![
        ("complete 3-partite".into(), partite(3), 10, vec!["K4-".into(), "F5".into()]),
        (
            "one-way bipartite (15,15)".into(),
            constructions::one_way_bipartite_complete(15, 15),
            14,
            vec!["K4".into()],
        ),
        ("complete 6-partite".into(), partite(6), 20, vec!["Fano".into()]),
        ("complete 5-partite".into(), partite(5), 18, vec!["F33".into()]),
        ("complete 4-partite".into(), partite(4), 14, vec!["C5".into()]),
        ("complete 3-partite".into(), partite(3), 10, vec!["C5-".into()]),
    ]
    .into_iter()
    .chain((4..=6).map(|k| {
        (
            format!("complete {k}-partite"),
            partite(k),
            (k - 2) * (n / k),
            vec![format!("J{k}")],
        )
    }))
    .collect();
    for (label, graph, expected, forbidden) in cases {
        let Some(g) = t.attempt(&label, graph) else { continue };
        let start = Instant::now();
        let delta = g.min_positive_codegree();
        let mut free = Vec::new();
        for name in &forbidden {
            let f = (ctx.lookup)(name).and_then(|f| embed::is_free(&f, &g));
            free.push(t.attempt(&format!("{name}-freeness of {label}"), f).unwrap_or(false));
        }
        let took = start.elapsed();
        let delta = delta.unwrap_or(0);
        t.check(
            delta == expected && free.iter().all(|&b| b) && took < Duration::from_secs(1),
            format!(
                "{label}: delta {delta} (expected {expected}), free of {} = {:?}, {took:.2?}",
                forbidden.join("/"),
                free
            ),
        );
    }
}

/// Random 3-graph on `n` vertices with edge probability `p`.
fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Hypergraph {
    let edges: Vec<[Vertex; 3]> = (0..triple_count(n)).filter(|_| rng.gen_bool(p)).map(triple_at).collect();
    Hypergraph::from_triples(n, &edges).expect("valid triples")
}

fn blow_up_laws(ctx: &Context, t: &mut Tally) {
    let edge = Hypergraph::from_triples(3, &[[0, 1, 2]]).expect("edge");
    let bases = [
        ("H6", (ctx.lookup)("H6")),
        ("single edge", Ok(edge)),
        ("K222", (ctx.lookup)("K222")),
    ];
    for (label, h) in bases {
        let Some(h) = t.attempt(label, h) else { continue };
        for m in 1..=3 {
            let scaled = constructions::blow_up(&h, &vec![m; h.n()]).and_then(|b| b.min_positive_codegree());
            let base = h.min_positive_codegree();
            match (scaled, base) {
                (Ok(s), Ok(b)) => t.check(s == m * b, format!("{label} blown up by {m}: delta {s} = {m} x {b}")),
                (Err(e), _) | (_, Err(e)) => t.check(false, format!("{label} blown up by {m}: {e}")),
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for name in ["K4", "F33", "H6"] {
        let Some(f) = t.attempt(name, (ctx.lookup)(name)) else { continue };
        let covered = f.min_codegree().map(|d| d > 0).unwrap_or(false);
        t.check(covered, format!("every pair of {name} lies in an edge"));
        let mut violations = 0;
        let mut tested = 0;
        let mut attempts = 0;
        while tested < 20 && attempts < 10_000 {
            attempts += 1;
            let n = rng.gen_range(4..=7);
            let h = random_graph(&mut rng, n, 0.3);
            if !embed::is_free(&f, &h).unwrap_or(false) {
                continue;
            }
            tested += 1;
            let sizes: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
            let free = constructions::blow_up(&h, &sizes).and_then(|b| embed::is_free(&f, &b));
            if free != Ok(true) {
                violations += 1;
            }
        }
        t.check(
            tested == 20 && violations == 0,
            format!("{name}: {tested} random {name}-free graphs blown up, {violations} violations"),
        );
    }
}

fn random_circle(rng: &mut ChaCha8Rng, n: usize) -> Vec<Angle> {
    loop {
        let angles: Vec<Angle> = (0..n)
            .map(|_| Angle::from_micro_degrees(rng.gen_range(0..MICRO_DEGREES_PER_TURN)))
            .collect();
        if constructions::circle_construction(&angles).is_ok() {
            return angles;
        }
    }
}

fn span_profile(ctx: &Context, exec: &Parallel, t: &mut Tally) {
    if let Some(h6) = t.attempt("H6", (ctx.lookup)("H6")) {
        t.check(embed::span_profile_ok(&h6).unwrap_or(false), "H6 has the 0-or-2 span profile");
        let mut total = 0;
        let mut bad = 0;
        for code in 1..3usize.pow(6) {
            let sizes: Vec<usize> = (0..6).map(|i| code / 3usize.pow(i) % 3).collect();
            total += 1;
            let ok = constructions::blow_up(&h6, &sizes).and_then(|g| embed::span_profile_ok(&g));
            if ok != Ok(true) {
                bad += 1;
            }
        }
        t.check(bad == 0, format!("{total} H6 blow-ups with classes of size <= 2, {bad} violations"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for n in 4..=7 {
        let mut bad = 0;
        for _ in 0..50 {
            let g = constructions::circle_construction(&random_circle(&mut rng, n));
            if g.and_then(|g| embed::span_profile_ok(&g)) != Ok(true) {
                bad += 1;
            }
        }
        t.check(bad == 0, format!("50 circle constructions on {n} points, {bad} violations"));
    }
    if let Some(r) = t.attempt("classification", search::ff_classification_check(6, exec)) {
        let circle = r.classes.iter().filter(|c| c.circle).count();
        let h6 = r.classes.iter().filter(|c| c.h6_blow_up).count();
        t.check(
            r.unclassified() == 0,
            format!(
                "n = 6: {} labeled survivors, {} classes ({circle} circle-type, {h6} H6-blow-up-type), {} unclassified",
                r.labeled_survivors,
                r.classes.len(),
                r.unclassified()
            ),
        );
    }
}

fn complete_graph(n: usize) -> Result<Hypergraph> {
    catalog::complete_multipartite(&vec![1; n])
}

fn supersaturation(exec: &Parallel, t: &mut Tally) {
    for n in 6..=9 {
        let r = complete_graph(n).and_then(|g| verify::supersaturation_check(&g, exec));
        if let Some(r) = t.attempt(&format!("K{n}"), r) {
            t.check(
                r.holds,
                format!(
                    "K{n}: epsilon {}, per edge {} >= {}, copies {} >= {}",
                    r.epsilon, r.min_per_edge, r.per_edge_bound, r.total_copies, r.copies_bound
                ),
            );
        }
    }
}

fn lemma_graphs(ctx: &Context) -> Result<Vec<(String, Hypergraph)>> {
    let mut out = Vec::new();
    for name in catalog::names() {
        out.push((name.to_string(), (ctx.lookup)(name)?));
    }
    for n in 3..=24 {
        for k in 3..=n.min(8) {
            out.push((format!("{k}-partite n={n}"), constructions::balanced_complete_k_partite(n, k)?));
        }
        for x in 2..n {
            out.push((format!("one-way ({x},{})", n - x), constructions::one_way_bipartite_complete(x, n - x)?));
        }
        if n >= 6 {
            let sizes = constructions::balanced_sizes(n, 6);
            let sizes: [usize; 6] = sizes.try_into().expect("six classes");
            out.push((format!("H6 blow-up n={n}"), constructions::h6_blow_up(&sizes)?));
        }
        if n % 2 == 1 {
            out.push((format!("regular {n}-gon"), constructions::circle_construction(&constructions::regular_polygon(n))?));
        }
    }
    for x in 1..=3 {
        out.push((format!("PG(2,2) tripartite x={x}"), constructions::k222_tripartite(2, x)?));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..300 {
        let n = rng.gen_range(3..=9);
        let p = rng.gen_range(0.05..0.9);
        out.push((format!("random #{i}"), random_graph(&mut rng, n, p)));
    }
    Ok(out)
}

fn lemma_suites(ctx: &Context, t: &mut Tally) {
    let Some(graphs) = t.attempt("graph suite", lemma_graphs(ctx)) else { return };
    let nonempty: Vec<_> = graphs.iter().filter(|(_, g)| g.has_edges()).collect();
    let mut failures: [Vec<String>; 4] = Default::default();
    let mut independent_sets = 0;
    for (label, g) in &nonempty {
        if !verify::edge_bound_check(g).map(|r| r.holds).unwrap_or(false) {
            failures[0].push(label.clone());
        }
        for s in verify::greedy_independent_sets(g) {
            independent_sets += 1;
            if !verify::independent_set_bound_check(g, &s).map(|r| r.holds).unwrap_or(false) {
                failures[1].push(label.clone());
            }
        }
        if !verify::t_statistic(g).map(|r| r.holds).unwrap_or(false) {
            failures[2].push(label.clone());
        }
        let sum = g.positive_pairs().map(|p| p.codegree_sum()).unwrap_or(0);
        if sum != 3 * g.edge_count() {
            failures[3].push(label.clone());
        }
    }
    t.check(nonempty.len() >= 500, format!("{} non-empty graphs in the suite", nonempty.len()));
    let names = [
        "edge bound",
        "independent-set bound",
        "T-statistic lower bound",
        "co-degree sum = 3|E|",
    ];
    for (name, bad) in names.iter().zip(&failures) {
        let extra = if *name == "independent-set bound" {
            format!(" over {independent_sets} greedy maximal sets")
        } else {
            String::new()
        };
        t.check(
            bad.is_empty(),
            format!("{name}{extra}: {} violations {:?}", bad.len(), &bad[..bad.len().min(5)]),
        );
    }
}

fn k222_machinery(ctx: &Context, t: &mut Tally) {
    let Some(k222) = t.attempt("K222", (ctx.lookup)("K222")) else { return };
    for (q, x, expected) in [(2u32, 3usize, 3usize), (3, 4, 4)] {
        let Some(g) = t.attempt(&format!("q={q}"), constructions::k222_tripartite(q, x)) else { continue };
        let delta = g.min_positive_codegree().unwrap_or(0);
        let free = embed::is_free(&k222, &g).unwrap_or(false);
        t.check(
            free && delta == expected,
            format!("PG({q}) construction, |X| = {x}, n = {}: delta {delta} (expected {expected}), K222-free {free}", g.n()),
        );
        let n = g.n() as Vertex;
        let mut pairs = 0;
        let mut bad = 0;
        for z1 in 0..n {
            for z2 in z1 + 1..n {
                pairs += 1;
                if verify::link_c4_free(&g, z1, z2) != Ok(true) {
                    bad += 1;
                }
            }
        }
        t.check(bad == 0, format!("PG({q}) construction: all {pairs} link graphs C4-free, {bad} violations"));
    }
}

fn monotonicity(ctx: &Context, exec: &Parallel, t: &mut Tally) {
    for name in ["K4-", "F5", "F32"] {
        let mut values = Vec::new();
        for n in 3..=7 {
            let budget = if n == 7 { ctx.probe_budget } else { search::DEFAULT_BUDGET };
            let Some((r, _)) = t.attempt(&format!("co+ex({n}, {name})"), exact(ctx, exec, name, n, budget)) else {
                return;
            };
            values.push((n, r.exact_value, r.exhaustive));
        }
        let shown: Vec<String> = values
            .iter()
            .map(|(n, v, ex)| format!("{n}:{v}{}", if *ex { "" } else { "?" }))
            .collect();
        let mut ok = true;
        for pair in values.windows(2) {
            let [(n0, a, ea), (_, b, eb)] = [pair[0], pair[1]];
            if !(ea && eb) {
                t.info(format!("{name}: step {n0} -> {} skipped, probe not exhaustive", n0 + 1));
                continue;
            }
            ok &= a <= b && b <= a + 1;
        }
        t.check(ok, format!("{name}: values {}", shown.join(" ")));
    }
}

fn determinism(t: &mut Tally) {
    let run = |jobs: &str| {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let args = ["poscodeg", "search", "-F", "K4-", "--n", "6", "--json", "--jobs", jobs];
        let code = crate::cli::run(args, &mut out, &mut err);
        (code, out)
    };
    let (c1, one) = run("1");
    let (c8, eight) = run("8");
    t.check(c1 == 0 && c8 == 0, format!("exit codes {c1} and {c8}"));
    t.check(
        !one.is_empty() && one == eight,
        format!("--jobs 1 and --jobs 8 reports identical ({} bytes)", one.len()),
    );
}
