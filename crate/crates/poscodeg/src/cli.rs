//! Command-line front end.
//!
//! Exit codes: 0 success (or free / holds), 1 contains a copy or a bound is
//! violated, 2 search not exhaustive, 3 instance beyond a size cap, 64 usage
//! or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use poscodeg_core::search::{self, Existence, Method, SearchConfig};
use poscodeg_core::{
    catalog, constructions, embed, verify, Error as GraphError, Hypergraph, Vertex, VertexSet,
};
use serde_json::{json, Value};

use crate::io::{self, FormatError};
use crate::parallel::{default_jobs, Parallel};
use crate::report::{ratio_string, search_text, DecisionJson, SearchJson};
use crate::{named_graph, reproduce};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FOUND: u8 = 1;
pub const EXIT_NON_EXHAUSTIVE: u8 = 2;
pub const EXIT_INFEASIBLE: u8 = 3;
pub const EXIT_USAGE: u8 = 64;

#[derive(Debug, Parser)]
#[command(name = "poscodeg", version, about = "Minimum positive co-degrees of 3-graphs")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true, env = "POSCODEG_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimum positive co-degree of a graph.
    Delta {
        /// Graph file, or a catalog name.
        #[arg(short = 'H', long = "graph")]
        graph: PathBuf,
    },
    /// Whether a graph is F-free (exit 0) or contains F (exit 1).
    Free(PairArgs),
    /// Number of copies of F.
    Count(PairArgs),
    /// Generate a construction as HG v1 (or JSON).
    Gen {
        #[command(subcommand)]
        what: Gen,
    },
    /// Exact co⁺ex(n, F), or with --k the decision version.
    Search {
        #[arg(short = 'F', long = "forbidden")]
        forbidden: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = search::DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Check one inequality on a graph.
    Verify(VerifyArgs),
    /// Construction lower bounds against the density bounds.
    Table {
        #[arg(long)]
        n: usize,
    },
    /// Named graphs.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run every acceptance criterion.
    Reproduce {
        /// Node budget for the 7-vertex probes.
        #[arg(long, default_value_t = search::DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(Debug, Args)]
struct PairArgs {
    /// Catalog name, `J<k>`, or a graph file.
    #[arg(short = 'F', long = "forbidden")]
    forbidden: String,
    /// Graph file, or a catalog name.
    #[arg(short = 'H', long = "graph")]
    graph: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Labeled,
    Extension,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Labeled => Method::Labeled,
            MethodArg::Extension => Method::Extension,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Gen {
    /// Balanced complete k-partite graph.
    Partite {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Complete multipartite graph with the given class sizes.
    Multipartite {
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
    },
    /// Complete one-way bipartite graph.
    OneWay {
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
    },
    /// Blow-up of the (6,3,2)-design, by class sizes or balanced on n vertices.
    H6Blowup {
        #[arg(long, value_delimiter = ',', conflicts_with = "n")]
        sizes: Option<Vec<usize>>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Blow-up of any graph.
    Blowup {
        #[arg(short = 'G', long = "graph")]
        graph: String,
        #[arg(long, value_delimiter = ',', conflicts_with = "m")]
        sizes: Option<Vec<usize>>,
        /// Uniform class size.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Circle construction from angles in degrees, or the regular n-gon.
    Circle {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "n")]
        angles: Option<Vec<f64>>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// The K222-free tripartite graph over PG(2, q).
    K222 {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        x: usize,
    },
    /// Tripartite graph from a bipartite 2-graph file: vertices below
    /// --split form Y, the rest Z.
    Tripartite {
        #[arg(long)]
        bipartite: PathBuf,
        #[arg(long)]
        split: usize,
        #[arg(long)]
        x: usize,
    },
    /// The star-like graph J_k.
    Jk {
        #[arg(long)]
        k: usize,
    },
    /// Any catalog graph by name.
    #[command(external_subcommand)]
    Named(Vec<String>),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    lemma: Lemma,
    #[arg(short = 'H', long = "graph")]
    graph: Option<PathBuf>,
    #[arg(short = 'F', long = "forbidden")]
    forbidden: Option<String>,
    /// Independent set; every greedy maximal one when omitted.
    #[arg(long, value_delimiter = ',')]
    set: Option<Vec<Vertex>>,
    #[arg(long)]
    z1: Option<Vertex>,
    #[arg(long)]
    z2: Option<Vertex>,
    #[arg(long = "n-list", value_delimiter = ',', default_value = "9,12,15")]
    n_list: Vec<usize>,
    #[arg(long, default_value_t = 6)]
    n: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Lemma {
    EdgeBound,
    IndependentSet,
    Supersaturation,
    TStatistic,
    LinkC4,
    SpanProfile,
    Dichotomy,
    Classification,
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
}

enum Failure {
    Usage(String),
    Infeasible(String),
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        if e.is_infeasible() {
            Failure::Infeasible(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Graph(g) => g.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<u8, Failure>;

struct Session<'a> {
    json: bool,
    jobs: usize,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Session<'_> {
    fn emit(&mut self, value: Value, text: impl FnOnce() -> String) -> std::io::Result<()> {
        if self.json {
            writeln!(self.out, "{}", serde_json::to_string_pretty(&value).expect("JSON value"))
        } else {
            write!(self.out, "{}", text())
        }
    }

    fn executor(&self) -> Result<Parallel, Failure> {
        Parallel::new(self.jobs).map_err(|e| Failure::Usage(format!("cannot start workers: {e}")))
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut session = Session {
        json: cli.json,
        jobs: cli.jobs.unwrap_or_else(default_jobs).max(1),
        out,
        err,
    };
    match dispatch(&mut session, cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(session.err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Infeasible(msg)) => {
            let _ = writeln!(session.err, "infeasible: {msg}");
            EXIT_INFEASIBLE
        }
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::Usage(format!("write failed: {e}"))
}

/// A catalog name, `J<k>`, or a path to a graph file.
fn resolve(spec: &str) -> Result<(String, Hypergraph), Failure> {
    match named_graph(spec) {
        Ok(g) => {
            let name = catalog::get(spec).map(|c| c.name.to_string()).unwrap_or(spec.to_string());
            Ok((name, g))
        }
        Err(_) if Path::new(spec).exists() => Ok((spec.to_string(), io::read_graph(Path::new(spec))?)),
        Err(_) => Err(Failure::Usage(format!("{spec:?} is neither a catalog graph nor a readable file"))),
    }
}

/// A host graph file, or a catalog graph when no such file exists.
fn load_host(path: &Path) -> Result<Hypergraph, Failure> {
    if !path.exists() {
        if let Some(g) = path.to_str().and_then(|name| named_graph(name).ok()) {
            return Ok(g);
        }
    }
    Ok(io::read_graph(path)?)
}

fn dispatch(s: &mut Session, command: Command) -> Outcome {
    match command {
        Command::Delta { graph } => delta(s, &graph),
        Command::Free(args) => free(s, &args),
        Command::Count(args) => count(s, &args),
        Command::Gen { what } => generate(s, what),
        Command::Search {
            forbidden,
            n,
            k,
            budget,
            method,
        } => {
            let config = SearchConfig {
                budget,
                method: method.into(),
            };
            match k {
                Some(k) => decide(s, &forbidden, n, k, &config),
                None => exact(s, &forbidden, n, &config),
            }
        }
        Command::Verify(args) => verify_lemma(s, &args),
        Command::Table { n } => table(s, n),
        Command::Catalog { action } => catalog_cmd(s, action),
        Command::Reproduce { budget } => reproduce_cmd(s, budget),
    }
}

fn delta(s: &mut Session, path: &Path) -> Outcome {
    let h = load_host(path)?;
    let d = h.min_positive_codegree()?;
    let value = json!({
        "n": h.n(),
        "r": h.r(),
        "edges": h.edge_count(),
        "min_positive_codegree": d,
        "max_codegree": h.max_codegree(),
        "min_codegree": h.min_codegree()?,
    });
    s.emit(value, || format!("{d}\n")).map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn free(s: &mut Session, args: &PairArgs) -> Outcome {
    let (name, f) = resolve(&args.forbidden)?;
    let h = load_host(&args.graph)?;
    let found = embed::contains_copy(&f, &h)?;
    let map = found.as_ref().map(|e| e.map().to_vec());
    let value = json!({ "forbidden": name, "free": map.is_none(), "embedding": map });
    s.emit(value, || match &map {
        None => "free\n".to_string(),
        Some(m) => {
            let pairs: Vec<String> = m.iter().enumerate().map(|(i, v)| format!("{i}->{v}")).collect();
            format!("contains\nmap {}\n", pairs.join(" "))
        }
    })
    .map_err(io_failure)?;
    Ok(if map.is_none() { EXIT_OK } else { EXIT_FOUND })
}

fn count(s: &mut Session, args: &PairArgs) -> Outcome {
    let (name, f) = resolve(&args.forbidden)?;
    let h = load_host(&args.graph)?;
    let exec = s.executor()?;
    let injections = embed::count_injections_with(&f, &h, &exec)?;
    let automorphisms = embed::automorphism_count(&f)?;
    let copies = embed::count_copies_with(&f, &h, &exec)?;
    let value = json!({
        "forbidden": name,
        "copies": copies,
        "injections": injections,
        "automorphisms": automorphisms,
    });
    s.emit(value, || format!("{copies}\n")).map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn generate(s: &mut Session, what: Gen) -> Outcome {
    let h = match what {
        Gen::Partite { n, k } => constructions::balanced_complete_k_partite(n, k)?,
        Gen::Multipartite { sizes } => catalog::complete_multipartite(&sizes)?,
        Gen::OneWay { x, y } => constructions::one_way_bipartite_complete(x, y)?,
        Gen::H6Blowup { sizes, n } => {
            let sizes = match (sizes, n) {
                (Some(sizes), _) => sizes,
                (None, Some(n)) => constructions::balanced_sizes(n, 6),
                (None, None) => return Err(usage("give --sizes or --n")),
            };
            let sizes: [usize; 6] = sizes.try_into().map_err(|_| usage("--sizes needs six values"))?;
            constructions::h6_blow_up(&sizes)?
        }
        Gen::Blowup { graph, sizes, m } => {
            let (_, g) = resolve(&graph)?;
            let sizes = match (sizes, m) {
                (Some(sizes), _) => sizes,
                (None, Some(m)) => vec![m; g.n()],
                (None, None) => return Err(usage("give --sizes or --m")),
            };
            constructions::blow_up(&g, &sizes)?
        }
        Gen::Circle { angles, n } => {
            let points = match (angles, n) {
                (Some(a), _) => a.into_iter().map(constructions::Angle::from_degrees).collect(),
                (None, Some(n)) => constructions::regular_polygon(n),
                (None, None) => return Err(usage("give --angles or --n")),
            };
            constructions::circle_construction(&points)?
        }
        Gen::K222 { q, x } => constructions::k222_tripartite(q, x)?,
        Gen::Tripartite { bipartite, split, x } => {
            let b = io::read_graph(&bipartite)?;
            if b.r() != 2 || split > b.n() {
                return Err(usage("--bipartite needs a 2-graph and --split at most its vertex count"));
            }
            let split_at = split as Vertex;
            let mut pairs = Vec::new();
            for e in b.edges() {
                let (u, v) = (e[0], e[1]);
                if (u < split_at) == (v < split_at) {
                    return Err(usage(format!("edge {u} {v} does not cross the split")));
                }
                pairs.push((u.min(v), u.max(v) - split_at));
            }
            constructions::tripartite_from_bipartite(x, split, b.n() - split, &pairs)?
        }
        Gen::Jk { k } => catalog::j_k(k)?,
        Gen::Named(words) => {
            let [name] = &words[..] else {
                return Err(usage(format!("unexpected arguments {:?}", &words[1..])));
            };
            named_graph(name)?
        }
    };
    write_graph(s, &h)
}

fn write_graph(s: &mut Session, h: &Hypergraph) -> Outcome {
    let text = if s.json { io::write_json(h) + "\n" } else { io::write_hg(h) };
    s.out.write_all(text.as_bytes()).map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn decide(s: &mut Session, spec: &str, n: usize, k: usize, config: &SearchConfig) -> Outcome {
    let (name, f) = resolve(spec)?;
    let exec = s.executor()?;
    let start = Instant::now();
    let r = search::exists_with_delta(n, &f, k, config, &exec)?;
    let elapsed = start.elapsed();
    let value = serde_json::to_value(DecisionJson::new(n, &name, k, &r)).expect("serialisable");
    s.emit(value, || match &r.outcome {
        Existence::Witness(h) => format!("witness\n{}", io::write_hg(h)),
        Existence::Refuted => "refuted\n".to_string(),
        Existence::Unknown => "unknown (budget exhausted)\n".to_string(),
    })
    .map_err(io_failure)?;
    if !s.json {
        let _ = writeln!(s.err, "nodes {} wall time {:.3?}", r.nodes_explored, elapsed);
    }
    Ok(match r.outcome {
        Existence::Unknown => EXIT_NON_EXHAUSTIVE,
        _ => EXIT_OK,
    })
}

fn exact(s: &mut Session, spec: &str, n: usize, config: &SearchConfig) -> Outcome {
    let (name, f) = resolve(spec)?;
    let exec = s.executor()?;
    let start = Instant::now();
    let r = search::copex_exact(&name, &f, n, config, &exec)?;
    let elapsed = start.elapsed();
    let value = serde_json::to_value(SearchJson::from(&r)).expect("serialisable");
    s.emit(value, || search_text(&r)).map_err(io_failure)?;
    if !s.json {
        let _ = writeln!(s.err, "wall time {elapsed:.3?}");
    }
    Ok(if r.exhaustive { EXIT_OK } else { EXIT_NON_EXHAUSTIVE })
}

fn holds_code(holds: bool) -> u8 {
    if holds {
        EXIT_OK
    } else {
        EXIT_FOUND
    }
}

fn need_graph(args: &VerifyArgs) -> Result<Hypergraph, Failure> {
    let path = args.graph.as_ref().ok_or_else(|| usage("this check needs -H <graph>"))?;
    load_host(path)
}

fn verify_lemma(s: &mut Session, args: &VerifyArgs) -> Outcome {
    match args.lemma {
        Lemma::EdgeBound => {
            let h = need_graph(args)?;
            let r = verify::edge_bound_check(&h)?;
            let value = json!({
                "lemma": "edge-bound", "n": r.n, "delta": r.delta, "c": ratio_string(r.c),
                "lhs": r.lhs, "rhs": ratio_string(r.rhs), "holds": r.holds,
            });
            s.emit(value, || {
                format!("|E| = {} >= {} ({})\n", r.lhs, ratio_string(r.rhs), verdict(r.holds))
            })
            .map_err(io_failure)?;
            Ok(holds_code(r.holds))
        }
        Lemma::IndependentSet => {
            let h = need_graph(args)?;
            let sets = match &args.set {
                Some(vs) => {
                    if let Some(&v) = vs.iter().find(|&&v| v as usize >= h.n()) {
                        return Err(usage(format!("vertex {v} is outside the graph")));
                    }
                    vec![VertexSet::from_vertices(h.n(), vs.iter().copied())]
                }
                None => verify::greedy_independent_sets(&h),
            };
            let mut rows = Vec::new();
            let mut holds = true;
            for set in &sets {
                let r = verify::independent_set_bound_check(&h, set)?;
                holds &= r.holds;
                rows.push((set.to_vec(), r));
            }
            let value = json!({
                "lemma": "independent-set",
                "holds": holds,
                "checks": rows.iter().map(|(set, r)| json!({
                    "set": set, "delta": r.delta, "bound": r.bound, "holds": r.holds,
                })).collect::<Vec<_>>(),
            });
            s.emit(value, || {
                let mut text = String::new();
                for (set, r) in &rows {
                    text += &format!("S = {:?}: delta {} <= {} ({})\n", set, r.delta, r.bound, verdict(r.holds));
                }
                text
            })
            .map_err(io_failure)?;
            Ok(holds_code(holds))
        }
        Lemma::Supersaturation => {
            let h = need_graph(args)?;
            let exec = s.executor()?;
            match verify::supersaturation_check(&h, &exec) {
                Ok(r) => {
                    let value = json!({
                        "lemma": "supersaturation", "applicable": true, "n": r.n, "delta": r.delta,
                        "epsilon": ratio_string(r.epsilon), "min_per_edge": r.min_per_edge,
                        "per_edge_bound": ratio_string(r.per_edge_bound), "total_copies": r.total_copies,
                        "copies_bound": ratio_string(r.copies_bound), "holds": r.holds,
                    });
                    s.emit(value, || {
                        format!(
                            "epsilon {}\nper edge {} >= {}\ncopies {} >= {}\n{}\n",
                            ratio_string(r.epsilon),
                            r.min_per_edge,
                            ratio_string(r.per_edge_bound),
                            r.total_copies,
                            ratio_string(r.copies_bound),
                            verdict(r.holds)
                        )
                    })
                    .map_err(io_failure)?;
                    Ok(holds_code(r.holds))
                }
                Err(GraphError::NotApplicable(reason)) => {
                    let value = json!({ "lemma": "supersaturation", "applicable": false, "reason": reason, "holds": null });
                    s.emit(value, || format!("not applicable: {reason}\n")).map_err(io_failure)?;
                    Ok(EXIT_OK)
                }
                Err(e) => Err(e.into()),
            }
        }
        Lemma::TStatistic => {
            let h = need_graph(args)?;
            let r = verify::t_statistic(&h)?;
            let value = json!({
                "lemma": "t-statistic", "t": r.t, "positive_pairs": r.positive_pairs, "delta": r.delta,
                "lower_bound": r.lower_bound, "holds": r.holds,
            });
            s.emit(value, || format!("T = {} >= {} ({})\n", r.t, r.lower_bound, verdict(r.holds)))
                .map_err(io_failure)?;
            Ok(holds_code(r.holds))
        }
        Lemma::LinkC4 => {
            let h = need_graph(args)?;
            let pairs: Vec<(Vertex, Vertex)> = match (args.z1, args.z2) {
                (Some(a), Some(b)) => vec![(a, b)],
                (None, None) => {
                    let n = h.n() as Vertex;
                    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
                }
                _ => return Err(usage("give both --z1 and --z2, or neither")),
            };
            let mut bad = Vec::new();
            for &(a, b) in &pairs {
                if !verify::link_c4_free(&h, a, b)? {
                    bad.push([a, b]);
                }
            }
            let value = json!({ "lemma": "link-c4", "pairs_checked": pairs.len(), "violations": bad, "holds": bad.is_empty() });
            s.emit(value, || {
                format!("{} pairs, {} with a 4-cycle ({})\n", pairs.len(), bad.len(), verdict(bad.is_empty()))
            })
            .map_err(io_failure)?;
            Ok(holds_code(bad.is_empty()))
        }
        Lemma::SpanProfile => {
            let h = need_graph(args)?;
            let p = embed::span_profile(&h)?;
            let violation = p.violation.map(|(set, edges)| json!({ "set": set, "edges": edges }));
            let value = json!({ "lemma": "span-profile", "holds": p.ok(), "violation": violation });
            s.emit(value, || match p.violation {
                None => "every 4-set spans 0 or 2 edges\n".to_string(),
                Some((set, edges)) => format!("{set:?} spans {edges} edges\n"),
            })
            .map_err(io_failure)?;
            Ok(holds_code(p.ok()))
        }
        Lemma::Dichotomy => {
            let spec = args.forbidden.as_deref().ok_or_else(|| usage("dichotomy needs -F"))?;
            let (name, f) = resolve(spec)?;
            let r = verify::dichotomy_probe(&f, &args.n_list)?;
            let holds = r.three_partite || r.rows.iter().all(|row| row.certified);
            let value = json!({
                "lemma": "dichotomy", "forbidden": name, "three_partite": r.three_partite,
                "partition": r.partition.as_ref().map(|p| p.classes().to_vec()),
                "rows": r.rows.iter().map(|row| json!({
                    "n": row.n, "construction": row.construction, "delta": row.delta,
                    "free": row.free, "certified": row.certified,
                })).collect::<Vec<_>>(),
                "holds": holds,
            });
            s.emit(value, || {
                let mut text = format!(
                    "{name} is {}3-partite\n",
                    if r.three_partite { "" } else { "not " }
                );
                for row in &r.rows {
                    text += &format!(
                        "n {}: {} delta {} free {}{}\n",
                        row.n,
                        row.construction,
                        row.delta,
                        row.free,
                        if row.certified { " certified" } else { "" }
                    );
                }
                text
            })
            .map_err(io_failure)?;
            Ok(holds_code(holds))
        }
        Lemma::Classification => {
            let exec = s.executor()?;
            let r = search::ff_classification_check(args.n, &exec)?;
            let unclassified = r.unclassified();
            let value = json!({
                "lemma": "classification", "n": r.n, "labeled_survivors": r.labeled_survivors,
                "classes": r.classes.iter().map(|c| json!({
                    "edges": c.form.edges(), "circle": c.circle, "h6_blow_up": c.h6_blow_up,
                })).collect::<Vec<_>>(),
                "unclassified": unclassified, "holds": unclassified == 0,
            });
            s.emit(value, || {
                format!(
                    "{} labeled survivors, {} up to isomorphism, {} unclassified\n",
                    r.labeled_survivors,
                    r.classes.len(),
                    unclassified
                )
            })
            .map_err(io_failure)?;
            Ok(holds_code(unclassified == 0))
        }
    }
}

fn verdict(holds: bool) -> &'static str {
    if holds {
        "holds"
    } else {
        "VIOLATED"
    }
}

fn table(s: &mut Session, n: usize) -> Outcome {
    let rows = verify::table_emit(n)?;
    let all_free = rows.iter().all(|r| r.free != Some(false));
    let value = json!({
        "n": n,
        "rows": rows.iter().map(|r| json!({
            "forbidden": r.name, "construction": r.construction, "delta": r.delta,
            "ratio": ratio_string(r.ratio), "lower": ratio_string(r.reference_lower),
            "upper": ratio_string(r.reference_upper), "free": r.free,
        })).collect::<Vec<_>>(),
    });
    s.emit(value, || {
        let mut text = format!(
            "{:<6} {:<30} {:>6} {:>8} {:>6} {:>6} {:>6}\n",
            "F", "construction", "delta", "ratio", "lower", "upper", "free"
        );
        for r in &rows {
            let free = r.free.map_or("-".to_string(), |f| f.to_string());
            text += &format!(
                "{:<6} {:<30} {:>6} {:>8} {:>6} {:>6} {:>6}\n",
                r.name,
                r.construction,
                r.delta,
                ratio_string(r.ratio),
                ratio_string(r.reference_lower),
                ratio_string(r.reference_upper),
                free
            );
        }
        text
    })
    .map_err(io_failure)?;
    Ok(holds_code(all_free))
}

fn catalog_cmd(s: &mut Session, action: CatalogAction) -> Outcome {
    match action {
        CatalogAction::List => {
            let all = catalog::all();
            let value = json!(all
                .iter()
                .map(|g| json!({ "name": g.name, "n": g.graph.n(), "m": g.graph.edge_count(), "source": g.source }))
                .collect::<Vec<_>>());
            s.emit(value, || {
                all.iter()
                    .map(|g| format!("{} {} {}\n", g.name, g.graph.n(), g.graph.edge_count()))
                    .collect()
            })
            .map_err(io_failure)?;
            Ok(EXIT_OK)
        }
        CatalogAction::Show { name } => {
            let g = named_graph(&name)?;
            write_graph(s, &g)
        }
    }
}

fn reproduce_cmd(s: &mut Session, budget: u64) -> Outcome {
    let ctx = reproduce::Context {
        probe_budget: budget,
        jobs: s.jobs,
        ..reproduce::Context::default()
    };
    let results = reproduce::run_all(&ctx);
    let passed = results.iter().all(|r| r.passed);
    let value = json!(results
        .iter()
        .map(|r| json!({ "criterion": r.id, "title": r.title, "passed": r.passed, "notes": r.notes }))
        .collect::<Vec<_>>());
    s.emit(value, || results.iter().map(|r| r.to_string()).collect())
        .map_err(io_failure)?;
    Ok(holds_code(passed))
}
