//! Command-line front end. [`run`] is the whole program minus process
//! plumbing, so tests drive it with in-memory buffers.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use crate::eccentricity::all_eccentricities;
use crate::farpairs::{far_sets_from_distances, FarApartStore, FarPair};
use crate::graph::{
    generators, largest_biconnected_component, parse_edge_list, write_edge_list, LabeledGraph,
};
use crate::hyperbolicity::{self, DeltaDoubled, HyperbolicityReport, Options};
use crate::oracle;
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERRUPTED: i32 = 3;

const GEN_HELP: &str = "Generator spec `kind:params[,seed=S]`:
  path:K  cycle:K  clique:K  grid:P,Q  tree:N  block:N
  gridd:P,Q,FRACTION   grid with a fraction of edges removed
  random:N,M           connected graph with exactly M edges
Seeded kinds (gridd, random, tree, block) default to seed=0.";

#[derive(Debug, Parser)]
#[command(
    name = "farapart",
    version,
    about = "Far-apart pairs and Gromov hyperbolicity of unweighted graphs",
    after_help = GEN_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hyperbolicity of the largest biconnected component.
    Hyp(HypArgs),
    /// Far-apart pairs by non-increasing distance.
    Farpairs(FarpairsArgs),
    /// Eccentricities, diameter and radius.
    Ecc(EccArgs),
    /// Write a generated graph as an edge list.
    Gen(GenArgs),
    /// Brute-force reference computations for small graphs.
    Oracle(OracleArgs),
    /// Far-pair and scanned-pair percentages for one graph.
    Stats(StatsArgs),
}

#[derive(Debug, Args)]
struct Input {
    /// Edge list file: one `u v` pair per line, `#` or `%` comments.
    file: Option<PathBuf>,
    /// Generate the graph instead of reading it.
    #[arg(long = "gen", value_name = "SPEC", conflicts_with = "file")]
    generator: Option<String>,
}

#[derive(Debug, Args)]
struct HypArgs {
    #[command(flatten)]
    input: Input,
    /// Number of BFS vectors kept in the cache (0 disables it).
    #[arg(long, default_value_t = 1000)]
    cache_size: usize,
    /// Start from δL = 0 instead of the heuristic lower bound.
    #[arg(long)]
    no_heuristic: bool,
    /// Use plain BFS instead of pruned BFS.
    #[arg(long)]
    no_prune: bool,
    /// Maximum over every biconnected component instead of the largest.
    #[arg(long)]
    all_components: bool,
    /// Stop after this many seconds and print a bracket.
    #[arg(long, value_name = "SECONDS")]
    time_budget: Option<f64>,
    /// Print counters.
    #[arg(long)]
    stats: bool,
}

#[derive(Debug, Args)]
struct FarpairsArgs {
    #[command(flatten)]
    input: Input,
    /// Restrict to the largest biconnected component.
    #[arg(long)]
    largest_bcc: bool,
    /// Print only the number of pairs.
    #[arg(long, conflicts_with = "histogram")]
    count: bool,
    /// Print `distance,count` CSV.
    #[arg(long)]
    histogram: bool,
    /// Hyperbolicity; adds a column marking distances above 2δ.
    #[arg(long, requires = "histogram")]
    delta: Option<String>,
    /// Only pairs at distance at least this.
    #[arg(long, value_name = "D")]
    min_distance: Option<u32>,
}

#[derive(Debug, Args)]
struct EccArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    largest_bcc: bool,
    /// Also print `vertex ecc` for every vertex.
    #[arg(long)]
    values: bool,
}

#[derive(Debug, Args)]
struct GenArgs {
    /// Generator spec, see `--help`.
    spec: String,
    /// Write here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    largest_bcc: bool,
    /// Refuse hyperbolicity on graphs larger than this.
    #[arg(long, default_value_t = oracle::DEFAULT_ORACLE_LIMIT)]
    max_n: usize,
    /// Print far-apart pairs instead of hyperbolicity.
    #[arg(long)]
    farpairs: bool,
}

#[derive(Debug, Args)]
struct StatsArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    cache_size: Option<usize>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Generator(_) => Failure::Usage(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
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
    let result = match cli.command {
        Command::Hyp(a) => hyp(a, out),
        Command::Farpairs(a) => farpairs(a, out),
        Command::Ecc(a) => ecc(a, out),
        Command::Gen(a) => gen(a, out),
        Command::Oracle(a) => oracle_cmd(a, out),
        Command::Stats(a) => stats(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

/// Builds a graph from `kind:params[,seed=S]`.
pub fn parse_generator(spec: &str) -> crate::Result<LabeledGraph> {
    let bad = |msg: &str| Error::Generator(format!("{msg} in `{spec}`"));
    let (kind, rest) = spec.split_once(':').ok_or_else(|| bad("missing `:`"))?;
    let mut seed = 0u64;
    let mut params = Vec::new();
    for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item.strip_prefix("seed=") {
            Some(s) => seed = s.parse().map_err(|_| bad("invalid seed"))?,
            None => params.push(item),
        }
    }
    let want = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(bad(&format!("`{kind}` takes {k} parameter(s)")))
        }
    };
    let int = |i: usize| -> crate::Result<usize> {
        params[i].parse().map_err(|_| bad("invalid integer"))
    };
    let graph = match kind {
        "path" | "cycle" | "clique" | "tree" | "block" => {
            want(1)?;
            let k = int(0)?;
            match kind {
                "path" => generators::path(k),
                "cycle" => generators::cycle(k),
                "clique" => generators::clique(k),
                "tree" => generators::random_tree(k, seed),
                _ => generators::random_block_graph(k, seed),
            }?
        }
        "grid" => {
            want(2)?;
            generators::grid(int(0)?, int(1)?)?
        }
        "gridd" => {
            want(3)?;
            let fraction: f64 = params[2].parse().map_err(|_| bad("invalid fraction"))?;
            generators::grid_with_deletions(int(0)?, int(1)?, fraction, seed)?
        }
        "random" => {
            want(2)?;
            generators::random_connected(int(0)?, int(1)?, seed)?
        }
        _ => return Err(bad("unknown generator kind")),
    };
    Ok(LabeledGraph::from_ids(graph))
}

fn load(input: &Input) -> std::result::Result<LabeledGraph, Failure> {
    match (&input.file, &input.generator) {
        (Some(path), None) => {
            let file =
                File::open(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            parse_edge_list(BufReader::new(file)).map_err(|e| match e {
                Error::Io(_) | Error::Parse { .. } | Error::EmptyInput => {
                    Failure::Input(format!("{}: {e}", path.display()))
                }
                other => other.into(),
            })
        }
        (None, Some(spec)) => Ok(parse_generator(spec)?),
        _ => Err(Failure::Usage(
            "give an edge list file or --gen SPEC".into(),
        )),
    }
}

fn largest_bcc(lg: LabeledGraph) -> std::result::Result<LabeledGraph, Failure> {
    let (sub, map) = largest_biconnected_component(&lg.graph)?;
    Ok(lg.relabel(sub, &map))
}

fn load_connected(input: &Input, bcc: bool) -> std::result::Result<LabeledGraph, Failure> {
    let lg = load(input)?;
    if bcc {
        return largest_bcc(lg);
    }
    if !lg.graph.is_connected() {
        return Err(Failure::Input(
            "graph is disconnected; use --largest-bcc to restrict it".into(),
        ));
    }
    Ok(lg)
}

fn parse_delta(text: &str) -> std::result::Result<DeltaDoubled, Failure> {
    let bad = || Failure::Usage(format!("--delta must be a multiple of 0.5, got `{text}`"));
    let v: f64 = text.parse().map_err(|_| bad())?;
    let doubled = v * 2.0;
    if !(0.0..=f64::from(u32::MAX)).contains(&doubled) || doubled.fract() != 0.0 {
        return Err(bad());
    }
    Ok(DeltaDoubled(doubled as u32))
}

fn write_witness(out: &mut dyn Write, lg: &LabeledGraph, w: Option<[u32; 4]>) -> io::Result<()> {
    if let Some(w) = w {
        let labels: Vec<&str> = w.iter().map(|&v| lg.label(v)).collect();
        writeln!(out, "witness={}", labels.join(" "))?;
    }
    Ok(())
}

fn hyp(a: HypArgs, out: &mut dyn Write) -> Outcome {
    let time_budget = match a.time_budget {
        Some(s) if !(s.is_finite() && s >= 0.0) => {
            return Err(Failure::Usage("--time-budget must be nonnegative".into()))
        }
        s => s.map(Duration::from_secs_f64),
    };
    let opts = Options {
        cache_capacity: a.cache_size,
        use_heuristic: !a.no_heuristic,
        use_pruning: !a.no_prune,
        time_budget,
    };
    let lg = load(&a.input)?;
    let (lg, report) = if a.all_components {
        let r = hyperbolicity::run_all_components(&lg.graph, &opts)?;
        (lg, r)
    } else {
        let lg = largest_bcc(lg)?;
        let r = hyperbolicity::run(&lg.graph, &opts)?;
        (lg, r)
    };
    write_report(out, &lg, &report, a.stats)?;
    Ok(if report.interrupted.is_some() {
        EXIT_INTERRUPTED
    } else {
        EXIT_OK
    })
}

fn write_report(
    out: &mut dyn Write,
    lg: &LabeledGraph,
    r: &HyperbolicityReport,
    counters: bool,
) -> io::Result<()> {
    match r.interrupted {
        Some((lo, hi)) => writeln!(out, "delta=[{lo}, {hi}]")?,
        None => writeln!(out, "delta={}", r.delta2)?,
    }
    write_witness(out, lg, r.witness)?;
    writeln!(out, "n={}", lg.graph.num_vertices())?;
    writeln!(out, "m={}", lg.graph.num_edges())?;
    if counters {
        let c = &r.counters;
        writeln!(out, "heuristic={}", r.heuristic)?;
        writeln!(out, "pairs_emitted={}", c.pairs_emitted)?;
        writeln!(out, "pairs_evaluated={}", c.pairs_evaluated)?;
        writeln!(out, "tuples_tested={}", c.tuples_tested)?;
        writeln!(out, "bfs_runs={}", c.bfs_runs)?;
        writeln!(out, "cache_hits={}", c.cache_hits)?;
        writeln!(out, "cache_misses={}", c.cache_misses)?;
        writeln!(out, "peak_store_entries={}", r.peak_store_entries)?;
        writeln!(out, "peak_cache_bytes={}", r.peak_cache_bytes)?;
    }
    Ok(())
}

/// Far-apart pairs with distance at least `min_distance`, seeding the store
/// with the eccentricity BFSes.
fn enumerate(lg: &LabeledGraph, min_distance: u32) -> crate::Result<Vec<FarPair>> {
    let g = &lg.graph;
    let mut seeds = Vec::new();
    let ecc = all_eccentricities(g, |dv| {
        seeds.push(far_sets_from_distances(g, dv).expect("complete BFS"));
    })?;
    if min_distance > ecc.diameter() {
        return Ok(Vec::new());
    }
    let mut store = FarApartStore::init(g, &ecc, seeds);
    store.set_floor(min_distance.saturating_sub(1))?;
    Ok(store.collect())
}

fn farpairs(a: FarpairsArgs, out: &mut dyn Write) -> Outcome {
    let threshold = a.delta.as_deref().map(parse_delta).transpose()?;
    let lg = load_connected(&a.input, a.largest_bcc)?;
    let pairs = enumerate(&lg, a.min_distance.unwrap_or(0))?;
    if a.count {
        writeln!(out, "{}", pairs.len())?;
    } else if a.histogram {
        let mut rows: Vec<(u32, usize)> = Vec::new();
        for p in &pairs {
            match rows.last_mut() {
                Some((d, c)) if *d == p.d => *c += 1,
                _ => rows.push((p.d, 1)),
            }
        }
        rows.reverse();
        match threshold {
            Some(t) => {
                writeln!(out, "distance,count,evaluated")?;
                for (d, c) in rows {
                    writeln!(out, "{d},{c},{}", u8::from(d > t.0))?;
                }
            }
            None => {
                writeln!(out, "distance,count")?;
                for (d, c) in rows {
                    writeln!(out, "{d},{c}")?;
                }
            }
        }
    } else {
        for p in &pairs {
            writeln!(out, "{} {} {}", lg.label(p.u), lg.label(p.v), p.d)?;
        }
    }
    Ok(EXIT_OK)
}

fn ecc(a: EccArgs, out: &mut dyn Write) -> Outcome {
    let lg = load_connected(&a.input, a.largest_bcc)?;
    let mut runs = 0usize;
    let e = all_eccentricities(&lg.graph, |_| runs += 1)?;
    writeln!(out, "n={}", lg.graph.num_vertices())?;
    writeln!(out, "diameter={}", e.diameter())?;
    writeln!(out, "radius={}", e.radius())?;
    if let Some(c) = e.center() {
        writeln!(out, "center={}", lg.label(c))?;
    }
    writeln!(out, "bfs_runs={runs}")?;
    if a.values {
        for v in lg.graph.vertices() {
            writeln!(out, "{} {}", lg.label(v), e.get(v))?;
        }
    }
    Ok(EXIT_OK)
}

fn gen(a: GenArgs, out: &mut dyn Write) -> Outcome {
    let lg = parse_generator(&a.spec)?;
    match a.output {
        Some(path) => {
            let file = File::create(&path)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let mut w = io::BufWriter::new(file);
            write_edge_list(&lg, &mut w)?;
            w.flush()?;
        }
        None => write_edge_list(&lg, out)?,
    }
    Ok(EXIT_OK)
}

fn oracle_cmd(a: OracleArgs, out: &mut dyn Write) -> Outcome {
    let lg = load_connected(&a.input, a.largest_bcc)?;
    if a.farpairs {
        for p in oracle::brute_far_pairs(&lg.graph)? {
            writeln!(out, "{} {} {}", lg.label(p.u), lg.label(p.v), p.d)?;
        }
    } else {
        let (d2, w) = oracle::brute_hyperbolicity_with_limit(&lg.graph, a.max_n)?;
        writeln!(out, "delta={d2}")?;
        write_witness(out, &lg, w)?;
    }
    Ok(EXIT_OK)
}

fn stats(a: StatsArgs, out: &mut dyn Write) -> Outcome {
    let lg = largest_bcc(load(&a.input)?)?;
    let n = lg.graph.num_vertices();
    let all_pairs = (n * n.saturating_sub(1) / 2).max(1) as f64;
    let far = enumerate(&lg, 0)?;
    let opts = Options {
        cache_capacity: a.cache_size.unwrap_or(Options::default().cache_capacity),
        ..Options::default()
    };
    let r = hyperbolicity::run(&lg.graph, &opts)?;
    let diameter = far.first().map_or(0, |p| p.d);
    writeln!(out, "n={n}")?;
    writeln!(out, "m={}", lg.graph.num_edges())?;
    writeln!(out, "diameter={diameter}")?;
    writeln!(out, "delta={}", r.delta2)?;
    writeln!(out, "far_pairs={}", far.len())?;
    writeln!(
        out,
        "far_pairs_pct={:.4}",
        100.0 * far.len() as f64 / all_pairs
    )?;
    writeln!(out, "hyp_pairs={}", r.counters.pairs_emitted)?;
    writeln!(
        out,
        "hyp_pairs_pct={:.4}",
        100.0 * r.counters.pairs_emitted as f64 / all_pairs
    )?;
    Ok(EXIT_OK)
}
