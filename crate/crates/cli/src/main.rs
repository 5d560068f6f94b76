//! Batch front end for the toolkit.
//!
//! Contract: stdout carries machine-readable output only (JSON lines, or
//! edge-list records for `gen`); prose goes to stderr. Exit codes are
//! stable: 0 success / all PASS, 1 any FAIL or VIOLATION-FOUND, 2 usage or
//! input errors, 3 no 1-factor exists, 4 classification violation.
//! `--jobs` changes wall time, never output bytes.

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxkec_core::certify::{Certificate, Claim, Verdict};
use maxkec_core::coloring::ColoringWitness;
use maxkec_core::graph::EdgeSet;
use maxkec_core::harness::{self, HarnessError};
use maxkec_core::io::{parse_edge_list_many, parse_graph6, write_edge_list, IoError};
use maxkec_core::kempe::{self, KempeError};
use maxkec_core::matching::{self, OneFactor};
use maxkec_core::{canon, gen, solver, MultiGraph};
use rayon::prelude::*;
use serde::Serialize;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

const EXIT_FINDING: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NO_FACTOR: u8 = 3;
const EXIT_CLASSIFICATION: u8 = 4;

#[derive(Parser)]
#[command(
    name = "maxkec",
    version,
    about = "Exact maximum k-edge-colorable subgraph toolkit for cubic multigraphs"
)]
struct Cli {
    /// Worker threads for campaigns (default: $MAXKEC_JOBS, then all cores).
    #[arg(long, global = true, value_name = "J")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute exact nu_k with a canonical witness coloring.
    Nu(NuArgs),
    /// Extend a perfect matching into a maximum coloring, or push all
    /// uncolored edges into it.
    Extend(ExtendArgs),
    /// Check a claim and stream certificates.
    Verify(VerifyArgs),
    /// Emit cubic multigraphs, exhaustively or by seeded sampling.
    Gen(GenArgs),
    /// Search for graphs attaining nu2 + nu3 = 2n exactly.
    Search(SearchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FileFormat {
    Edgelist,
    Graph6,
}

/// Where a subject graph comes from: a file or the built-in corpus.
#[derive(Args)]
struct GraphSource {
    /// Input file (edge-list records, or one graph6 graph per line).
    #[arg(long, value_name = "FILE", conflicts_with = "canon")]
    input: Option<PathBuf>,

    /// Built-in graph: THETA, K4, K33, PETERSEN or S6.
    #[arg(long, value_name = "NAME")]
    canon: Option<String>,

    /// Input file format.
    #[arg(long, value_enum, default_value_t = FileFormat::Edgelist)]
    format: FileFormat,
}

#[derive(Args)]
struct NuArgs {
    /// Which optimum: 1, 2 or 3 disjoint matchings.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    k: u8,

    #[command(flatten)]
    source: GraphSource,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExtendMode {
    /// Factor ends up inside the colored subgraph.
    Contain,
    /// Uncolored edges end up inside the factor.
    Avoid,
}

#[derive(Args)]
struct ExtendArgs {
    #[arg(long, value_enum)]
    mode: ExtendMode,

    #[command(flatten)]
    source: GraphSource,

    /// Edge-list file naming the perfect matching to use (endpoint pairs,
    /// same "n m" header format). Default: lowest perfect matching found.
    #[arg(long, value_name = "FILE")]
    factor: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: t1, t2, t3, t5, bounds, conjecture.
    #[arg(long, value_name = "CLAIM")]
    claim: String,

    #[command(flatten)]
    source: GraphSource,

    /// Run over every connected cubic multigraph with up to N vertices.
    #[arg(long, value_name = "N", conflicts_with_all = ["input", "canon"])]
    all_n: Option<usize>,
}

#[derive(Args)]
struct GenArgs {
    /// Vertex count (even).
    #[arg(long)]
    n: usize,

    /// Exhaustive: every connected cubic multigraph on n vertices, once up
    /// to isomorphism.
    #[arg(long, conflicts_with_all = ["count", "seed"])]
    all: bool,

    /// Number of random samples.
    #[arg(long, requires = "seed")]
    count: Option<usize>,

    /// RNG seed for sampling.
    #[arg(long)]
    seed: Option<u64>,

    /// Output format (edge-list only; graph6 cannot carry parallel edges).
    #[arg(long, value_enum, default_value_t = FileFormat::Edgelist)]
    format: FileFormat,
}

#[derive(Args)]
struct SearchArgs {
    /// Extremal search: report every graph with nu2 + nu3 = 2n.
    #[arg(long)]
    extremal: bool,

    /// Largest vertex count to enumerate (at most 12).
    #[arg(long, value_name = "N")]
    max_n: usize,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> CliError {
        CliError::usage(e.to_string())
    }
}

impl From<HarnessError> for CliError {
    fn from(e: HarnessError) -> CliError {
        CliError::usage(e.to_string())
    }
}

impl From<gen::GenError> for CliError {
    fn from(e: gen::GenError) -> CliError {
        CliError::usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs.or_else(|| {
        std::env::var("MAXKEC_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    }) {
        // Ignore "already initialized": only possible here in tests.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let result = match cli.command {
        Command::Nu(args) => cmd_nu(args),
        Command::Extend(args) => cmd_extend(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Search(args) => cmd_search(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("maxkec: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

impl GraphSource {
    fn load(&self) -> Result<Vec<MultiGraph>, CliError> {
        if let Some(name) = &self.canon {
            return Ok(vec![canon::by_name(name).map_err(CliError::usage)?]);
        }
        let path = self
            .input
            .as_ref()
            .ok_or_else(|| CliError::usage("need --input FILE or --canon NAME"))?;
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
        let graphs = match self.format {
            FileFormat::Edgelist => parse_edge_list_many(&text)?,
            FileFormat::Graph6 => text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(parse_graph6)
                .collect::<Result<Vec<_>, _>>()?,
        };
        if graphs.is_empty() {
            return Err(CliError::usage(format!("{}: no graphs", path.display())));
        }
        Ok(graphs)
    }

    fn load_one(&self) -> Result<MultiGraph, CliError> {
        let mut graphs = self.load()?;
        if graphs.len() > 1 {
            return Err(CliError::usage(format!(
                "expected one graph, found {} records",
                graphs.len()
            )));
        }
        Ok(graphs.pop().expect("load() rejects empty inputs"))
    }
}

/// One `nu` output line; field order is part of the CLI contract.
#[derive(Serialize)]
struct NuLine {
    k: u8,
    value: usize,
    witness: ColoringWitness,
}

fn cmd_nu(args: NuArgs) -> Result<u8, CliError> {
    for g in args.source.load()? {
        let rec = solver::nu(&g, args.k);
        let line = NuLine {
            k: rec.k,
            value: rec.value,
            witness: ColoringWitness::new(&g, &rec.witness),
        };
        println!("{}", serde_json::to_string(&line).expect("line serializes"));
    }
    Ok(0)
}

/// Maps endpoint pairs from a factor file onto this graph's edge ids,
/// consuming parallel edges in id order.
fn factor_from_file(g: &MultiGraph, path: &PathBuf) -> Result<OneFactor, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    let listed = maxkec_core::io::parse_edge_list(&text)?;
    if listed.vertex_count() != g.vertex_count() {
        return Err(CliError::usage(format!(
            "factor file is on {} vertices, graph has {}",
            listed.vertex_count(),
            g.vertex_count()
        )));
    }
    let mut edges = EdgeSet::new();
    for &(u, v) in listed.edges() {
        let next = g
            .incident_edges(u)
            .iter()
            .copied()
            .find(|&e| g.endpoints(e) == (u.min(v), u.max(v)) && !edges.contains(e))
            .ok_or_else(|| {
                CliError::usage(format!("factor edge {u}-{v} is not an unused graph edge"))
            })?;
        edges.insert(next);
    }
    OneFactor::new(g, edges).map_err(|e| CliError::usage(format!("factor file: {e}")))
}

fn cmd_extend(args: ExtendArgs) -> Result<u8, CliError> {
    let g = args.source.load_one()?;
    let factor = match &args.factor {
        Some(path) => Some(factor_from_file(&g, path)?),
        None => matching::find_one_factor(&g).map_err(|e| CliError::usage(e.to_string()))?,
    };
    let Some(factor) = factor else {
        // No 1-factor: the extension claims hold vacuously; say so with a
        // certificate and a dedicated exit code.
        let claim = match args.mode {
            ExtendMode::Contain => Claim::T2,
            ExtendMode::Avoid => Claim::T3,
        };
        let cert = match claim {
            Claim::T2 => harness::check_t2(&g)?,
            _ => harness::check_t3(&g)?,
        };
        println!("{}", cert.to_json_line());
        eprintln!("maxkec: graph has no 1-factor; claim holds vacuously");
        return Ok(EXIT_NO_FACTOR);
    };
    let run = match args.mode {
        ExtendMode::Contain => kempe::extend_one_factor(&g, &factor),
        ExtendMode::Avoid => kempe::extend_avoiding(&g, &factor),
    };
    let c = match run {
        Ok(c) => c,
        Err(KempeError::Structure(v)) => {
            eprintln!("maxkec: classification violated: {v}");
            eprintln!(
                "maxkec: graph: {}",
                serde_json::to_string(&maxkec_core::certify::GraphDump::new(&g))
                    .expect("dump serializes")
            );
            return Ok(EXIT_CLASSIFICATION);
        }
        Err(e) => return Err(CliError::usage(e.to_string())),
    };
    let nu3 = solver::nu(&g, 3).value;
    let ok = c.validate(&g)
        && c.colored_count() == nu3
        && match args.mode {
            ExtendMode::Contain => factor.edges().is_subset_of(&c.colored_edges()),
            ExtendMode::Avoid => c.uncolored_edges().is_subset_of(factor.edges()),
        };
    let record = maxkec_core::certify::ExtensionRecord {
        factor: factor.edges().to_vec(),
        assignment: c.assignment().to_vec(),
    };
    println!(
        "{}",
        serde_json::to_string(&record).expect("record serializes")
    );
    eprintln!(
        "extend: colored {}/{} edges (nu3 = {nu3}), factor {:?}, checks {}",
        c.colored_count(),
        g.edge_count(),
        factor.edges().to_vec(),
        if ok { "passed" } else { "FAILED" }
    );
    if ok {
        Ok(0)
    } else {
        Ok(EXIT_FINDING)
    }
}

fn corpus_up_to(max_n: usize) -> Result<Vec<MultiGraph>, CliError> {
    if max_n > gen::ENUM_VERTEX_CAP {
        return Err(CliError::usage(format!(
            "--all-n is capped at {}; got {max_n}",
            gen::ENUM_VERTEX_CAP
        )));
    }
    let mut graphs = Vec::new();
    for n in (2..=max_n).step_by(2) {
        graphs.extend(gen::enumerate_cubic(n)?);
    }
    Ok(graphs)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, CliError> {
    let graphs = match args.all_n {
        Some(max_n) => corpus_up_to(max_n)?,
        None => args.source.load()?,
    };
    let started = Instant::now();
    let claim = args.claim.to_ascii_lowercase();
    let certs: Vec<Certificate> = match claim.as_str() {
        "t1" => run_campaign(&graphs, harness::check_t1)?,
        "t2" => run_campaign(&graphs, harness::check_t2)?,
        "t3" => run_campaign(&graphs, harness::check_t3)?,
        "t5" => run_campaign(&graphs, harness::check_t5)?,
        "bounds" => run_campaign(&graphs, harness::check_bounds)?,
        // One certificate per (graph, maximal matching).
        "conjecture" => graphs
            .par_iter()
            .map(harness::conjecture_per_factor)
            .collect::<Result<Vec<_>, _>>()
            .map_err(CliError::from)?
            .into_iter()
            .flatten()
            .collect(),
        other => {
            return Err(CliError::usage(format!(
                "unknown claim {other:?}; expected t1, t2, t3, t5, bounds or conjecture"
            )))
        }
    };
    let mut pass = 0usize;
    let mut fail = 0usize;
    let mut violation = 0usize;
    for cert in &certs {
        match cert.verdict {
            Verdict::Pass => pass += 1,
            Verdict::Fail => fail += 1,
            Verdict::ViolationFound => violation += 1,
        }
        println!("{}", cert.to_json_line());
    }
    eprintln!(
        "verify --claim {claim}: {} graphs, {} certificates — {pass} PASS, {fail} FAIL, \
         {violation} VIOLATION-FOUND ({:.2}s)",
        graphs.len(),
        certs.len(),
        started.elapsed().as_secs_f64()
    );
    if fail + violation == 0 {
        Ok(0)
    } else {
        Ok(EXIT_FINDING)
    }
}

fn run_campaign(
    graphs: &[MultiGraph],
    check: impl Fn(&MultiGraph) -> Result<Certificate, HarnessError> + Sync,
) -> Result<Vec<Certificate>, CliError> {
    harness::campaign(graphs, check)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::from)
}

fn cmd_gen(args: GenArgs) -> Result<u8, CliError> {
    if args.format == FileFormat::Graph6 {
        return Err(CliError::usage(
            "graph6 output cannot carry parallel edges; use --format edgelist",
        ));
    }
    let graphs = if args.all {
        if args.n == 0 || !args.n.is_multiple_of(2) {
            return Err(CliError::usage(format!(
                "no cubic multigraph exists on {} vertices",
                args.n
            )));
        }
        gen::enumerate_cubic(args.n)?
    } else {
        let count = args
            .count
            .ok_or_else(|| CliError::usage("need --all or --count C --seed S"))?;
        let seed = args.seed.expect("clap enforces --seed with --count");
        gen::random_cubic(&gen::GenConfig::new(args.n, count, seed))?
    };
    let mut out = String::new();
    for (i, g) in graphs.iter().enumerate() {
        out.push_str(&format!("# {i}\n"));
        out.push_str(&write_edge_list(g));
    }
    print!("{out}");
    eprintln!("gen: {} graphs on {} vertices", graphs.len(), args.n);
    Ok(0)
}

fn cmd_search(args: SearchArgs) -> Result<u8, CliError> {
    if !args.extremal {
        return Err(CliError::usage("search requires --extremal"));
    }
    if args.max_n > harness::EXTREMAL_SEARCH_CAP {
        return Err(CliError::usage(format!(
            "--max-n is capped at {}; got {}",
            harness::EXTREMAL_SEARCH_CAP,
            args.max_n
        )));
    }
    let started = Instant::now();
    let certs = harness::search_extremal(args.max_n)?;
    for cert in &certs {
        println!("{}", cert.to_json_line());
    }
    eprintln!(
        "search --extremal: {} graphs attain nu2 + nu3 = 2n for n <= {} ({:.2}s)",
        certs.len(),
        args.max_n,
        started.elapsed().as_secs_f64()
    );
    Ok(0)
}
