//! The `spanner` command line: generate graphs, build and verify spanners,
//! and run benchmark sweeps.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::generate::{random_graph, random_weighted_graph};
use crate::graph::Graph;
use crate::io::{read_edge_list, serialize_edge_list, write_edge_list, write_text};
use crate::params::{default_params, Params};
use crate::spanner::{
    apsp_cap, chechik_baseline, fast_plus4, weighted_plus4, Algorithm, SpannerBuild, StageCounts,
};
use crate::verify::{
    size_report, verify_additive_stretch_with, verify_weighted_stretch_with, PairWeightMode,
    StretchReport, VerifyOptions,
};

#[derive(Debug, Parser)]
#[command(
    name = "spanner",
    version,
    about = "Additive spanner construction and verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a seeded uniform random graph as an edge list.
    Generate(GenerateArgs),
    /// Build a spanner of an edge-list graph.
    Build(BuildArgs),
    /// Check the stretch of a spanner against its graph.
    Verify(VerifyArgs),
    /// Time constructions over a sweep of sizes and seeds, as CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Baseline,
    Fast,
    Weighted,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Baseline => Algorithm::Baseline,
            AlgoArg::Fast => Algorithm::Fast,
            AlgoArg::Weighted => Algorithm::Weighted,
        }
    }
}

/// `lo:hi` weight range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightRange {
    pub lo: f64,
    pub hi: f64,
}

impl std::str::FromStr for WeightRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (lo, hi) = s
            .split_once(':')
            .ok_or_else(|| format!("expected lo:hi, got {s:?}"))?;
        let lo: f64 = lo
            .trim()
            .parse()
            .map_err(|_| format!("bad lower bound {lo:?}"))?;
        let hi: f64 = hi
            .trim()
            .parse()
            .map_err(|_| format!("bad upper bound {hi:?}"))?;
        if !(lo > 0.0 && lo <= hi && hi.is_finite()) {
            return Err(format!("need 0 < lo <= hi, got {lo}:{hi}"));
        }
        Ok(WeightRange { lo, hi })
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Draw weights uniformly from `lo:hi`.
    #[arg(long)]
    pub weights: Option<WeightRange>,
    /// Output path; stdout if omitted.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long, value_enum)]
    pub algo: AlgoArg,
    #[arg(short = 'i', long)]
    pub input: PathBuf,
    /// Spanner edge list; stats go to `<output>.json`.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Required for `weighted`, rejected otherwise.
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// Override the heaviness threshold.
    #[arg(long)]
    pub mu: Option<usize>,
    /// Run the matching stretch check; exit 1 on any violation.
    #[arg(long)]
    pub verify: bool,
    #[arg(long)]
    pub pair_sample: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// The original graph.
    #[arg(short = 'i', long)]
    pub input: PathBuf,
    /// The spanner, an edge list over the same nodes.
    #[arg(long)]
    pub spanner: PathBuf,
    /// Check the weighted bound `+4W(s,t)+eps*W` instead of `+k`.
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long, default_value_t = 4)]
    pub k: u32,
    #[arg(long)]
    pub pair_sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Read W(s,t) off the canonical shortest path instead of the minimax
    /// over all shortest paths.
    #[arg(long)]
    pub canonical_w: bool,
    /// Write the JSON report here as well as to stdout.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub algo: AlgoArg,
    /// Comma-separated node counts.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
    /// Fixed edge count; otherwise `min(density * n^{7/5}, n(n-1)/2)`.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, default_value_t = 10.0)]
    pub density: f64,
    /// Number of seeds per size.
    #[arg(long, default_value_t = 1)]
    pub seeds: u64,
    /// First seed; the sweep uses `seed..seed+seeds`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub weights: Option<WeightRange>,
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long)]
    pub mu: Option<usize>,
    #[arg(long)]
    pub verify: bool,
    #[arg(long)]
    pub pair_sample: Option<usize>,
    /// CSV output path; stdout if omitted.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

/// Stats sidecar written next to a built spanner.
#[derive(Debug, Clone, Serialize)]
pub struct BuildStats {
    pub algo: Algorithm,
    pub n: usize,
    pub m: usize,
    pub mu: usize,
    pub g: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    pub seed: u64,
    pub s1_size: usize,
    pub s2_size: usize,
    pub stage_counts: StageCounts,
    pub spanner_edges: usize,
    pub ratio_n_mu: f64,
    pub paths_added: u64,
    pub max_path_gray: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verify: Option<StretchReport>,
}

impl BuildStats {
    pub fn new(g: &Graph, build: &SpannerBuild) -> Self {
        let size = size_report(build, g);
        BuildStats {
            algo: build.algorithm,
            n: g.n(),
            m: g.m(),
            mu: build.params.mu,
            g: build.params.g,
            epsilon: build.params.epsilon,
            seed: build.params.seed,
            s1_size: build.s1.len(),
            s2_size: build.s2.len(),
            stage_counts: build.stage_counts,
            spanner_edges: size.edges,
            ratio_n_mu: size.ratio_n_mu,
            paths_added: build.paths_added,
            max_path_gray: build.max_path_gray,
            verify: None,
        }
    }
}

/// One CSV row of a benchmark sweep. The header is the same for every
/// algorithm; `violations` is empty unless verification was requested.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub mu: usize,
    pub g: usize,
    pub seed: u64,
    pub algo: Algorithm,
    pub build_ms: f64,
    pub spanner_edges: usize,
    pub ratio_n_mu: f64,
    pub violations: Option<u64>,
}

/// Process exit status of a command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    /// A stretch check found violations.
    Violations,
}

impl Outcome {
    pub fn code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::Violations => 1,
        }
    }
}

pub fn params_for(
    n: usize,
    algo: Algorithm,
    seed: u64,
    epsilon: Option<f64>,
    mu: Option<usize>,
) -> Result<Params> {
    let mut params = match mu {
        Some(mu) => Params::with_mu(n, mu)?,
        None => default_params(n),
    }
    .seed(seed);
    match (algo, epsilon) {
        (Algorithm::Weighted, Some(eps)) => params = params.epsilon(eps),
        (Algorithm::Weighted, None) => {
            return Err(Error::InvalidParams(
                "--algo weighted requires --epsilon".into(),
            ))
        }
        (_, Some(_)) => {
            return Err(Error::InvalidParams(format!(
                "--epsilon only applies to --algo weighted, not {algo}"
            )))
        }
        (_, None) => {}
    }
    params.validate()?;
    Ok(params)
}

pub fn construct(g: &Graph, algo: Algorithm, params: &Params) -> Result<SpannerBuild> {
    match algo {
        Algorithm::Fast => fast_plus4(g, params),
        Algorithm::Baseline => chechik_baseline(g, params),
        Algorithm::Weighted => weighted_plus4(g, params),
    }
}

fn check_stretch(
    g: &Graph,
    h: &EdgeSet,
    epsilon: Option<f64>,
    k: u32,
    opts: &VerifyOptions,
) -> Result<StretchReport> {
    match epsilon {
        Some(eps) => verify_weighted_stretch_with(g, h, eps, opts),
        None => verify_additive_stretch_with(g, h, k, opts),
    }
}

pub fn cmd_generate(args: &GenerateArgs, out: &mut dyn std::io::Write) -> Result<Outcome> {
    let g = match args.weights {
        Some(WeightRange { lo, hi }) => random_weighted_graph(args.n, args.m, lo, hi, args.seed)?,
        None => random_graph(args.n, args.m, args.seed)?,
    };
    let summary = format!("n={} m={} seed={}", g.n(), g.m(), args.seed);
    match &args.output {
        Some(path) => {
            write_edge_list(path, &g)?;
            writeln!(out, "{summary}").map_err(stdout_err)?;
        }
        None => {
            out.write_all(serialize_edge_list(&g).as_bytes())
                .map_err(stdout_err)?;
            eprintln!("{summary}");
        }
    }
    Ok(Outcome::Success)
}

pub fn cmd_build(args: &BuildArgs, out: &mut dyn std::io::Write) -> Result<Outcome> {
    let g = read_edge_list(&args.input)?;
    let algo: Algorithm = args.algo.into();
    if algo != Algorithm::Weighted && !g.is_unweighted() {
        return Err(Error::WeightedInput);
    }
    if algo == Algorithm::Baseline {
        let cap = apsp_cap();
        if g.n() > cap {
            return Err(Error::ApspCap { n: g.n(), cap });
        }
    }
    let params = params_for(g.n(), algo, args.seed, args.epsilon, args.mu)?;
    let build = construct(&g, algo, &params)?;
    let mut stats = BuildStats::new(&g, &build);

    let mut outcome = Outcome::Success;
    if args.verify {
        let opts = VerifyOptions {
            pair_sample: args.pair_sample,
            seed: args.seed,
            ..VerifyOptions::default()
        };
        let report = check_stretch(&g, &build.spanner_edges, params.epsilon, 4, &opts)?;
        if !report.passed() {
            outcome = Outcome::Violations;
        }
        stats.verify = Some(report);
    }

    let json = serde_json::to_string_pretty(&stats)?;
    if let Some(path) = &args.output {
        write_edge_list(path, &build.to_graph(&g))?;
        write_text(sidecar_path(path), &(json.clone() + "\n"))?;
    }
    writeln!(out, "{json}").map_err(stdout_err)?;
    Ok(outcome)
}

/// `h.el` -> `h.el.json`.
pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn std::io::Write) -> Result<Outcome> {
    let g = read_edge_list(&args.input)?;
    let h = read_edge_list(&args.spanner)?;
    let edges = EdgeSet::from_subgraph(&g, &h)?;
    let opts = VerifyOptions {
        pair_sample: args.pair_sample,
        seed: args.seed,
        pair_weight: if args.canonical_w {
            PairWeightMode::Canonical
        } else {
            PairWeightMode::Strict
        },
        ..VerifyOptions::default()
    };
    let report = check_stretch(&g, &edges, args.epsilon, args.k, &opts)?;
    let json = serde_json::to_string_pretty(&report)?;
    if let Some(path) = &args.output {
        write_text(path, &(json.clone() + "\n"))?;
    }
    writeln!(out, "{json}").map_err(stdout_err)?;
    Ok(if report.passed() {
        Outcome::Success
    } else {
        Outcome::Violations
    })
}

/// `min(density * n^{7/5}, n(n-1)/2)`, rounded down.
pub fn bench_edge_count(n: usize, density: f64) -> usize {
    let target = (density * (n as f64).powf(1.4)).floor() as u64;
    let max = (n as u64) * (n as u64).saturating_sub(1) / 2;
    target.min(max) as usize
}

pub fn bench_rows(args: &BenchArgs) -> Result<Vec<BenchRow>> {
    let algo: Algorithm = args.algo.into();
    let mut rows = Vec::new();
    for &n in &args.n {
        let m = args.m.unwrap_or_else(|| bench_edge_count(n, args.density));
        for seed in args.seed..args.seed + args.seeds {
            let g = match args.weights {
                Some(WeightRange { lo, hi }) => random_weighted_graph(n, m, lo, hi, seed)?,
                None => random_graph(n, m, seed)?,
            };
            let params = params_for(n, algo, seed, args.epsilon, args.mu)?;
            let start = Instant::now();
            let build = construct(&g, algo, &params)?;
            let build_ms = start.elapsed().as_secs_f64() * 1e3;
            let violations = if args.verify {
                let opts = VerifyOptions {
                    pair_sample: args.pair_sample,
                    seed,
                    ..VerifyOptions::default()
                };
                Some(check_stretch(&g, &build.spanner_edges, params.epsilon, 4, &opts)?.violations)
            } else {
                None
            };
            let size = size_report(&build, &g);
            rows.push(BenchRow {
                n,
                m,
                mu: params.mu,
                g: params.g,
                seed,
                algo,
                build_ms,
                spanner_edges: size.edges,
                ratio_n_mu: size.ratio_n_mu,
                violations,
            });
        }
    }
    Ok(rows)
}

pub fn write_bench_csv<W: std::io::Write>(rows: &[BenchRow], sink: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush().map_err(stdout_err)?;
    Ok(())
}

pub fn cmd_bench(args: &BenchArgs, out: &mut dyn std::io::Write) -> Result<Outcome> {
    let rows = bench_rows(args)?;
    match &args.csv {
        Some(path) => {
            let file = std::fs::File::create(path).map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
            write_bench_csv(&rows, file)?;
            writeln!(out, "wrote {} rows to {}", rows.len(), path.display()).map_err(stdout_err)?;
        }
        None => write_bench_csv(&rows, out)?,
    }
    let bad = rows.iter().any(|r| r.violations.is_some_and(|v| v > 0));
    Ok(if bad {
        Outcome::Violations
    } else {
        Outcome::Success
    })
}

fn stdout_err(source: std::io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<stdout>"),
        source,
    }
}

pub fn run(cli: &Cli, out: &mut dyn std::io::Write) -> Result<Outcome> {
    match &cli.command {
        Command::Generate(a) => cmd_generate(a, out),
        Command::Build(a) => cmd_build(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Bench(a) => cmd_bench(a, out),
    }
}

/// Entry point of the `spanner` binary. Exit code 0 on success, 1 when a
/// stretch check fails, 2 on any error.
pub fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(&cli, &mut lock) {
        Ok(outcome) => std::process::ExitCode::from(outcome.code()),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::ExitCode::from(2)
        }
    }
}
