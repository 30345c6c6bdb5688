//! Command-line front end: `solve`, `brute`, and `evaluate` over edge-list
//! graph files.
//!
//! `solve` streams one log line per optimization iteration in the form
//! `Iteration: <i> Exp(+): <F+> Exp(-): <F->` and can write the full run as
//! a JSON document with `--out`.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::maxcut::{Bitstring, Graph, ScoredBitstring};
use crate::qaoa::{self, QaoaParams};
use crate::spsa::{optimize_with, SpsaConfig, SpsaTrace};

/// RNG seed argument: a literal integer, or `random` for entropy seeding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Seed {
    Fixed(u64),
    Random,
}

impl Seed {
    /// The concrete seed value to run with.
    pub fn resolve(self) -> u64 {
        match self {
            Seed::Fixed(value) => value,
            Seed::Random => rand::rng().random(),
        }
    }
}

impl FromStr for Seed {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "random" {
            return Ok(Seed::Random);
        }
        s.parse::<u64>()
            .map(Seed::Fixed)
            .map_err(|_| format!("expected an unsigned integer or 'random', got {s:?}"))
    }
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Seed::Fixed(value) => write!(f, "{value}"),
            Seed::Random => f.write_str("random"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "qaoa-maxcut",
    about = "Solve Max-Cut instances with QAOA trained by SPSA on a state-vector simulator",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Optimize the circuit parameters with SPSA and report the best cut.
    Solve(SolveArgs),
    /// Exhaustively score all 2^n colorings and print the optimum.
    Brute(BruteArgs),
    /// Evaluate the expectation value at fixed parameters.
    Evaluate(EvaluateArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Graph file in edge-list format.
    pub graph: PathBuf,
    /// Circuit depth: number of cost+mixer stages.
    #[arg(long = "p", default_value_t = 2)]
    pub p: usize,
    /// Number of SPSA iterations.
    #[arg(long, default_value_t = 100)]
    pub iterations: usize,
    /// Measurements per objective evaluation.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    /// Initial SPSA step size.
    #[arg(long = "a-start", default_value_t = 0.25)]
    pub a_start: f64,
    /// Initial SPSA perturbation magnitude.
    #[arg(long = "c-start", default_value_t = 0.25)]
    pub c_start: f64,
    /// Decay exponent for both gain sequences.
    #[arg(long, default_value_t = 0.5)]
    pub decay: f64,
    /// RNG seed, or 'random' for a fresh one.
    #[arg(long, default_value_t = Seed::Fixed(42))]
    pub seed: Seed,
    /// Train on exact expectation values instead of sampled estimates.
    #[arg(long)]
    pub exact: bool,
    /// Write the full run as a JSON document to this path.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BruteArgs {
    /// Graph file in edge-list format.
    pub graph: PathBuf,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    /// Graph file in edge-list format.
    pub graph: PathBuf,
    /// Comma-separated gamma angles in radians, one per stage.
    #[arg(long)]
    pub gammas: String,
    /// Comma-separated beta angles in radians, one per stage.
    #[arg(long)]
    pub betas: String,
    /// Measurements for the sampled estimate.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    /// RNG seed, or 'random' for a fresh one.
    #[arg(long, default_value_t = Seed::Fixed(42))]
    pub seed: Seed,
}

/// Echo of everything that determined a solve, embedded in the JSON report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub graph_path: String,
    pub n_vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub p: usize,
    pub n_iterations: usize,
    pub n_samples: usize,
    pub a_start: f64,
    pub c_start: f64,
    pub decay: f64,
    pub seed: u64,
    pub exact: bool,
}

/// Exhaustive-search summary attached to solve reports for small graphs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BruteForceSummary {
    pub max_score: usize,
    pub argmax: Vec<Bitstring>,
}

/// The JSON document written by `solve --out`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub config: ConfigEcho,
    pub trace: SpsaTrace,
    /// Sampled expectation at the final parameters.
    pub final_expectation: f64,
    /// Exact expectation at the final parameters, when `--exact` was set.
    pub final_expectation_exact: Option<f64>,
    /// Best bitstring over every sample drawn during and after training.
    pub best: Option<ScoredBitstring>,
    pub brute_force: Option<BruteForceSummary>,
    pub wall_time_seconds: f64,
}

/// Read and parse a graph file, tagging errors with the path.
pub fn parse_graph_file(path: &Path) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::from(e).in_file(path))?;
    Graph::from_edge_list(&text).map_err(|e| e.in_file(path))
}

/// Parse a comma-separated list of angles.
pub fn parse_angle_list(text: &str) -> Result<Vec<f64>, Error> {
    text.split(',')
        .map(|field| {
            field
                .trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidParams(format!("cannot parse angle {field:?}")))
        })
        .collect()
}

/// Dispatch a parsed command line. Returns an error for the caller to print
/// and turn into a nonzero exit status.
pub fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Solve(args) => run_solve(&args),
        Command::Brute(args) => run_brute(&args),
        Command::Evaluate(args) => run_evaluate(&args),
    }
}

fn join_floats(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn run_solve(args: &SolveArgs) -> Result<(), Error> {
    let graph = parse_graph_file(&args.graph)?;
    let seed = args.seed.resolve();
    let config = SpsaConfig {
        n_iterations: args.iterations,
        a_start: args.a_start,
        c_start: args.c_start,
        decay: args.decay,
        seed,
        ..SpsaConfig::default()
    };
    if args.samples == 0 {
        return Err(Error::ZeroSamples);
    }

    let started = Instant::now();
    let log_line = |record: &crate::spsa::IterationRecord| {
        println!(
            "Iteration: {} Exp(+): {} Exp(-): {}",
            record.iteration, record.f_plus, record.f_minus
        );
    };
    let trace: SpsaTrace = if args.exact {
        optimize_with(args.p, &config, qaoa::exact_objective(&graph), log_line)?
    } else {
        optimize_with(
            args.p,
            &config,
            qaoa::sampled_objective(&graph, args.samples),
            log_line,
        )?
    };

    // Final readout on its own RNG stream so it is reproducible no matter
    // what the optimizer consumed.
    let mut final_rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let final_samples =
        qaoa::sample_circuit(&graph, &trace.final_params, args.samples, &mut final_rng)?;
    let final_expectation = graph.sample_expectation(&final_samples)?;
    let final_expectation_exact = if args.exact {
        Some(qaoa::exact_expectation_value(&graph, &trace.final_params)?)
    } else {
        None
    };

    let mut best = trace.best_observed.clone();
    if let Some(candidate) = graph.best_sampled(&final_samples)? {
        if best.as_ref().is_none_or(|b| candidate.score > b.score) {
            best = Some(candidate);
        }
    }

    println!("final gammas: {}", join_floats(trace.final_params.gammas()));
    println!("final betas: {}", join_floats(trace.final_params.betas()));
    println!("final expectation (sampled): {final_expectation}");
    if let Some(exact) = final_expectation_exact {
        println!("final expectation (exact): {exact}");
    }
    match &best {
        Some(b) => println!("best bitstring: {} (cut {})", b.bitstring, b.score),
        None => println!("best bitstring: none observed"),
    }

    let brute_force = if graph.n_vertices() <= crate::maxcut::MAX_BRUTE_FORCE_VERTICES {
        let (max_score, argmax) = graph.brute_force_max()?;
        let rendered = argmax
            .iter()
            .map(Bitstring::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        println!("brute force optimum: {max_score} ({rendered})");
        Some(BruteForceSummary { max_score, argmax })
    } else {
        None
    };

    let wall_time_seconds = started.elapsed().as_secs_f64();
    if let Some(out) = &args.out {
        let report = SolveReport {
            config: ConfigEcho {
                graph_path: args.graph.display().to_string(),
                n_vertices: graph.n_vertices(),
                edges: graph.edges().to_vec(),
                p: args.p,
                n_iterations: args.iterations,
                n_samples: args.samples,
                a_start: args.a_start,
                c_start: args.c_start,
                decay: args.decay,
                seed,
                exact: args.exact,
            },
            trace,
            final_expectation,
            final_expectation_exact,
            best,
            brute_force,
            wall_time_seconds,
        };
        std::fs::write(out, serde_json::to_string_pretty(&report)?)
            .map_err(|e| Error::from(e).in_file(out.clone()))?;
        println!("report written to {}", out.display());
    }
    println!("wall time: {wall_time_seconds:.3} s");
    Ok(())
}

pub fn run_brute(args: &BruteArgs) -> Result<(), Error> {
    let graph = parse_graph_file(&args.graph)?;
    let (max_score, argmax) = graph.brute_force_max()?;
    let rendered = argmax
        .iter()
        .map(Bitstring::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    println!("max {max_score}: {rendered}");
    Ok(())
}

pub fn run_evaluate(args: &EvaluateArgs) -> Result<(), Error> {
    let graph = parse_graph_file(&args.graph)?;
    let params = QaoaParams::new(parse_angle_list(&args.gammas)?, parse_angle_list(&args.betas)?)?;
    if args.samples == 0 {
        return Err(Error::ZeroSamples);
    }
    let exact = qaoa::exact_expectation_value(&graph, &params)?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed.resolve());
    let sampled = qaoa::estimate_expectation(&graph, &params, args.samples, &mut rng)?;
    println!("exact: {exact}");
    println!("sampled: {sampled}");
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_parsing() {
        assert_eq!("42".parse::<Seed>().unwrap(), Seed::Fixed(42));
        assert_eq!("random".parse::<Seed>().unwrap(), Seed::Random);
        assert!("-1".parse::<Seed>().is_err());
        assert_eq!(Seed::Fixed(7).to_string(), "7");
    }

    #[test]
    fn angle_list_parsing() {
        assert_eq!(parse_angle_list("0.1, -0.2,3").unwrap(), vec![0.1, -0.2, 3.0]);
        assert!(parse_angle_list("0.1,zebra").is_err());
    }

    #[test]
    fn missing_graph_file_names_path() {
        let err = parse_graph_file(Path::new("does-not-exist.txt")).unwrap_err();
        assert!(err.to_string().contains("does-not-exist.txt"));
    }

    #[test]
    fn cli_parses_paper_defaults() {
        let cli = Cli::try_parse_from(["qaoa-maxcut", "solve", "graph.txt"]).unwrap();
        match cli.command {
            Command::Solve(args) => {
                assert_eq!(args.p, 2);
                assert_eq!(args.iterations, 100);
                assert_eq!(args.samples, 10_000);
                assert_eq!(args.a_start, 0.25);
                assert_eq!(args.c_start, 0.25);
                assert_eq!(args.decay, 0.5);
                assert_eq!(args.seed, Seed::Fixed(42));
                assert!(!args.exact);
            }
            other => panic!("unexpected command {other:?}"),
        }
    }

    #[test]
    fn cli_parses_all_flags() {
        let cli = Cli::try_parse_from([
            "qaoa-maxcut",
            "solve",
            "graph.txt",
            "--p",
            "3",
            "--iterations",
            "7",
            "--samples",
            "500",
            "--a-start",
            "0.1",
            "--c-start",
            "0.2",
            "--decay",
            "0.3",
            "--seed",
            "random",
            "--exact",
            "--out",
            "report.json",
        ])
        .unwrap();
        match cli.command {
            Command::Solve(args) => {
                assert_eq!(args.p, 3);
                assert_eq!(args.iterations, 7);
                assert_eq!(args.samples, 500);
                assert_eq!(args.seed, Seed::Random);
                assert!(args.exact);
                assert_eq!(args.out, Some(PathBuf::from("report.json")));
            }
            other => panic!("unexpected command {other:?}"),
        }
    }
}
