// SPDX-License-Identifier: Apache-2.0

//! `dnalign` command-line front end.
//!
//! Exit codes: 0 success, 1 infeasible result, 2 input error, 3 configuration
//! error.

use std::fs::{self, File};
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dnalign::densest::DEFAULT_EXACT_LIMIT;
use dnalign::ingest::{
    export_alignment, generate_planted_with, highlight_dot, parse_correspondence, parse_edge_list, write_correspondence,
    write_edge_list, ExportFormat, PlantedParams,
};
use dnalign::report::{DcsReport, OracleReport, PeelReport, StatsReport};
use dnalign::{
    brute_force_dcs, build_alignment_graph, exact_densest, extract_dcs, peel, Connectivity, DcsOptions, DualNetwork,
    Error, GapWeightRule, Graph, HopLimit,
};

#[derive(Parser)]
#[command(name = "dnalign", version, about = "Densest connected subgraphs of dual networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Extract a dense, physically connected subgraph.
    Dcs(DcsArgs),
    /// Build and export the weighted alignment graph.
    Align(AlignArgs),
    /// Greedy densest subgraph of a single weighted graph.
    Peel(PeelArgs),
    /// Exact densest connected subgraph by enumeration (small inputs).
    Oracle(OracleArgs),
    /// Generate a planted instance.
    Gen(GenArgs),
    /// Size and density diagnostics for both networks.
    Stats(StatsArgs),
}

#[derive(Args)]
struct Inputs {
    /// Weighted edge list `src dst weight`.
    #[arg(long)]
    conceptual: PathBuf,
    /// Unweighted edge list `src dst`.
    #[arg(long)]
    physical: PathBuf,
    /// Pairs `conceptual_label physical_label`. Without it, labels present in
    /// both networks are paired with themselves.
    #[arg(long)]
    correspondence: Option<PathBuf>,
}

#[derive(Args)]
struct AlignOpts {
    /// Largest physical hop distance bridged by a gap edge, or `inf`.
    #[arg(long, default_value = "4")]
    delta: HopLimit,
    /// Gap edge weight: `conceptual` keeps w, `per-hop` uses w / distance.
    #[arg(long, default_value = "per-hop")]
    gap_mode: GapWeightRule,
}

#[derive(Args)]
struct DcsArgs {
    #[command(flatten)]
    inputs: Inputs,
    #[command(flatten)]
    align: AlignOpts,
    #[arg(long, default_value = "strict")]
    connectivity: Connectivity,
    /// Report a disconnected selection instead of adding connector nodes.
    #[arg(long)]
    no_repair: bool,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Also write `conceptual.dot` and `physical.dot` highlighting the result.
    #[arg(long)]
    dot_dir: Option<PathBuf>,
}

#[derive(Args)]
struct AlignArgs {
    #[command(flatten)]
    inputs: Inputs,
    #[command(flatten)]
    align: AlignOpts,
    #[arg(long, default_value = "json")]
    format: ExportFormat,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct PeelArgs {
    #[arg(long, alias = "conceptual")]
    graph: PathBuf,
    /// Read `src dst` records with unit weights.
    #[arg(long)]
    unweighted: bool,
    /// Enumerate all subsets instead of peeling (at most 20 nodes).
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    inputs: Inputs,
    /// Largest subset size to enumerate.
    #[arg(long)]
    max_oracle_nodes: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    nodes: usize,
    #[arg(long)]
    planted_size: usize,
    #[arg(long, default_value = "0")]
    seed: u64,
    #[arg(long, default_value = "0.1")]
    background_weight_cap: f64,
    #[arg(long, default_value = "0.15")]
    background_edge_prob: f64,
    /// Directory receiving conceptual.txt, physical.txt, correspondence.txt
    /// and planted.txt.
    #[arg(long)]
    output: PathBuf,
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    inputs: Inputs,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// A failure with its exit code and a message naming the offending input.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }

    fn from_error(err: &Error, file: Option<&Path>) -> Self {
        let code = match err {
            Error::NoFeasibleSubgraph | Error::IrreparableDisconnection { .. } => 1,
            Error::TooLarge { .. } | Error::InvalidDelta | Error::Config(_) => 3,
            _ => 2,
        };
        let message = match (file, err) {
            (Some(f), Error::Parse { line, message }) => format!("{}:{line}: {message}", f.display()),
            (Some(f), other) => format!("{}: {other}", f.display()),
            (None, other) => other.to_string(),
        };
        Failure { code, message }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::from_error(&err, None)
    }
}

type Outcome<T = ()> = std::result::Result<T, Failure>;

fn open(path: &Path) -> Outcome<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path, weighted: bool) -> Outcome<Graph> {
    parse_edge_list(open(path)?, weighted).map_err(|e| Failure::from_error(&e, Some(path)))
}

fn load_dual(inputs: &Inputs) -> Outcome<DualNetwork> {
    let conceptual = load_graph(&inputs.conceptual, true)?;
    let physical = load_graph(&inputs.physical, false)?;
    let dn = match &inputs.correspondence {
        Some(path) => {
            let corr = parse_correspondence(open(path)?).map_err(|e| Failure::from_error(&e, Some(path)))?;
            DualNetwork::new(conceptual, physical, corr).map_err(|e| Failure::from_error(&e, Some(path)))?
        }
        None => DualNetwork::with_identity(conceptual, physical)?,
    };
    let v = dn.validation();
    if v.unmatched_conceptual + v.unmatched_physical > 0 {
        log::warn!(
            "{} conceptual and {} physical node(s) have no counterpart and are ignored",
            v.unmatched_conceptual,
            v.unmatched_physical
        );
    }
    Ok(dn)
}

fn emit(output: Option<&Path>, text: &str) -> Outcome {
    let written = match output {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    written.map_err(|e| {
        let target = output.map_or("stdout".to_owned(), |p| p.display().to_string());
        Failure::new(2, format!("{target}: {e}"))
    })
}

fn run_dcs(args: &DcsArgs) -> Outcome {
    let dn = load_dual(&args.inputs)?;
    let opts = DcsOptions {
        delta: args.align.delta,
        gap_rule: args.align.gap_mode,
        connectivity: args.connectivity,
        repair: !args.no_repair,
    };
    let result = match extract_dcs(&dn, &opts) {
        Ok(r) => r,
        Err(Error::IrreparableDisconnection { partial: Some(partial) }) => {
            emit(args.output.as_deref(), &DcsReport::new(&dn, &partial).to_json())?;
            return Err(Failure::new(1, Error::IrreparableDisconnection { partial: None }.to_string()));
        }
        Err(e) => return Err(e.into()),
    };
    for w in &result.warnings {
        log::warn!("{w}");
    }
    emit(args.output.as_deref(), &DcsReport::new(&dn, &result).to_json())?;
    if let Some(dir) = &args.dot_dir {
        fs::create_dir_all(dir).map_err(|e| Failure::new(2, format!("{}: {e}", dir.display())))?;
        let (core_c, conn_c) = (dn.conceptual_set(&result.nodes)?, dn.conceptual_set(&result.connectors)?);
        let (core_p, conn_p) = (dn.physical_set(&result.nodes)?, dn.physical_set(&result.connectors)?);
        emit(Some(&dir.join("conceptual.dot")), &highlight_dot(dn.conceptual(), &core_c, &conn_c))?;
        emit(Some(&dir.join("physical.dot")), &highlight_dot(dn.physical(), &core_p, &conn_p))?;
    }
    Ok(())
}

fn run_align(args: &AlignArgs) -> Outcome {
    let dn = load_dual(&args.inputs)?;
    let al = build_alignment_graph(&dn, args.align.delta, args.align.gap_mode)?;
    emit(args.output.as_deref(), &export_alignment(&al, args.format))
}

fn run_peel(args: &PeelArgs) -> Outcome {
    let g = load_graph(&args.graph, !args.unweighted)?;
    let (greedy, trace) = peel(&g).map_err(|e| Failure::from_error(&e, Some(&args.graph)))?;
    let result = if args.exact { exact_densest(&g, DEFAULT_EXACT_LIMIT)? } else { greedy };
    emit(args.output.as_deref(), &PeelReport::new(&g, &result, &trace).to_json())
}

fn run_oracle(args: &OracleArgs) -> Outcome {
    let dn = load_dual(&args.inputs)?;
    let result = brute_force_dcs(&dn, args.max_oracle_nodes)?;
    let bound = args.max_oracle_nodes.unwrap_or(dn.pair_count()).min(dn.pair_count());
    emit(args.output.as_deref(), &OracleReport::new(&dn, &result, bound).to_json())
}

fn run_gen(args: &GenArgs) -> Outcome {
    let params = PlantedParams {
        background_weight_cap: args.background_weight_cap,
        background_edge_prob: args.background_edge_prob,
        ..PlantedParams::new(args.nodes, args.planted_size, args.seed)
    };
    let inst = generate_planted_with(&params)?;
    let dir = &args.output;
    let io_failure = |path: &Path, e: &dyn std::fmt::Display| Failure::new(2, format!("{}: {e}", path.display()));
    fs::create_dir_all(dir).map_err(|e| io_failure(dir, &e))?;
    let write = |name: &str, fill: &dyn Fn(&mut Vec<u8>) -> dnalign::Result<()>| -> Outcome {
        let path = dir.join(name);
        let mut buf = Vec::new();
        fill(&mut buf).map_err(|e| io_failure(&path, &e))?;
        fs::write(&path, buf).map_err(|e| io_failure(&path, &e))
    };
    let dn = &inst.dual;
    write("conceptual.txt", &|b| write_edge_list(dn.conceptual(), true, b))?;
    write("physical.txt", &|b| write_edge_list(dn.physical(), false, b))?;
    write("correspondence.txt", &|b| write_correspondence(dn.correspondence(), b))?;
    write("planted.txt", &|b| {
        for v in inst.planted.iter() {
            writeln!(b, "{}", dn.conceptual_label(v))?;
        }
        Ok(())
    })?;
    Ok(())
}

fn run_stats(args: &StatsArgs) -> Outcome {
    let dn = load_dual(&args.inputs)?;
    emit(args.output.as_deref(), &StatsReport::new(&dn).to_json())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = match &cli.command {
        Command::Dcs(a) => run_dcs(a),
        Command::Align(a) => run_align(a),
        Command::Peel(a) => run_peel(a),
        Command::Oracle(a) => run_oracle(a),
        Command::Gen(a) => run_gen(a),
        Command::Stats(a) => run_stats(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
