//! Command-line front end.
//!
//! Results go to standard output (or `--out`), progress and errors to
//! standard error. Exit codes: 0 success, 1 verification failure, 2 usage or
//! parse error, 3 internal limit.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{replay, Configuration, GoalMode};
use crate::graph::{parse_edge_list, parse_graph6, Graph, VertexId};
use crate::solver::verify::{run_verification, VerifyOptions};
use crate::solver::{
    find_unsolvable_witness, pebbling_number, singular_pebbling_number, solvable, ExtendedCount,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_LIMIT: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "pebbling",
    version,
    about = "Exact classical and singular graph pebbling"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads (defaults to the available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,

    /// Write results here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether one configuration can meet the goal on a target.
    Solve(SolveArgs),
    /// Compute the pebbling number.
    Pi(GraphSource),
    /// Compute the singular pebbling number.
    Pis(GraphSource),
    /// Compare both numbers on all small connected graphs and run the
    /// structural checks.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Complete,
    Path,
    Cycle,
    Star,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    AtLeastOne,
    ExactlyOne,
}

impl From<Mode> for GoalMode {
    fn from(m: Mode) -> GoalMode {
        match m {
            Mode::AtLeastOne => GoalMode::AtLeastOne,
            Mode::ExactlyOne => GoalMode::ExactlyOne,
        }
    }
}

#[derive(Debug, Clone, Args)]
#[group(skip)]
#[command(group(ArgGroup::new("source").required(true).args(["graph", "edges", "family"])))]
pub struct GraphSource {
    /// Graph in graph6 format.
    #[arg(long)]
    pub graph: Option<String>,

    /// Edge-list file ("n <count>" then one "u v" pair per line).
    #[arg(long)]
    pub edges: Option<PathBuf>,

    /// Named construction, used with --n.
    #[arg(long, value_enum, requires = "n")]
    pub family: Option<Family>,

    /// Number of vertices for --family.
    #[arg(long, requires = "family")]
    pub n: Option<usize>,
}

impl GraphSource {
    pub fn load(&self) -> Result<Graph> {
        if let Some(g6) = &self.graph {
            return parse_graph6(g6);
        }
        if let Some(path) = &self.edges {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
            return parse_edge_list(&text);
        }
        let n = self
            .n
            .ok_or_else(|| Error::Usage("--family needs --n".into()))?;
        match self.family {
            Some(Family::Complete) => Graph::complete(n),
            Some(Family::Path) => Graph::path(n),
            Some(Family::Cycle) => Graph::cycle(n),
            Some(Family::Star) => Graph::star(n),
            None => Err(Error::Usage("no graph given".into())),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub source: GraphSource,

    /// Pebble counts, comma-separated in vertex order, e.g. "0,4,0".
    #[arg(long)]
    pub config: String,

    /// Target vertex label (0-based).
    #[arg(long)]
    pub target: usize,

    /// Goal on the target: at least one pebble, or exactly one.
    #[arg(long, value_enum)]
    pub mode: Mode,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Largest graph order in the sweep (3..=7).
    #[arg(long, default_value_t = 5)]
    pub n_max: usize,

    /// Largest configuration size in the structural checks and crosscheck.
    #[arg(long, default_value_t = 8)]
    pub t_max: u32,

    /// Sizes above the singular pebbling number to brute-force.
    #[arg(long, default_value_t = 4)]
    pub window: u32,

    /// Largest graph order for the crosscheck and window validation.
    #[arg(long, default_value_t = 4)]
    pub exhaustive_n_max: usize,

    /// Fill in elapsed_ms fields (output is then no longer reproducible).
    #[arg(long)]
    pub timing: bool,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::LimitExceeded { .. } | Error::Internal(_) => EXIT_LIMIT,
        _ => EXIT_USAGE,
    }
}

#[derive(Serialize)]
struct SolveReport {
    graph6: String,
    n: usize,
    config: Configuration,
    target: VertexId,
    mode: GoalMode,
    solvable: bool,
    witness: Option<Vec<[usize; 2]>>,
    states_explored: u64,
}

#[derive(Serialize)]
struct NumberReport {
    graph6: String,
    n: usize,
    parameter: &'static str,
    value: ExtendedCount,
    witness_config: Option<Configuration>,
    witness_target: Option<VertexId>,
}

fn csv_line(fields: &[String]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(fields).expect("in-memory write");
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8")
}

fn render_solve(r: &SolveReport, witness_text: &str, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("serializes") + "\n",
        Format::Csv => {
            let header = [
                "graph6",
                "n",
                "config",
                "target",
                "mode",
                "solvable",
                "witness",
                "states_explored",
            ];
            csv_line(&header.map(String::from))
                + &csv_line(&[
                    r.graph6.clone(),
                    r.n.to_string(),
                    r.config.to_string(),
                    r.target.to_string(),
                    r.mode.to_string(),
                    r.solvable.to_string(),
                    witness_text.to_string(),
                    r.states_explored.to_string(),
                ])
        }
        Format::Human => {
            let mut s = format!(
                "graph {} (n = {}), target {}, mode {}, configuration {}\n",
                r.graph6, r.n, r.target, r.mode, r.config
            );
            s += if r.solvable {
                "solvable\n"
            } else {
                "unsolvable\n"
            };
            if r.solvable {
                let shown = if witness_text.is_empty() {
                    "(no moves needed)"
                } else {
                    witness_text
                };
                s += &format!("witness: {shown}\n");
            }
            s += &format!("states explored: {}\n", r.states_explored);
            s
        }
    }
}

fn render_number(r: &NumberReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("serializes") + "\n",
        Format::Csv => {
            let header = [
                "graph6",
                "n",
                "parameter",
                "value",
                "witness_config",
                "witness_target",
            ];
            csv_line(&header.map(String::from))
                + &csv_line(&[
                    r.graph6.clone(),
                    r.n.to_string(),
                    r.parameter.to_string(),
                    r.value.to_string(),
                    r.witness_config
                        .as_ref()
                        .map(|c| c.to_string())
                        .unwrap_or_default(),
                    r.witness_target.map(|v| v.to_string()).unwrap_or_default(),
                ])
        }
        Format::Human => {
            let mut s = format!("{} = {}\n", r.parameter, r.value);
            if let (Some(c), Some(v), ExtendedCount::Finite(t)) =
                (&r.witness_config, r.witness_target, r.value)
            {
                s += &format!(
                    "blocking configuration of {} pebble(s): {c} with target {v}\n",
                    t - 1
                );
            }
            s
        }
    }
}

fn cmd_solve(args: &SolveArgs, format: Format) -> Result<String> {
    let g = args.source.load()?;
    let c: Configuration = args.config.parse()?;
    let target = VertexId(args.target);
    let mode = GoalMode::from(args.mode);
    let result = solvable(&g, &c, target, mode)?;
    if let Some(w) = &result.witness {
        let end = replay(&g, &c, w)?;
        if !mode.accepts(end.get(target)) {
            return Err(Error::Internal(format!(
                "witness from {c} does not reach the goal"
            )));
        }
    }
    let witness_text = result
        .witness
        .as_ref()
        .map(|w| {
            w.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .unwrap_or_default();
    let report = SolveReport {
        graph6: g.to_string(),
        n: g.order(),
        config: c,
        target,
        mode,
        solvable: result.solvable,
        witness: result
            .witness
            .map(|w| w.iter().map(|m| [m.source.0, m.destination.0]).collect()),
        states_explored: result.states_explored,
    };
    Ok(render_solve(&report, &witness_text, format))
}

fn cmd_number(source: &GraphSource, mode: GoalMode, format: Format) -> Result<String> {
    let g = source.load()?;
    let (parameter, value) = match mode {
        GoalMode::AtLeastOne => ("pi", pebbling_number(&g)?),
        GoalMode::ExactlyOne => ("pi_s", singular_pebbling_number(&g)?),
    };
    let witness = match value {
        ExtendedCount::Finite(t) => find_unsolvable_witness(&g, t - 1, mode)?,
        ExtendedCount::Infinite => None,
    };
    if let Some((c, v)) = &witness {
        if solvable(&g, c, *v, mode)?.solvable {
            return Err(Error::Internal(format!(
                "blocking configuration {c} is solvable"
            )));
        }
    }
    let (witness_config, witness_target) = witness.unzip();
    let report = NumberReport {
        graph6: g.to_string(),
        n: g.order(),
        parameter,
        value,
        witness_config,
        witness_target,
    };
    Ok(render_number(&report, format))
}

fn emit(text: &str, out_path: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<()> {
    match out_path {
        Some(p) => fs::write(p, text)
            .map_err(|e| Error::Usage(format!("cannot write {}: {e}", p.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Error::Usage(format!("cannot write output: {e}"))),
    }
}

/// Rendered results plus the exit code and a closing diagnostic line.
struct Outcome {
    text: String,
    code: u8,
    note: Option<String>,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome {
            text,
            code: EXIT_OK,
            note: None,
        }
    }
}

fn execute(cfg: &RunConfig) -> Result<Outcome> {
    match &cfg.command {
        Command::Solve(args) => cmd_solve(args, cfg.format).map(Outcome::ok),
        Command::Pi(src) => cmd_number(src, GoalMode::AtLeastOne, cfg.format).map(Outcome::ok),
        Command::Pis(src) => cmd_number(src, GoalMode::ExactlyOne, cfg.format).map(Outcome::ok),
        Command::Verify(args) => {
            let opts = VerifyOptions {
                n_max: args.n_max,
                t_max: args.t_max,
                window: args.window,
                exhaustive_n_max: args.exhaustive_n_max,
                timing: args.timing,
            };
            let report = run_verification(&opts)?;
            let text = match cfg.format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
                Format::Human => report.to_human(),
            };
            let (code, note) = if report.pass {
                let summary = format!(
                    "PASS: {} graphs, {} checks",
                    report.records.len(),
                    report.checks.len()
                );
                (EXIT_OK, summary)
            } else {
                let first = report
                    .failures
                    .first()
                    .map(String::as_str)
                    .unwrap_or("unknown");
                (EXIT_VERIFY_FAILED, format!("FAIL: {first}"))
            };
            Ok(Outcome {
                text,
                code,
                note: Some(note),
            })
        }
    }
}

/// Runs a parsed command on a thread pool of the requested size and returns
/// the process exit code.
pub fn run(cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cfg.jobs {
        builder = builder.num_threads(usize::from(jobs));
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot start worker threads: {e}");
            return EXIT_LIMIT;
        }
    };
    if let Command::Verify(args) = &cfg.command {
        let _ = writeln!(
            stderr,
            "verifying connected graphs up to n = {} on {} thread(s) ...",
            args.n_max,
            pool.current_num_threads()
        );
    }
    let result = pool
        .install(|| execute(cfg))
        .and_then(|o| emit(&o.text, cfg.out.as_ref(), stdout).map(|_| o));
    match result {
        Ok(o) => {
            if let Some(note) = o.note {
                let _ = writeln!(stderr, "{note}");
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    run(&cfg, &mut io::stdout().lock(), &mut io::stderr().lock())
}
