//! Command-line front end: single runs, sweeps, conflict audits, the
//! exact solver, and certificate verification of stored transcripts.
//!
//! Exit codes: 0 success, 1 runtime failure (including a failed
//! verification), 2 flag errors. Diagnostics go to standard error.
//! Summaries print numbers with 6 significant digits; the JSON and CSV
//! files keep full precision. `PERVOTE_CONFLICT_BUDGET` overrides the
//! conflict-enumeration budget everywhere.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::conflict::{self, DEFAULT_CHECK_BUDGET};
use crate::error::{Error, Result};
use crate::game::GameParams;
use crate::harness::{self, ExperimentSpec, CERTIFICATE_TOLERANCE};
use crate::io;
use crate::strategies::{minimax_solve, SolveLimits};

pub const ENV_CONFLICT_BUDGET: &str = "PERVOTE_CONFLICT_BUDGET";

#[derive(Parser)]
#[command(
    name = "pervote",
    version,
    about = "Perpetual approval voting under bounded conflicts: runs, sweeps, audits, exact solving, certificate checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Play one matchup and print its bound report.
    Run(RunArgs),
    /// Run a grid of experiments from a JSON config into a CSV table.
    Sweep(SweepArgs),
    /// Compute the exact conflict numbers of a stored transcript.
    Audit(AuditArgs),
    /// Solve a toy game exactly and optionally export the decision table.
    Solve(SolveArgs),
    /// Re-check the weight-sum certificate of a stored transcript.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct RunArgs {
    /// JSON file holding a full experiment spec (alternative to flags).
    #[arg(long, conflicts_with_all = ["k", "n", "t", "c", "strategy", "adversary", "seed", "epsilon", "repeats", "out"])]
    config: Option<PathBuf>,
    /// Option count.
    #[arg(long, required_unless_present = "config")]
    k: Option<u32>,
    /// Agent count.
    #[arg(long, required_unless_present = "config")]
    n: Option<u32>,
    /// Round count.
    #[arg(long, required_unless_present = "config")]
    t: Option<u32>,
    /// Conflict bound (omit when unknown).
    #[arg(long)]
    c: Option<u32>,
    /// One of: exponential_weights, approval_vote, perpetual_equality,
    /// harmonic_win_weights, minimax_oracle.
    #[arg(long, required_unless_present = "config")]
    strategy: Option<String>,
    /// Adversary spec, e.g. group_product:M=2 or random:density=0.9,seed=7.
    #[arg(long, required_unless_present = "config")]
    adversary: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Learning-rate override for exponential_weights.
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long, default_value_t = 1)]
    repeats: u32,
    /// Directory for transcripts and the report.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// JSON file holding an array of experiment specs.
    #[arg(long)]
    config: PathBuf,
    /// CSV output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AuditArgs {
    /// JSON file holding {"transcript": ..., "max_subset_size": ...}.
    #[arg(long, conflicts_with_all = ["transcript", "max_subset_size"])]
    config: Option<PathBuf>,
    /// Transcript JSON produced by `run`.
    #[arg(long, required_unless_present = "config")]
    transcript: Option<PathBuf>,
    /// Cap the enumerated subset size below k (tuple numbers are skipped
    /// when capped, they range over full k-tuples).
    #[arg(long)]
    max_subset_size: Option<u32>,
}

#[derive(serde::Deserialize)]
struct AuditConfig {
    transcript: PathBuf,
    #[serde(default)]
    max_subset_size: Option<u32>,
}

#[derive(Args)]
struct SolveArgs {
    /// JSON file holding game params (alternative to flags).
    #[arg(long, conflicts_with_all = ["k", "n", "t", "c"])]
    config: Option<PathBuf>,
    #[arg(long, required_unless_present = "config")]
    k: Option<u32>,
    #[arg(long, required_unless_present = "config")]
    n: Option<u32>,
    #[arg(long, required_unless_present = "config")]
    t: Option<u32>,
    /// Conflict bound the adversary must respect.
    #[arg(long, required_unless_present = "config")]
    c: Option<u32>,
    /// Raise the solver's dimension limits deliberately.
    #[arg(long)]
    max_agents: Option<u32>,
    #[arg(long)]
    max_options: Option<u32>,
    #[arg(long)]
    max_rounds: Option<u32>,
    /// Write the decision table as JSON.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// JSON file holding {"transcript": ..., "epsilon": ...}.
    #[arg(long, conflicts_with_all = ["transcript", "epsilon"])]
    config: Option<PathBuf>,
    /// Transcript JSON produced by an exponential_weights run.
    #[arg(long, required_unless_present = "config")]
    transcript: Option<PathBuf>,
    /// Learning rate; defaults to the transcript's recorded value.
    #[arg(long)]
    epsilon: Option<f64>,
}

#[derive(serde::Deserialize)]
struct VerifyConfig {
    transcript: PathBuf,
    #[serde(default)]
    epsilon: Option<f64>,
}

/// Parses argv and executes; returns the process exit code.
pub fn main() -> i32 {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Run(args) => cmd_run(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Audit(args) => cmd_audit(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn conflict_budget() -> Result<u128> {
    match std::env::var(ENV_CONFLICT_BUDGET) {
        Ok(raw) => raw.parse().map_err(|_| {
            Error::InvalidInput(format!("{ENV_CONFLICT_BUDGET} must be an integer, got '{raw}'"))
        }),
        Err(_) => Ok(DEFAULT_CHECK_BUDGET),
    }
}

/// 6 significant digits for human-facing numbers.
fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn opt_sig6(x: Option<f64>) -> String {
    x.map(sig6).unwrap_or_else(|| "n/a".into())
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn cmd_run(args: RunArgs) -> Result<i32> {
    let spec: ExperimentSpec = match &args.config {
        Some(path) => read_json(path)?,
        None => ExperimentSpec {
            params: GameParams::new(
                args.k.expect("required"),
                args.n.expect("required"),
                args.t.expect("required"),
                args.c,
            )?,
            strategy: args.strategy.as_deref().expect("required").parse()?,
            epsilon: args.epsilon,
            adversary: args.adversary.as_deref().expect("required").parse()?,
            seed: args.seed,
            repeats: args.repeats,
            output: args.out.clone(),
        },
    };

    let outcome = harness::run_experiment_with_budget(&spec, conflict_budget()?)?;
    let r = &outcome.report;
    let p = &spec.params;
    println!(
        "k={} n={} t={} c={} strategy={} adversary={} seed={} repeats={}",
        p.options,
        p.agents,
        p.rounds,
        p.conflict_bound.map(|c| c.to_string()).unwrap_or_else(|| "unknown".into()),
        spec.strategy,
        spec.adversary,
        spec.seed,
        spec.repeats
    );
    println!(
        "max_dissatisfaction={} mean_dissatisfaction={}",
        r.observed_max_dissatisfaction,
        sig6(r.mean_dissatisfaction)
    );
    println!(
        "thm2_bound={} ratio={} lower_bound_floor={}",
        opt_sig6(r.thm2_bound),
        opt_sig6(r.thm2_bound.map(|b| r.observed_max_dissatisfaction as f64 / b)),
        opt_sig6(r.lower_bound_floor)
    );
    println!(
        "conflict_number={} eq1_certificate={}",
        r.conflict_number.map(|c| c.to_string()).unwrap_or_else(|| "over-budget".into()),
        match r.eq1_certificate_ok {
            Some(true) => "ok",
            Some(false) => "VIOLATED",
            None => "n/a",
        }
    );
    for path in &outcome.written {
        println!("wrote {}", path.display());
    }
    Ok(if r.eq1_certificate_ok == Some(false) { 1 } else { 0 })
}

fn cmd_sweep(args: SweepArgs) -> Result<i32> {
    let specs: Vec<ExperimentSpec> = read_json(&args.config)?;
    let rows = harness::sweep(&specs, conflict_budget()?);
    let failures = rows.iter().filter(|r| r.error.is_some()).count();
    let csv = harness::sweep_csv(&rows);
    match &args.out {
        Some(path) => {
            std::fs::write(path, &csv)?;
            println!("wrote {} rows to {}", rows.len(), path.display());
        }
        None => print!("{csv}"),
    }
    if failures > 0 {
        eprintln!("{failures} of {} rows failed; see the error column", rows.len());
    }
    Ok(0)
}

fn cmd_audit(args: AuditArgs) -> Result<i32> {
    let (transcript, max_subset_size) = match &args.config {
        Some(path) => {
            let config: AuditConfig = read_json(path)?;
            (config.transcript, config.max_subset_size)
        }
        None => (args.transcript.expect("required"), args.max_subset_size),
    };
    let (play, _meta) = io::read_transcript(&transcript)?;
    let budget = conflict_budget()?;
    let k = play.params.options;
    let cap = max_subset_size.unwrap_or(k).min(k);
    if cap < 1 {
        return Err(Error::InvalidInput("max_subset_size must be at least 1".into()));
    }

    if cap < k {
        let (number, witness) = conflict::subset_conflict_number(&play, cap, budget)?;
        println!("subset_conflict_number={number} (subset sizes capped at {cap})");
        println!("witness_subset={witness:?}");
        println!("tuple_conflict_number=skipped (cap below k={k})");
    } else {
        let report = conflict::conflict_report_with_budget(&play, budget)?;
        println!("subset_conflict_number={}", report.subset_conflict_number);
        println!("witness_subset={:?}", report.witness_subset);
        println!("tuple_conflict_number={}", report.tuple_conflict_number);
        println!("witness_tuple={:?}", report.witness_tuple);
    }
    Ok(0)
}

fn cmd_solve(args: SolveArgs) -> Result<i32> {
    let params: GameParams = match &args.config {
        Some(path) => read_json(path)?,
        None => GameParams::new(
            args.k.expect("required"),
            args.n.expect("required"),
            args.t.expect("required"),
            args.c,
        )?,
    };
    let defaults = SolveLimits::default();
    let limits = SolveLimits {
        max_agents: args.max_agents.unwrap_or(defaults.max_agents),
        max_options: args.max_options.unwrap_or(defaults.max_options),
        max_rounds: args.max_rounds.unwrap_or(defaults.max_rounds),
    };
    let mut solved = minimax_solve(&params, &limits)?;
    println!(
        "value={} positions_analyzed={}",
        solved.value(),
        solved.positions_analyzed()
    );
    if let Some(path) = &args.out {
        let table = solved.decision_table(100_000)?;
        let text = serde_json::to_string_pretty(&table).expect("table serializes");
        std::fs::write(path, text)?;
        println!("wrote {}", path.display());
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<i32> {
    let (transcript, flag_epsilon) = match &args.config {
        Some(path) => {
            let config: VerifyConfig = read_json(path)?;
            (config.transcript, config.epsilon)
        }
        None => (args.transcript.expect("required"), args.epsilon),
    };
    let (play, meta) = io::read_transcript(&transcript)?;
    let epsilon = match flag_epsilon.or(meta.as_ref().and_then(|m| m.epsilon)) {
        Some(e) => e,
        None => {
            return Err(Error::InvalidInput(
                "no learning rate: pass --epsilon or use a transcript with recorded metadata"
                    .into(),
            ))
        }
    };
    let report = harness::check_certificate(&play, epsilon, CERTIFICATE_TOLERANCE)?;
    if let Some(round) = report.first_argmin_violation {
        eprintln!(
            "round {round}: recorded decision does not attain the minimal disapprover mass"
        );
        return Ok(1);
    }
    if !report.ok {
        eprintln!(
            "agent {}: weight exceeds the certificate budget (slack {})",
            report.worst_agent,
            sig6(report.slack)
        );
        return Ok(1);
    }
    println!(
        "certificate holds: epsilon={} slack={} worst_agent={}",
        sig6(report.epsilon),
        sig6(report.slack),
        report.worst_agent
    );
    Ok(0)
}
