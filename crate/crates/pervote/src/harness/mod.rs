//! Experiment orchestration: single runs, the doubling wrapper for an
//! unknown conflict bound, parameter sweeps, and bound evaluation.

pub mod certificate;
pub mod doubling;
pub mod sweep;

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

pub use certificate::{check_certificate, thm2_bound, CertificateReport, CERTIFICATE_TOLERANCE};
pub use doubling::{doubling_runner, DoublingOutcome, EpochReport};
pub use sweep::{sweep, sweep_csv, SweepRow};

use crate::adversaries::AdversarySpec;
use crate::conflict::{conflict_report_with_budget, DEFAULT_CHECK_BUDGET};
use crate::error::{Error, Result};
use crate::game::{run_game, GameParams, PlayRecord};
use crate::io::RunMeta;
use crate::strategies::{build_strategy, epsilon_schedule, StrategyId};

/// A fully specified experiment: dimensions, matchup, seeding, and where
/// transcripts go.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub params: GameParams,
    pub strategy: StrategyId,
    /// Overrides the scheduled learning rate for exponential weights.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    pub adversary: AdversarySpec,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_repeats")]
    pub repeats: u32,
    /// Directory for transcripts and the report; nothing is written when
    /// absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
}

fn default_repeats() -> u32 {
    1
}

impl ExperimentSpec {
    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        self.adversary.validate(&self.params)?;
        if self.repeats < 1 {
            return Err(Error::InvalidInput("repeats must be at least 1".into()));
        }
        Ok(())
    }
}

/// Observed outcome of an experiment against the theory it should obey.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundReport {
    /// `T^(1 - 1/(k+1)) * (C k ln N)^(1/(k+1))`, when `C` is known.
    pub thm2_bound: Option<f64>,
    /// Weight-sum certificate verdict; only exponential-weights runs
    /// produce one.
    pub eq1_certificate_ok: Option<bool>,
    pub observed_max_dissatisfaction: u32,
    pub mean_dissatisfaction: f64,
    /// The matchup's proven floor on max dissatisfaction, when one
    /// applies: `M^(k-1)/k` for the product construction, `C/k` for the
    /// warm-up, `T` for plurality against its killer, `floor(T/2)` for a
    /// compassionate rule against its killer.
    pub lower_bound_floor: Option<f64>,
    /// Exact conflict number of the play, when enumeration fit the
    /// budget.
    pub conflict_number: Option<u32>,
}

/// Everything a run produced: the report, transcripts in memory, and the
/// files written (empty unless an output directory was configured).
#[derive(Debug)]
pub struct ExperimentOutcome {
    pub report: BoundReport,
    pub plays: Vec<PlayRecord>,
    pub written: Vec<PathBuf>,
}

/// The proven floor for a (strategy, adversary) matchup, when the
/// construction guarantees one.
pub fn lower_bound_floor(
    strategy: StrategyId,
    adversary: &AdversarySpec,
    params: &GameParams,
) -> Option<f64> {
    match adversary {
        AdversarySpec::GroupProduct { group_size } => {
            // Any strategy loses at least M^(k-1)/k to this adversary.
            let m = *group_size as f64;
            Some(m.powi(params.options as i32 - 1) / params.options as f64)
        }
        AdversarySpec::WarmupCk { conflicts } => {
            Some(*conflicts as f64 / params.options as f64)
        }
        AdversarySpec::MajorityKiller if strategy == StrategyId::ApprovalVote => {
            Some(params.rounds as f64)
        }
        AdversarySpec::CompassionKiller if strategy == StrategyId::PerpetualEquality => {
            Some((params.rounds / 2) as f64)
        }
        _ => None,
    }
}

/// Runs the experiment under the default conflict-enumeration budget.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentOutcome> {
    run_experiment_with_budget(spec, DEFAULT_CHECK_BUDGET)
}

/// Runs `spec.repeats` games, writes transcripts and a report when an
/// output directory is configured, and evaluates the weight-sum
/// certificate for exponential-weights runs. Files already written are
/// removed if any later step fails.
pub fn run_experiment_with_budget(spec: &ExperimentSpec, budget: u128) -> Result<ExperimentOutcome> {
    spec.validate()?;
    let mut written: Vec<PathBuf> = Vec::new();
    match run_all(spec, budget, &mut written) {
        Ok(outcome) => Ok(outcome),
        Err(e) => {
            for path in &written {
                let _ = std::fs::remove_file(path);
            }
            Err(e)
        }
    }
}

fn run_all(spec: &ExperimentSpec, budget: u128, written: &mut Vec<PathBuf>) -> Result<ExperimentOutcome> {
    let epsilon = match spec.strategy {
        StrategyId::ExponentialWeights => Some(match spec.epsilon {
            Some(e) => e,
            None => epsilon_schedule(&spec.params)?,
        }),
        _ => spec.epsilon,
    };

    if let Some(dir) = &spec.output {
        std::fs::create_dir_all(dir)?;
    }

    let mut plays = Vec::with_capacity(spec.repeats as usize);
    let mut certificate_ok: Option<bool> = None;
    let mut conflict_number: Option<u32> = None;
    let mut saw_budget_refusal = false;

    for rep in 0..spec.repeats {
        let seed = spec.seed.wrapping_add(rep as u64);
        let mut strategy = build_strategy(spec.strategy, &spec.params, epsilon)?;
        let mut adversary = spec.adversary.build(&spec.params, seed)?;
        let play = run_game(&spec.params, strategy.as_mut(), adversary.as_mut(), seed)?;

        if spec.strategy == StrategyId::ExponentialWeights {
            let report = check_certificate(
                &play,
                epsilon.expect("epsilon computed for exponential weights"),
                CERTIFICATE_TOLERANCE,
            )?;
            certificate_ok = Some(certificate_ok.unwrap_or(true) && report.all_ok());
        }

        match conflict_report_with_budget(&play, budget) {
            Ok(report) => {
                conflict_number =
                    Some(conflict_number.unwrap_or(0).max(report.subset_conflict_number));
            }
            Err(Error::BudgetExceeded { .. }) => saw_budget_refusal = true,
            Err(e) => return Err(e),
        }

        if let Some(dir) = &spec.output {
            let meta = RunMeta {
                strategy: spec.strategy.to_string(),
                adversary: spec.adversary.to_string(),
                seed,
                epsilon,
            };
            let path = dir.join(format!("run_{rep}.json"));
            crate::io::write_transcript(&path, &play, Some(&meta))?;
            written.push(path);
            let csv_path = dir.join(format!("run_{rep}.csv"));
            std::fs::write(&csv_path, crate::io::play_to_csv(&play))?;
            written.push(csv_path);
        }

        plays.push(play);
    }

    let report = BoundReport {
        thm2_bound: thm2_bound(&spec.params),
        eq1_certificate_ok: certificate_ok,
        observed_max_dissatisfaction: plays.iter().map(|p| p.max_dissatisfaction()).max().unwrap_or(0),
        mean_dissatisfaction: plays.iter().map(|p| p.mean_dissatisfaction()).sum::<f64>()
            / plays.len() as f64,
        lower_bound_floor: lower_bound_floor(spec.strategy, &spec.adversary, &spec.params),
        conflict_number: if saw_budget_refusal { None } else { conflict_number },
    };

    if let Some(dir) = &spec.output {
        let path = dir.join("report.json");
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        std::fs::write(&path, text)?;
        written.push(path);
    }

    Ok(ExperimentOutcome { report, plays, written: written.clone() })
}
