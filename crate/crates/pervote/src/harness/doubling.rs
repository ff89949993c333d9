//! The doubling wrapper: exponential weights without knowing `C` or `T`.
//!
//! The runner plays epochs. Each epoch instantiates fresh weights with
//! the learning rate scheduled for the current guesses, then monitors
//! the epoch's own maximum dissatisfaction; when that exceeds the bound
//! expression for the current guess of `C`, the guess doubles and a new
//! epoch starts. When `T` is unknown its guess doubles whenever the
//! epoch has used up that many rounds. The adversary is never reset —
//! epochs are a bookkeeping device of the decision maker, and cumulative
//! dissatisfaction is what the final transcript reports. The trigger
//! uses the bare bound expression with constant 1: any fixed constant
//! keeps the guess within a factor 2 of a conflict number the play never
//! exceeds, and 1 is reproducible.

use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::adversaries::Adversary;
use crate::error::Result;
use crate::game::{recompute_dissatisfaction, GameParams, PlayRecord};
use crate::harness::certificate::thm2_bound;
use crate::strategies::{epsilon_schedule, WeightState};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EpochReport {
    /// 1-based, inclusive round range the epoch covered.
    pub start_round: u32,
    pub end_round: u32,
    pub conflict_guess: u32,
    pub rounds_guess: u32,
    pub epsilon: f64,
    /// Maximum per-agent dissatisfaction incurred within this epoch alone.
    pub epoch_max_dissatisfaction: u32,
    /// The bound expression the epoch was held to.
    pub bound: f64,
}

#[derive(Debug, Clone)]
pub struct DoublingOutcome {
    pub play: PlayRecord,
    pub epochs: Vec<EpochReport>,
    pub final_conflict_guess: u32,
    pub final_rounds_guess: u32,
}

impl DoublingOutcome {
    pub fn total_max_dissatisfaction(&self) -> u32 {
        self.play.max_dissatisfaction()
    }
}

/// Plays the full `params.rounds`-round game with exponential weights
/// while guessing whichever of `C` (`known_c`) and `T` (`known_t`) is
/// not supplied. Unknown guesses start at 1 and double on their trigger.
pub fn doubling_runner(
    params: &GameParams,
    adversary: &mut dyn Adversary,
    known_c: Option<u32>,
    known_t: Option<u32>,
    seed: u64,
) -> Result<DoublingOutcome> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut c_guess = known_c.unwrap_or(1).max(1);
    let mut t_guess = known_t.unwrap_or(1).max(1);

    let mut profiles = Vec::with_capacity(params.rounds as usize);
    let mut decisions = Vec::with_capacity(params.rounds as usize);
    let mut epochs: Vec<EpochReport> = Vec::new();

    let mut round = 1u32;
    while round <= params.rounds {
        let epoch_params = GameParams {
            options: params.options,
            agents: params.agents,
            rounds: t_guess,
            conflict_bound: Some(c_guess),
        };
        let epsilon = epsilon_schedule(&epoch_params)?;
        let bound = thm2_bound(&epoch_params).expect("bound defined for known C and N >= 2");
        let mut state = WeightState::new(params.agents, epsilon)?;
        let mut epoch_dissat = vec![0u32; params.agents as usize];
        let start_round = round;
        let mut epoch_rounds = 0u32;
        let mut double_c = false;
        let mut double_t = false;

        while round <= params.rounds {
            let profile = adversary.next_profile(params, round, &decisions, &mut rng)?;
            profile.validate(params, round)?;
            let chosen = state.choose(params.options, &profile);
            state.update(&profile, chosen);
            for (d, set) in epoch_dissat.iter_mut().zip(&profile.approvals) {
                if !set.contains(chosen) {
                    *d += 1;
                }
            }
            profiles.push(profile);
            decisions.push(chosen);
            round += 1;
            epoch_rounds += 1;

            let epoch_max = epoch_dissat.iter().copied().max().unwrap_or(0);
            if known_c.is_none() && (epoch_max as f64) > bound {
                double_c = true;
                break;
            }
            if known_t.is_none() && epoch_rounds >= t_guess {
                double_t = true;
                break;
            }
        }

        epochs.push(EpochReport {
            start_round,
            end_round: round - 1,
            conflict_guess: c_guess,
            rounds_guess: t_guess,
            epsilon,
            epoch_max_dissatisfaction: epoch_dissat.iter().copied().max().unwrap_or(0),
            bound,
        });
        if double_c {
            c_guess *= 2;
        }
        if double_t {
            t_guess = t_guess.saturating_mul(2);
        }
    }

    let dissatisfaction = recompute_dissatisfaction(&profiles, &decisions)?;
    Ok(DoublingOutcome {
        play: PlayRecord { params: *params, profiles, decisions, dissatisfaction },
        epochs,
        final_conflict_guess: c_guess,
        final_rounds_guess: t_guess,
    })
}
