//! Decision maker strategies.
//!
//! Each strategy is a state machine advanced by a single owner: `choose`
//! sees the current round's profile before committing to an option, and
//! `observe` is called with the outcome so history-dependent rules can
//! update their state. All strategies here are deterministic.

pub mod baselines;
pub mod exponential_weights;
pub mod minimax;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{ApprovalProfile, GameParams};

pub use baselines::{
    approval_vote_choose, compassion_violation_rounds, harmonic_win_weights_choose,
    is_compassionate_violation, perpetual_equality_choose, ApprovalVote, HarmonicWinWeights,
    PerpetualEquality,
};
pub use exponential_weights::{epsilon_schedule, ExponentialWeights, WeightState};
pub use minimax::{
    minimax_solve, DecisionTable, MinimaxAdversary, MinimaxStrategy, SolveLimits, SolvedGame,
};

pub trait Strategy {
    /// Picks an option in `1..=k` for the current round.
    fn choose(&mut self, profile: &ApprovalProfile) -> Result<u32>;

    /// Shown the committed outcome of the round; default is stateless.
    fn observe(&mut self, _profile: &ApprovalProfile, _chosen: u32) {}
}

/// The closed set of built-in decision rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StrategyId {
    ExponentialWeights,
    ApprovalVote,
    PerpetualEquality,
    HarmonicWinWeights,
    MinimaxOracle,
}

impl StrategyId {
    pub const ALL: [StrategyId; 5] = [
        StrategyId::ExponentialWeights,
        StrategyId::ApprovalVote,
        StrategyId::PerpetualEquality,
        StrategyId::HarmonicWinWeights,
        StrategyId::MinimaxOracle,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            StrategyId::ExponentialWeights => "exponential_weights",
            StrategyId::ApprovalVote => "approval_vote",
            StrategyId::PerpetualEquality => "perpetual_equality",
            StrategyId::HarmonicWinWeights => "harmonic_win_weights",
            StrategyId::MinimaxOracle => "minimax_oracle",
        }
    }
}

impl fmt::Display for StrategyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StrategyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exponential_weights" => Ok(StrategyId::ExponentialWeights),
            "approval_vote" => Ok(StrategyId::ApprovalVote),
            "perpetual_equality" => Ok(StrategyId::PerpetualEquality),
            "harmonic_win_weights" => Ok(StrategyId::HarmonicWinWeights),
            "minimax_oracle" => Ok(StrategyId::MinimaxOracle),
            other => Err(Error::InvalidInput(format!(
                "unknown strategy '{other}' (expected one of: exponential_weights, \
                 approval_vote, perpetual_equality, harmonic_win_weights, minimax_oracle)"
            ))),
        }
    }
}

/// Instantiates a strategy for a game. `epsilon` overrides the schedule
/// for the exponential weights rule; other rules ignore it.
pub fn build_strategy(
    id: StrategyId,
    params: &GameParams,
    epsilon: Option<f64>,
) -> Result<Box<dyn Strategy>> {
    match id {
        StrategyId::ExponentialWeights => {
            let eps = match epsilon {
                Some(e) => e,
                None => epsilon_schedule(params)?,
            };
            Ok(Box::new(ExponentialWeights::new(params.agents, eps)?))
        }
        StrategyId::ApprovalVote => Ok(Box::new(ApprovalVote)),
        StrategyId::PerpetualEquality => Ok(Box::new(PerpetualEquality::new(params.agents))),
        StrategyId::HarmonicWinWeights => Ok(Box::new(HarmonicWinWeights::new(params.agents))),
        StrategyId::MinimaxOracle => {
            let solved = minimax_solve(params, &SolveLimits::default())?;
            Ok(Box::new(solved.strategy()))
        }
    }
}
