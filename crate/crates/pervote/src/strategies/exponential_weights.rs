//! The exponential weights rule.
//!
//! Every agent carries a weight, initially 1, multiplied by `(1 + eps)`
//! each time the agent is dissatisfied. Each round the rule picks the
//! option whose disapprovers carry the least total weight, which is the
//! option that minimally increases the weight sum. Weights are kept as
//! integer dissatisfaction exponents and expanded in log-space on
//! demand, so plays with very large round counts do not overflow the
//! float range near `(1 + eps)^T`.

use crate::error::{Error, Result};
use crate::game::{ApprovalProfile, GameParams};
use crate::strategies::Strategy;

/// The tuned learning rate
/// `eps = (ln N / T)^(1 - 1/(k+1)) * (1/(C k))^(1/(k+1))`.
///
/// Requires a known conflict bound `C >= 1` and `N >= 2` (a single agent
/// makes `ln N = 0`, hence `eps = 0`; satisfying the lone agent whenever
/// possible is the right rule there and needs no weights). The analysis
/// behind the schedule assumes `C * k * ln N <= T`; outside that regime
/// the value is still returned unclamped — the associated dissatisfaction
/// bound is just weaker than the trivial bound `T`.
pub fn epsilon_schedule(params: &GameParams) -> Result<f64> {
    params.validate()?;
    if params.agents < 2 {
        return Err(Error::Degenerate(
            "epsilon schedule needs at least 2 agents (ln N = 0 for N = 1)".into(),
        ));
    }
    let c = match params.conflict_bound {
        Some(c) if c >= 1 => c as f64,
        Some(_) => {
            return Err(Error::InvalidInput(
                "epsilon schedule needs a conflict bound of at least 1".into(),
            ))
        }
        None => {
            return Err(Error::InvalidInput(
                "epsilon schedule needs a known conflict bound; use the doubling runner when it is unknown".into(),
            ))
        }
    };
    let k = params.options as f64;
    let t = params.rounds as f64;
    let n = params.agents as f64;
    let outer = 1.0 - 1.0 / (k + 1.0);
    Ok((n.ln() / t).powf(outer) * (1.0 / (c * k)).powf(1.0 / (k + 1.0)))
}

/// Weight bookkeeping for the exponential weights rule.
///
/// The weight of agent `i` is `(1 + eps)^{d_i}` where `d_i` counts the
/// rounds the agent has been dissatisfied so far; only the exponents are
/// stored.
#[derive(Debug, Clone)]
pub struct WeightState {
    epsilon: f64,
    exponents: Vec<u64>,
    rounds_seen: u32,
}

impl WeightState {
    pub fn new(agents: u32, epsilon: f64) -> Result<Self> {
        if agents < 1 {
            return Err(Error::InvalidInput("need at least one agent".into()));
        }
        if epsilon <= 0.0 || !epsilon.is_finite() {
            return Err(Error::InvalidInput(format!(
                "epsilon must be a positive finite number, got {epsilon}"
            )));
        }
        Ok(WeightState { epsilon, exponents: vec![0; agents as usize], rounds_seen: 0 })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn agents(&self) -> u32 {
        self.exponents.len() as u32
    }

    pub fn rounds_seen(&self) -> u32 {
        self.rounds_seen
    }

    /// Per-agent dissatisfaction exponents `d_i`.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// `ln w_i = d_i * ln(1 + eps)`.
    pub fn log_weight(&self, agent: u32) -> f64 {
        self.exponents[agent as usize - 1] as f64 * (1.0 + self.epsilon).ln()
    }

    /// Relative weights, rescaled so the largest is 1. The relative
    /// scale cannot overflow and is all that choices and masses need.
    fn relative_weights(&self) -> Vec<f64> {
        let log_base = (1.0 + self.epsilon).ln();
        let max = self.exponents.iter().copied().max().unwrap_or(0);
        self.exponents
            .iter()
            .map(|&d| ((d as f64 - max as f64) * log_base).exp())
            .collect()
    }

    /// Probability mass of the agents disapproving `option`, under the
    /// distribution proportional to the weights.
    pub fn disapprover_mass(&self, profile: &ApprovalProfile, option: u32) -> f64 {
        let rel = self.relative_weights();
        let total: f64 = rel.iter().sum();
        let disapproving: f64 = rel
            .iter()
            .zip(&profile.approvals)
            .filter(|(_, set)| !set.contains(option))
            .map(|(w, _)| w)
            .sum();
        disapproving / total
    }

    /// The option whose disapprovers carry the least weight, ties broken
    /// toward the lowest option index. Multiplying all weights by a
    /// positive constant cannot change the outcome (only relative
    /// weights enter).
    pub fn choose(&self, options: u32, profile: &ApprovalProfile) -> u32 {
        let rel = self.relative_weights();
        let mut best = 1u32;
        let mut best_mass = f64::INFINITY;
        for option in 1..=options {
            let mass: f64 = rel
                .iter()
                .zip(&profile.approvals)
                .filter(|(_, set)| !set.contains(option))
                .map(|(w, _)| w)
                .sum();
            if mass < best_mass {
                best = option;
                best_mass = mass;
            }
        }
        best
    }

    /// Multiplies the weight of every disapprover of `chosen` by
    /// `(1 + eps)`, i.e. bumps their exponents.
    pub fn update(&mut self, profile: &ApprovalProfile, chosen: u32) {
        for (d, set) in self.exponents.iter_mut().zip(&profile.approvals) {
            if !set.contains(chosen) {
                *d += 1;
            }
        }
        self.rounds_seen += 1;
    }
}

/// The exponential weights rule as a playable strategy.
#[derive(Debug, Clone)]
pub struct ExponentialWeights {
    state: WeightState,
}

impl ExponentialWeights {
    pub fn new(agents: u32, epsilon: f64) -> Result<Self> {
        Ok(ExponentialWeights { state: WeightState::new(agents, epsilon)? })
    }

    pub fn for_params(params: &GameParams) -> Result<Self> {
        Self::new(params.agents, epsilon_schedule(params)?)
    }

    pub fn state(&self) -> &WeightState {
        &self.state
    }
}

impl Strategy for ExponentialWeights {
    fn choose(&mut self, profile: &ApprovalProfile) -> Result<u32> {
        Ok(self.state.choose(crate::strategies::baselines::scan_range(profile), profile))
    }

    fn observe(&mut self, profile: &ApprovalProfile, chosen: u32) {
        self.state.update(profile, chosen);
    }
}
