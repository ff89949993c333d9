//! Domain types and the round-by-round game loop.
//!
//! A game has `k` options, `N` agents, and `T` rounds. Each round the
//! adversary reveals one approval set per agent, the decision maker then
//! picks one option, and every agent whose set does not contain the pick
//! is dissatisfied that round. Option and agent indices are 1-based
//! throughout; the per-round option indices carry no identity across
//! rounds (round 3's option 1 need not be the same alternative as round
//! 4's option 1).

use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::adversaries::Adversary;
use crate::error::{Error, Result};
use crate::strategies::Strategy;

/// Maximum number of options per round; approval sets are stored as `u64`
/// bitmasks.
pub const MAX_OPTIONS: u32 = 64;

/// Game dimensions: option count `k`, agent count `N`, round count `T`,
/// and the adversary's conflict bound `C` (`None` when unconstrained or
/// unknown to the decision maker).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameParams {
    #[serde(rename = "k")]
    pub options: u32,
    #[serde(rename = "n")]
    pub agents: u32,
    #[serde(rename = "t")]
    pub rounds: u32,
    #[serde(rename = "c")]
    pub conflict_bound: Option<u32>,
}

impl GameParams {
    pub fn new(options: u32, agents: u32, rounds: u32, conflict_bound: Option<u32>) -> Result<Self> {
        let p = GameParams { options, agents, rounds, conflict_bound };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.options < 1 {
            return Err(Error::InvalidInput("option count must be at least 1".into()));
        }
        if self.options > MAX_OPTIONS {
            return Err(Error::InvalidInput(format!(
                "option count {} exceeds the supported maximum {MAX_OPTIONS}",
                self.options
            )));
        }
        if self.agents < 1 {
            return Err(Error::InvalidInput("agent count must be at least 1".into()));
        }
        if self.rounds < 1 {
            return Err(Error::InvalidInput("round count must be at least 1".into()));
        }
        Ok(())
    }
}

/// One agent's approval set for one round, stored as a bitmask over
/// 1-based option indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct OptionSet(u64);

impl OptionSet {
    pub fn empty() -> Self {
        OptionSet(0)
    }

    /// The full set `{1..k}`.
    pub fn full(options: u32) -> Self {
        debug_assert!((1..=MAX_OPTIONS).contains(&options));
        if options == MAX_OPTIONS {
            OptionSet(u64::MAX)
        } else {
            OptionSet((1u64 << options) - 1)
        }
    }

    /// Builds a set directly from mask bits (bit `i` is option `i + 1`).
    pub fn from_mask_bits(bits: u64) -> Self {
        OptionSet(bits)
    }

    pub fn from_options(options: &[u32]) -> Result<Self> {
        let mut set = OptionSet::empty();
        for &opt in options {
            if !(1..=MAX_OPTIONS).contains(&opt) {
                return Err(Error::InvalidInput(format!("option index {opt} out of range")));
            }
            set.insert(opt);
        }
        Ok(set)
    }

    pub fn insert(&mut self, option: u32) {
        debug_assert!((1..=MAX_OPTIONS).contains(&option));
        self.0 |= 1u64 << (option - 1);
    }

    pub fn remove(&mut self, option: u32) {
        debug_assert!((1..=MAX_OPTIONS).contains(&option));
        self.0 &= !(1u64 << (option - 1));
    }

    pub fn contains(&self, option: u32) -> bool {
        (1..=MAX_OPTIONS).contains(&option) && self.0 & (1u64 << (option - 1)) != 0
    }

    pub fn intersect(&self, other: OptionSet) -> OptionSet {
        OptionSet(self.0 & other.0)
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> u32 {
        self.0.count_ones()
    }

    /// True when every member lies in `1..=options`.
    pub fn within(&self, options: u32) -> bool {
        self.0 & !Self::full(options).0 == 0
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        let bits = self.0;
        (1..=MAX_OPTIONS).filter(move |o| bits & (1u64 << (o - 1)) != 0)
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }
}

/// One round's ballots: an approval set per agent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApprovalProfile {
    /// 1-based round number.
    pub round: u32,
    pub approvals: Vec<OptionSet>,
}

impl ApprovalProfile {
    pub fn new(round: u32, approvals: Vec<OptionSet>) -> Self {
        ApprovalProfile { round, approvals }
    }

    pub fn agents(&self) -> u32 {
        self.approvals.len() as u32
    }

    /// Approval set of a 1-based agent id.
    pub fn approvals_of(&self, agent: u32) -> Result<OptionSet> {
        if agent < 1 || agent as usize > self.approvals.len() {
            return Err(Error::InvalidInput(format!(
                "agent id {agent} out of range 1..={}",
                self.approvals.len()
            )));
        }
        Ok(self.approvals[agent as usize - 1])
    }

    /// Checks shape against the game dimensions for the given round.
    pub fn validate(&self, params: &GameParams, expected_round: u32) -> Result<()> {
        if self.round != expected_round {
            return Err(Error::Protocol {
                round: expected_round,
                message: format!("profile labeled round {}", self.round),
            });
        }
        if self.approvals.len() as u32 != params.agents {
            return Err(Error::Protocol {
                round: expected_round,
                message: format!(
                    "profile has {} approval sets, expected {}",
                    self.approvals.len(),
                    params.agents
                ),
            });
        }
        for (i, set) in self.approvals.iter().enumerate() {
            if !set.within(params.options) {
                return Err(Error::Protocol {
                    round: expected_round,
                    message: format!(
                        "agent {} approves an option outside 1..={}",
                        i + 1,
                        params.options
                    ),
                });
            }
        }
        Ok(())
    }
}

/// A full transcript of one play: the per-round profiles, the chosen
/// options, and the per-agent dissatisfaction counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlayRecord {
    pub params: GameParams,
    pub profiles: Vec<ApprovalProfile>,
    pub decisions: Vec<u32>,
    pub dissatisfaction: Vec<u32>,
}

impl PlayRecord {
    pub fn max_dissatisfaction(&self) -> u32 {
        self.dissatisfaction.iter().copied().max().unwrap_or(0)
    }

    pub fn mean_dissatisfaction(&self) -> f64 {
        if self.dissatisfaction.is_empty() {
            return 0.0;
        }
        self.dissatisfaction.iter().map(|&d| d as f64).sum::<f64>() / self.dissatisfaction.len() as f64
    }

    /// Structural validation: shapes, ranges, and the stored
    /// dissatisfaction vector matching a recount.
    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        if self.profiles.len() as u32 != self.params.rounds
            || self.decisions.len() as u32 != self.params.rounds
        {
            return Err(Error::InvalidInput(format!(
                "transcript has {} profiles and {} decisions for {} rounds",
                self.profiles.len(),
                self.decisions.len(),
                self.params.rounds
            )));
        }
        for (i, profile) in self.profiles.iter().enumerate() {
            profile.validate(&self.params, i as u32 + 1)?;
        }
        for (i, &d) in self.decisions.iter().enumerate() {
            if d < 1 || d > self.params.options {
                return Err(Error::Protocol {
                    round: i as u32 + 1,
                    message: format!("decision {d} outside 1..={}", self.params.options),
                });
            }
        }
        let recount = recompute_dissatisfaction(&self.profiles, &self.decisions)?;
        if recount != self.dissatisfaction {
            return Err(Error::InvalidInput(
                "stored dissatisfaction vector disagrees with a recount".into(),
            ));
        }
        Ok(())
    }
}

/// Recounts per-agent dissatisfaction from raw profiles and decisions.
/// An agent with an empty approval set is dissatisfied that round no
/// matter what was chosen.
pub fn recompute_dissatisfaction(profiles: &[ApprovalProfile], decisions: &[u32]) -> Result<Vec<u32>> {
    if profiles.len() != decisions.len() {
        return Err(Error::InvalidInput(format!(
            "{} profiles but {} decisions",
            profiles.len(),
            decisions.len()
        )));
    }
    let agents = profiles.first().map_or(0, |p| p.approvals.len());
    let mut counts = vec![0u32; agents];
    for (profile, &decision) in profiles.iter().zip(decisions) {
        if profile.approvals.len() != agents {
            return Err(Error::InvalidInput(format!(
                "round {} has {} approval sets, expected {}",
                profile.round,
                profile.approvals.len(),
                agents
            )));
        }
        for (i, set) in profile.approvals.iter().enumerate() {
            if !set.contains(decision) {
                counts[i] += 1;
            }
        }
    }
    Ok(counts)
}

/// Plays a full game: each round the adversary emits a profile (seeing
/// all previous decisions), the strategy sees the profile and picks an
/// option, and the strategy is then shown the outcome. Deterministic
/// given the inputs and `seed`; the seed feeds the entropy stream handed
/// to adversaries that sample.
pub fn run_game(
    params: &GameParams,
    strategy: &mut dyn Strategy,
    adversary: &mut dyn Adversary,
    seed: u64,
) -> Result<PlayRecord> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut profiles: Vec<ApprovalProfile> = Vec::with_capacity(params.rounds as usize);
    let mut decisions: Vec<u32> = Vec::with_capacity(params.rounds as usize);

    for round in 1..=params.rounds {
        let profile = adversary.next_profile(params, round, &decisions, &mut rng)?;
        profile.validate(params, round)?;
        let chosen = strategy.choose(&profile)?;
        if chosen < 1 || chosen > params.options {
            return Err(Error::Protocol {
                round,
                message: format!("strategy chose option {chosen} outside 1..={}", params.options),
            });
        }
        strategy.observe(&profile, chosen);
        profiles.push(profile);
        decisions.push(chosen);
    }

    let dissatisfaction = recompute_dissatisfaction(&profiles, &decisions)?;
    Ok(PlayRecord { params: *params, profiles, decisions, dissatisfaction })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(round: u32, sets: &[&[u32]]) -> ApprovalProfile {
        ApprovalProfile::new(
            round,
            sets.iter().map(|s| OptionSet::from_options(s).unwrap()).collect(),
        )
    }

    #[test]
    fn params_reject_zero_dimensions() {
        assert!(GameParams::new(0, 1, 1, None).is_err());
        assert!(GameParams::new(1, 0, 1, None).is_err());
        assert!(GameParams::new(1, 1, 0, None).is_err());
        assert!(GameParams::new(2, 3, 4, Some(0)).is_ok());
    }

    #[test]
    fn option_set_basics() {
        let s = OptionSet::from_options(&[3, 1]).unwrap();
        assert!(s.contains(1) && s.contains(3) && !s.contains(2));
        assert_eq!(s.to_vec(), vec![1, 3]);
        assert_eq!(OptionSet::full(3).to_vec(), vec![1, 2, 3]);
        assert!(OptionSet::empty().is_empty());
        assert!(!s.within(2));
        assert!(s.within(3));
    }

    #[test]
    fn recompute_counts_misses_and_empty_sets() {
        let profiles = vec![
            profile(1, &[&[1], &[], &[1, 2]]),
            profile(2, &[&[2], &[], &[1, 2]]),
            profile(3, &[&[1], &[], &[2]]),
        ];
        let decisions = vec![1, 1, 1];
        let d = recompute_dissatisfaction(&profiles, &decisions).unwrap();
        // agent 1 misses round 2; agent 2 approves nothing, misses all 3;
        // agent 3 misses round 3.
        assert_eq!(d, vec![1, 3, 1]);
    }

    #[test]
    fn recompute_rejects_length_mismatch() {
        let profiles = vec![profile(1, &[&[1]])];
        assert!(recompute_dissatisfaction(&profiles, &[1, 2]).is_err());
    }

    #[test]
    fn profile_validation_catches_shape_errors() {
        let params = GameParams::new(2, 2, 1, None).unwrap();
        let bad_len = profile(1, &[&[1]]);
        assert!(matches!(bad_len.validate(&params, 1), Err(Error::Protocol { round: 1, .. })));
        let bad_opt = profile(1, &[&[1], &[3]]);
        assert!(bad_opt.validate(&params, 1).is_err());
        let ok = profile(1, &[&[1], &[2]]);
        assert!(ok.validate(&params, 1).is_ok());
    }
}
