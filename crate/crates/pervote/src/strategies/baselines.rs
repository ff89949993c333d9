//! Plurality-style baseline rules and the compassion monitor.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;
use crate::game::{ApprovalProfile, PlayRecord};
use crate::strategies::Strategy;

/// Options worth scanning in a profile: every option beyond the largest
/// approved one is disapproved by everybody, so under the lowest-index
/// tie rule it can never beat option 1 on any count- or mass-based rule.
pub(crate) fn scan_range(profile: &ApprovalProfile) -> u32 {
    profile.approvals.iter().flat_map(|s| s.iter()).max().unwrap_or(1)
}

/// Plurality of approvals, ties toward the lowest option index.
pub fn approval_vote_choose(profile: &ApprovalProfile) -> u32 {
    let mut best = 1u32;
    let mut best_count = -1i64;
    for option in 1..=scan_range(profile) {
        let count = profile.approvals.iter().filter(|s| s.contains(option)).count() as i64;
        if count > best_count {
            best = option;
            best_count = count;
        }
    }
    best
}

/// Plurality restricted to the agents whose dissatisfaction equals the
/// current maximum, ties toward the lowest option index.
pub fn perpetual_equality_choose(profile: &ApprovalProfile, dissatisfaction: &[u32]) -> u32 {
    let max = dissatisfaction.iter().copied().max().unwrap_or(0);
    let mut best = 1u32;
    let mut best_count = -1i64;
    for option in 1..=scan_range(profile) {
        let count = profile
            .approvals
            .iter()
            .zip(dissatisfaction)
            .filter(|(set, &d)| d == max && set.contains(option))
            .count() as i64;
        if count > best_count {
            best = option;
            best_count = count;
        }
    }
    best
}

/// Win-weighted plurality: each approver contributes `1/(1 + s)` where
/// `s` counts the rounds the agent has been satisfied so far; the sums
/// are compared exactly so that equal-mass ties are detected and resolved
/// toward the lowest option index rather than lost to rounding.
pub fn harmonic_win_weights_choose(profile: &ApprovalProfile, satisfied_counts: &[u32]) -> u32 {
    let mut best = 1u32;
    let mut best_sum: Option<BigRational> = None;
    for option in 1..=scan_range(profile) {
        let mut sum = BigRational::from_integer(BigInt::from(0));
        for (set, &s) in profile.approvals.iter().zip(satisfied_counts) {
            if set.contains(option) {
                sum += BigRational::new(BigInt::from(1), BigInt::from(1 + s as u64));
            }
        }
        if best_sum.as_ref().is_none_or(|b| sum > *b) {
            best = option;
            best_sum = Some(sum);
        }
    }
    best
}

/// True when this round's choice breaks compassion: a unique
/// maximally-dissatisfied agent exists, approves at least one option,
/// and the chosen option is not in its set.
pub fn is_compassionate_violation(
    profile: &ApprovalProfile,
    dissatisfaction: &[u32],
    chosen: u32,
) -> bool {
    let max = dissatisfaction.iter().copied().max().unwrap_or(0);
    let mut at_max = dissatisfaction.iter().enumerate().filter(|(_, &d)| d == max);
    let Some((agent_idx, _)) = at_max.next() else { return false };
    if at_max.next().is_some() {
        return false; // tie at the maximum: compassion does not bind
    }
    let set = profile.approvals[agent_idx];
    !set.is_empty() && !set.contains(chosen)
}

/// Replays a transcript through the compassion monitor and returns the
/// rounds (1-based) where the recorded choice violated it. Empty output
/// certifies the play compassionate.
pub fn compassion_violation_rounds(play: &PlayRecord) -> Vec<u32> {
    let mut dissatisfaction = vec![0u32; play.params.agents as usize];
    let mut violations = Vec::new();
    for (profile, &chosen) in play.profiles.iter().zip(&play.decisions) {
        if is_compassionate_violation(profile, &dissatisfaction, chosen) {
            violations.push(profile.round);
        }
        for (d, set) in dissatisfaction.iter_mut().zip(&profile.approvals) {
            if !set.contains(chosen) {
                *d += 1;
            }
        }
    }
    violations
}

/// Memoryless plurality.
#[derive(Debug, Clone, Copy, Default)]
pub struct ApprovalVote;

impl Strategy for ApprovalVote {
    fn choose(&mut self, profile: &ApprovalProfile) -> Result<u32> {
        Ok(approval_vote_choose(profile))
    }
}

/// Plurality over the currently most-dissatisfied agents.
#[derive(Debug, Clone)]
pub struct PerpetualEquality {
    dissatisfaction: Vec<u32>,
}

impl PerpetualEquality {
    pub fn new(agents: u32) -> Self {
        PerpetualEquality { dissatisfaction: vec![0; agents as usize] }
    }
}

impl Strategy for PerpetualEquality {
    fn choose(&mut self, profile: &ApprovalProfile) -> Result<u32> {
        Ok(perpetual_equality_choose(profile, &self.dissatisfaction))
    }

    fn observe(&mut self, profile: &ApprovalProfile, chosen: u32) {
        for (d, set) in self.dissatisfaction.iter_mut().zip(&profile.approvals) {
            if !set.contains(chosen) {
                *d += 1;
            }
        }
    }
}

/// The win-weighted rule with weights `1/(1 + s)`.
#[derive(Debug, Clone)]
pub struct HarmonicWinWeights {
    satisfied: Vec<u32>,
}

impl HarmonicWinWeights {
    pub fn new(agents: u32) -> Self {
        HarmonicWinWeights { satisfied: vec![0; agents as usize] }
    }
}

impl Strategy for HarmonicWinWeights {
    fn choose(&mut self, profile: &ApprovalProfile) -> Result<u32> {
        Ok(harmonic_win_weights_choose(profile, &self.satisfied))
    }

    fn observe(&mut self, profile: &ApprovalProfile, chosen: u32) {
        for (s, set) in self.satisfied.iter_mut().zip(&profile.approvals) {
            if set.contains(chosen) {
                *s += 1;
            }
        }
    }
}
