//! Adversary strategies: the lower-bound constructions, plus scripted
//! and random ballot generators.
//!
//! An adversary emits one profile per round and may adapt to every
//! decision made so far. Each built-in construction certifies the
//! conflict bound it respects via [`Adversary::advertised_conflict_bound`].

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{ApprovalProfile, GameParams, OptionSet};

pub trait Adversary {
    /// Emits the profile for `round` (1-based). `decisions` holds every
    /// option chosen in rounds `1..round`; adaptive adversaries may
    /// branch on it, oblivious ones ignore it. `rng` is the engine's
    /// seeded entropy stream.
    fn next_profile(
        &mut self,
        params: &GameParams,
        round: u32,
        decisions: &[u32],
        rng: &mut ChaCha8Rng,
    ) -> Result<ApprovalProfile>;

    /// The conflict number this adversary guarantees never to exceed,
    /// when it certifies one.
    fn advertised_conflict_bound(&self) -> Option<u32> {
        None
    }
}

/// Identifies an adversary and its parameters; parses from strings like
/// `group_product:M=2` or `random:density=0.9,seed=7`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "id", rename_all = "snake_case")]
pub enum AdversarySpec {
    /// The product construction: `N = k*M` agents in `k` groups of `M`,
    /// `T = M^k` rounds, conflict number exactly 1.
    GroupProduct {
        #[serde(rename = "m")]
        group_size: u32,
    },
    /// For the first `C` rounds agent `j <= k` disapproves option `j`;
    /// afterwards everybody approves everything.
    WarmupCk {
        #[serde(rename = "c")]
        conflicts: u32,
    },
    /// Two options, `N = 2T + 1`: one pizza-loyal agent, two fresh
    /// curry-only agents per round, everyone else approves both.
    MajorityKiller,
    /// Two options, `N = T`, adaptive two-round gadgets that grind down
    /// any strategy that always rescues the unique most-dissatisfied
    /// agent.
    CompassionKiller,
    /// Everybody approves everything, every round.
    AllApprove,
    /// Replays profiles from a JSON script file.
    Scripted { path: PathBuf },
    /// Each (agent, option, round) approval is an independent coin.
    Random { density: f64, seed: Option<u64> },
}

impl AdversarySpec {
    /// Validates the spec against game dimensions.
    pub fn validate(&self, params: &GameParams) -> Result<()> {
        match self {
            AdversarySpec::GroupProduct { group_size } => {
                let m = *group_size;
                if m < 1 {
                    return Err(Error::InvalidInput("group size must be at least 1".into()));
                }
                let expected_n = params.options.checked_mul(m);
                let expected_t = (m as u64).checked_pow(params.options);
                if expected_n != Some(params.agents) {
                    return Err(Error::InvalidInput(format!(
                        "group_product needs N = k*M = {} agents, got {}",
                        params.options * m,
                        params.agents
                    )));
                }
                if expected_t != Some(params.rounds as u64) {
                    return Err(Error::InvalidInput(format!(
                        "group_product needs T = M^k = {} rounds, got {}",
                        expected_t.unwrap_or(u64::MAX),
                        params.rounds
                    )));
                }
                Ok(())
            }
            AdversarySpec::WarmupCk { .. } => {
                if params.agents < params.options {
                    return Err(Error::InvalidInput(format!(
                        "warmup_ck needs N >= k, got N = {} < k = {}",
                        params.agents, params.options
                    )));
                }
                Ok(())
            }
            AdversarySpec::MajorityKiller => {
                if params.options != 2 {
                    return Err(Error::InvalidInput("majority_killer needs k = 2".into()));
                }
                if params.agents != 2 * params.rounds + 1 {
                    return Err(Error::InvalidInput(format!(
                        "majority_killer needs N = 2T + 1 = {}, got {}",
                        2 * params.rounds + 1,
                        params.agents
                    )));
                }
                Ok(())
            }
            AdversarySpec::CompassionKiller => {
                if params.options != 2 {
                    return Err(Error::InvalidInput("compassion_killer needs k = 2".into()));
                }
                if params.agents != params.rounds {
                    return Err(Error::InvalidInput(format!(
                        "compassion_killer needs N = T = {}, got {}",
                        params.rounds, params.agents
                    )));
                }
                Ok(())
            }
            AdversarySpec::AllApprove | AdversarySpec::Scripted { .. } => Ok(()),
            AdversarySpec::Random { density, .. } => {
                if !(0.0..=1.0).contains(density) {
                    return Err(Error::InvalidInput(format!(
                        "density must lie in [0, 1], got {density}"
                    )));
                }
                Ok(())
            }
        }
    }

    /// Instantiates the adversary. `fallback_seed` seeds a random
    /// adversary that did not pin its own seed.
    pub fn build(&self, params: &GameParams, fallback_seed: u64) -> Result<Box<dyn Adversary>> {
        self.validate(params)?;
        Ok(match self {
            AdversarySpec::GroupProduct { group_size } => {
                Box::new(GroupProduct { group_size: *group_size })
            }
            AdversarySpec::WarmupCk { conflicts } => Box::new(WarmupCk { conflicts: *conflicts }),
            AdversarySpec::MajorityKiller => Box::new(MajorityKiller),
            AdversarySpec::CompassionKiller => Box::new(CompassionKiller::new()),
            AdversarySpec::AllApprove => Box::new(AllApprove),
            AdversarySpec::Scripted { path } => {
                Box::new(Scripted::from_file(path)?)
            }
            AdversarySpec::Random { density, seed } => Box::new(RandomApprovals {
                density: *density,
                rng: ChaCha8Rng::seed_from_u64(seed.unwrap_or(fallback_seed)),
            }),
        })
    }
}

impl fmt::Display for AdversarySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdversarySpec::GroupProduct { group_size } => write!(f, "group_product:M={group_size}"),
            AdversarySpec::WarmupCk { conflicts } => write!(f, "warmup_ck:C={conflicts}"),
            AdversarySpec::MajorityKiller => write!(f, "majority_killer"),
            AdversarySpec::CompassionKiller => write!(f, "compassion_killer"),
            AdversarySpec::AllApprove => write!(f, "all_approve"),
            AdversarySpec::Scripted { path } => write!(f, "scripted:path={}", path.display()),
            AdversarySpec::Random { density, seed } => match seed {
                Some(s) => write!(f, "random:density={density},seed={s}"),
                None => write!(f, "random:density={density}"),
            },
        }
    }
}

impl FromStr for AdversarySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (id, args) = match s.split_once(':') {
            Some((id, args)) => (id, Some(args)),
            None => (s, None),
        };
        let mut kv = std::collections::BTreeMap::new();
        if let Some(args) = args {
            for pair in args.split(',').filter(|p| !p.is_empty()) {
                let Some((key, value)) = pair.split_once('=') else {
                    return Err(Error::InvalidInput(format!(
                        "malformed adversary argument '{pair}' (expected key=value)"
                    )));
                };
                kv.insert(key.trim().to_ascii_lowercase(), value.trim().to_string());
            }
        }
        let get_u32 = |kv: &std::collections::BTreeMap<String, String>, key: &str| -> Result<u32> {
            kv.get(key)
                .ok_or_else(|| Error::InvalidInput(format!("adversary '{id}' needs '{key}='")))?
                .parse()
                .map_err(|_| Error::InvalidInput(format!("'{key}' must be an integer")))
        };
        match id {
            "group_product" => Ok(AdversarySpec::GroupProduct { group_size: get_u32(&kv, "m")? }),
            "warmup_ck" => Ok(AdversarySpec::WarmupCk { conflicts: get_u32(&kv, "c")? }),
            "majority_killer" => Ok(AdversarySpec::MajorityKiller),
            "compassion_killer" => Ok(AdversarySpec::CompassionKiller),
            "all_approve" => Ok(AdversarySpec::AllApprove),
            "scripted" => {
                let path = kv.get("path").ok_or_else(|| {
                    Error::InvalidInput("scripted adversary needs 'path='".into())
                })?;
                Ok(AdversarySpec::Scripted { path: PathBuf::from(path) })
            }
            "random" => {
                let density: f64 = kv
                    .get("density")
                    .ok_or_else(|| Error::InvalidInput("random adversary needs 'density='".into()))?
                    .parse()
                    .map_err(|_| Error::InvalidInput("'density' must be a number".into()))?;
                let seed = match kv.get("seed") {
                    Some(s) => Some(
                        s.parse()
                            .map_err(|_| Error::InvalidInput("'seed' must be an integer".into()))?,
                    ),
                    None => None,
                };
                Ok(AdversarySpec::Random { density, seed })
            }
            other => Err(Error::InvalidInput(format!(
                "unknown adversary '{other}' (expected one of: group_product, warmup_ck, \
                 majority_killer, compassion_killer, all_approve, scripted, random)"
            ))),
        }
    }
}

/// Profile for round `r` of the product construction with `k` groups of
/// `M` agents: write `r - 1` in base `M` as digits `(c_1, ..., c_k)`
/// (least significant first); in group `i` the agent at within-group
/// index `c_i` approves everything except option `i`, everyone else
/// approves everything. Group `i` occupies global ids
/// `(i-1)M + 1 ..= iM`. Oblivious: each of the `M^k` digit vectors
/// appears in exactly one round.
pub fn group_product_profile(options: u32, group_size: u32, round: u32) -> Result<ApprovalProfile> {
    let k = options;
    let m = group_size as u64;
    let total = m.checked_pow(k).filter(|&t| t <= u32::MAX as u64).ok_or_else(|| {
        Error::InvalidInput(format!("M^k = {group_size}^{k} overflows the round range"))
    })?;
    if round < 1 || round as u64 > total {
        return Err(Error::InvalidInput(format!(
            "round {round} outside 1..={total} for group_product"
        )));
    }
    let full = OptionSet::full(k);
    let mut approvals = vec![full; (k * group_size) as usize];
    let mut rest = (round - 1) as u64;
    for group in 1..=k {
        let digit = (rest % m) as u32;
        rest /= m;
        let agent = (group - 1) * group_size + digit + 1;
        let mut set = full;
        set.remove(group);
        approvals[agent as usize - 1] = set;
    }
    Ok(ApprovalProfile::new(round, approvals))
}

struct GroupProduct {
    group_size: u32,
}

impl Adversary for GroupProduct {
    fn next_profile(
        &mut self,
        params: &GameParams,
        round: u32,
        _decisions: &[u32],
        _rng: &mut ChaCha8Rng,
    ) -> Result<ApprovalProfile> {
        group_product_profile(params.options, self.group_size, round)
    }

    fn advertised_conflict_bound(&self) -> Option<u32> {
        Some(1)
    }
}

/// Warm-up profile: in rounds `1..=conflicts`, agent `j <= k` approves
/// everything except option `j` and all other agents approve everything;
/// later rounds are all-approve.
pub fn warmup_ck_profile(options: u32, agents: u32, conflicts: u32, round: u32) -> Result<ApprovalProfile> {
    if agents < options {
        return Err(Error::InvalidInput(format!(
            "warmup_ck needs N >= k, got N = {agents} < k = {options}"
        )));
    }
    if round < 1 {
        return Err(Error::InvalidInput("rounds are 1-based".into()));
    }
    let full = OptionSet::full(options);
    let mut approvals = vec![full; agents as usize];
    if round <= conflicts {
        for j in 1..=options {
            let mut set = full;
            set.remove(j);
            approvals[j as usize - 1] = set;
        }
    }
    Ok(ApprovalProfile::new(round, approvals))
}

struct WarmupCk {
    conflicts: u32,
}

impl Adversary for WarmupCk {
    fn next_profile(
        &mut self,
        params: &GameParams,
        round: u32,
        _decisions: &[u32],
        _rng: &mut ChaCha8Rng,
    ) -> Result<ApprovalProfile> {
        warmup_ck_profile(params.options, params.agents, self.conflicts, round)
    }

    fn advertised_conflict_bound(&self) -> Option<u32> {
        Some(self.conflicts)
    }
}

/// Round `r` against plurality with `k = 2`, `N = 2T + 1`: agent
/// `2T + 1` approves only option 1 (pizza), agents `2r - 1` and `2r`
/// approve only option 2 (curry), everyone else approves both.
pub fn majority_killer_profile(rounds: u32, round: u32) -> Result<ApprovalProfile> {
    if round < 1 || round > rounds {
        return Err(Error::InvalidInput(format!(
            "round {round} outside 1..={rounds} for majority_killer"
        )));
    }
    let n = 2 * rounds + 1;
    let both = OptionSet::full(2);
    let pizza = OptionSet::from_options(&[1]).expect("option 1 is valid");
    let curry = OptionSet::from_options(&[2]).expect("option 2 is valid");
    let mut approvals = vec![both; n as usize];
    approvals[n as usize - 1] = pizza;
    approvals[(2 * round - 2) as usize] = curry;
    approvals[(2 * round - 1) as usize] = curry;
    Ok(ApprovalProfile::new(round, approvals))
}

struct MajorityKiller;

impl Adversary for MajorityKiller {
    fn next_profile(
        &mut self,
        params: &GameParams,
        round: u32,
        _decisions: &[u32],
        _rng: &mut ChaCha8Rng,
    ) -> Result<ApprovalProfile> {
        majority_killer_profile(params.rounds, round)
    }

    fn advertised_conflict_bound(&self) -> Option<u32> {
        Some(1)
    }
}

/// Adaptive two-round gadget against compassionate strategies, `k = 2`,
/// `N = T`.
///
/// Gadget `g` uses agents `a = 2g - 1` and `b = 2g`. In the odd round
/// `a` approves only pizza and `b` only curry (everyone else approves
/// both); whichever of the two the decision maker satisfies goes
/// indifferent, and the dissatisfied one — now the unique agent at
/// maximal dissatisfaction — spends the even round approving only the
/// option just chosen while every other live agent approves only the
/// opposite one. A compassionate opponent must rescue it, dissatisfying
/// all live agents; either way both gadget agents go indifferent
/// afterwards, so no pair is ever in conflict twice. Odd `T` gets one
/// trailing all-approve round.
pub struct CompassionKiller {
    indifferent: Vec<bool>,
    pending: Option<(u32, u32)>,
    emitted: u32,
    gadget: u32,
}

impl CompassionKiller {
    pub fn new() -> Self {
        CompassionKiller { indifferent: Vec::new(), pending: None, emitted: 0, gadget: 0 }
    }
}

impl Default for CompassionKiller {
    fn default() -> Self {
        Self::new()
    }
}

impl Adversary for CompassionKiller {
    fn next_profile(
        &mut self,
        params: &GameParams,
        round: u32,
        decisions: &[u32],
        _rng: &mut ChaCha8Rng,
    ) -> Result<ApprovalProfile> {
        let n = params.agents;
        let t = params.rounds;
        if params.options != 2 || n < 2 * (t / 2) {
            return Err(Error::InvalidInput(format!(
                "compassion_killer needs k = 2 and at least {} agents for {t} rounds",
                2 * (t / 2)
            )));
        }
        if self.indifferent.is_empty() {
            self.indifferent = vec![false; n as usize];
        }
        if round != self.emitted + 1 || decisions.len() as u32 != round - 1 {
            return Err(Error::Protocol {
                round,
                message: format!(
                    "history out of step: {} decisions after {} emitted profiles",
                    decisions.len(),
                    self.emitted
                ),
            });
        }

        let both = OptionSet::full(2);
        let profile = if round > 2 * (t / 2) {
            // trailing filler round for odd T
            ApprovalProfile::new(round, vec![both; n as usize])
        } else if round % 2 == 1 {
            let a = 2 * self.gadget + 1;
            let b = 2 * self.gadget + 2;
            self.pending = Some((a, b));
            let mut approvals = vec![both; n as usize];
            approvals[a as usize - 1] = OptionSet::from_options(&[1]).expect("valid");
            approvals[b as usize - 1] = OptionSet::from_options(&[2]).expect("valid");
            ApprovalProfile::new(round, approvals)
        } else {
            let (a, b) = self.pending.take().ok_or(Error::Protocol {
                round,
                message: "even gadget round without a preceding odd round".into(),
            })?;
            let chosen = decisions[round as usize - 2];
            // The agent whose lone option was chosen is satisfied and
            // goes indifferent; the other is the unique max-dissatisfied.
            let (satisfied, dissatisfied) = if chosen == 1 { (a, b) } else { (b, a) };
            self.indifferent[satisfied as usize - 1] = true;
            let opposite = if chosen == 1 { 2 } else { 1 };
            let mut approvals = Vec::with_capacity(n as usize);
            for agent in 1..=n {
                let set = if agent == dissatisfied {
                    OptionSet::from_options(&[chosen]).expect("valid")
                } else if self.indifferent[agent as usize - 1] {
                    both
                } else {
                    OptionSet::from_options(&[opposite]).expect("valid")
                };
                approvals.push(set);
            }
            self.indifferent[dissatisfied as usize - 1] = true;
            self.gadget += 1;
            ApprovalProfile::new(round, approvals)
        };

        self.emitted += 1;
        Ok(profile)
    }

    fn advertised_conflict_bound(&self) -> Option<u32> {
        Some(1)
    }
}

struct AllApprove;

impl Adversary for AllApprove {
    fn next_profile(
        &mut self,
        params: &GameParams,
        round: u32,
        _decisions: &[u32],
        _rng: &mut ChaCha8Rng,
    ) -> Result<ApprovalProfile> {
        Ok(ApprovalProfile::new(round, vec![OptionSet::full(params.options); params.agents as usize]))
    }

    fn advertised_conflict_bound(&self) -> Option<u32> {
        Some(0)
    }
}

/// Replays a fixed sequence of profiles.
pub struct Scripted {
    profiles: Vec<Vec<OptionSet>>,
}

impl Scripted {
    pub fn from_profiles(profiles: Vec<Vec<OptionSet>>) -> Self {
        Scripted { profiles }
    }

    /// Loads a script: a JSON array of rounds, each an array of per-agent
    /// arrays of option indices (the same shape a transcript's profiles
    /// serialize to).
    pub fn from_file(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let rounds: Vec<Vec<Vec<u32>>> =
            serde_json::from_str(&text).map_err(|e| Error::Parse {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
        let mut profiles = Vec::with_capacity(rounds.len());
        for sets in &rounds {
            let mut row = Vec::with_capacity(sets.len());
            for options in sets {
                row.push(OptionSet::from_options(options)?);
            }
            profiles.push(row);
        }
        Ok(Scripted { profiles })
    }
}

impl Adversary for Scripted {
    fn next_profile(
        &mut self,
        _params: &GameParams,
        round: u32,
        _decisions: &[u32],
        _rng: &mut ChaCha8Rng,
    ) -> Result<ApprovalProfile> {
        let index = round as usize - 1;
        if index >= self.profiles.len() {
            return Err(Error::Protocol {
                round,
                message: format!("script provides only {} rounds", self.profiles.len()),
            });
        }
        Ok(ApprovalProfile::new(round, self.profiles[index].clone()))
    }
}

/// Every (agent, option) approval in every round is an independent coin
/// with the given density.
pub struct RandomApprovals {
    density: f64,
    rng: ChaCha8Rng,
}

impl RandomApprovals {
    pub fn new(density: f64, seed: u64) -> Self {
        RandomApprovals { density, rng: ChaCha8Rng::seed_from_u64(seed) }
    }
}

impl Adversary for RandomApprovals {
    fn next_profile(
        &mut self,
        params: &GameParams,
        round: u32,
        _decisions: &[u32],
        _rng: &mut ChaCha8Rng,
    ) -> Result<ApprovalProfile> {
        let mut approvals = Vec::with_capacity(params.agents as usize);
        for _ in 0..params.agents {
            let mut set = OptionSet::empty();
            for option in 1..=params.options {
                if self.rng.random_bool(self.density) {
                    set.insert(option);
                }
            }
            approvals.push(set);
        }
        Ok(ApprovalProfile::new(round, approvals))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_product_first_round_decodes_to_zero_digits() {
        // k = 2, M = 2, r = 1: digits (0, 0), so agent 1 (group 1, index
        // 0) approves {2} and agent 3 (group 2, index 0) approves {1}.
        let p = group_product_profile(2, 2, 1).unwrap();
        assert_eq!(p.approvals[0].to_vec(), vec![2]);
        assert_eq!(p.approvals[1].to_vec(), vec![1, 2]);
        assert_eq!(p.approvals[2].to_vec(), vec![1]);
        assert_eq!(p.approvals[3].to_vec(), vec![1, 2]);
    }

    #[test]
    fn group_product_every_digit_vector_once() {
        // All M^k rounds decode to distinct (agent per group) selections.
        let mut seen = std::collections::HashSet::new();
        for r in 1..=9 {
            let p = group_product_profile(2, 3, r).unwrap();
            let pattern: Vec<u32> = p
                .approvals
                .iter()
                .enumerate()
                .filter(|(_, s)| s.len() == 1)
                .map(|(i, _)| i as u32)
                .collect();
            assert_eq!(pattern.len(), 2);
            assert!(seen.insert(pattern));
        }
        assert!(group_product_profile(2, 3, 10).is_err());
        assert!(group_product_profile(2, 3, 0).is_err());
    }

    #[test]
    fn warmup_switches_to_all_approve() {
        let p = warmup_ck_profile(2, 4, 3, 2).unwrap();
        assert_eq!(p.approvals[0].to_vec(), vec![2]);
        assert_eq!(p.approvals[1].to_vec(), vec![1]);
        assert_eq!(p.approvals[2].to_vec(), vec![1, 2]);
        let later = warmup_ck_profile(2, 4, 3, 4).unwrap();
        assert!(later.approvals.iter().all(|s| s.len() == 2));
        assert!(warmup_ck_profile(3, 2, 1, 1).is_err());
    }

    #[test]
    fn majority_killer_counts() {
        // T = 3, N = 7. Round 2: curry has agents 3, 4 plus the both-
        // approvers; pizza trails by one.
        let p = majority_killer_profile(3, 2).unwrap();
        let curry_votes = p.approvals.iter().filter(|s| s.contains(2)).count();
        let pizza_votes = p.approvals.iter().filter(|s| s.contains(1)).count();
        assert_eq!(curry_votes, 6);
        assert_eq!(pizza_votes, 5);
        assert_eq!(p.approvals[6].to_vec(), vec![1]);
        assert!(majority_killer_profile(3, 4).is_err());
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in [
            "group_product:M=2",
            "warmup_ck:C=8",
            "majority_killer",
            "compassion_killer",
            "all_approve",
            "scripted:path=plays/x.json",
            "random:density=0.9,seed=3",
            "random:density=0.5",
        ] {
            let spec: AdversarySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            let back: AdversarySpec = spec.to_string().parse().unwrap();
            assert_eq!(spec, back);
        }
        assert!("warp_drive".parse::<AdversarySpec>().is_err());
        assert!("group_product".parse::<AdversarySpec>().is_err());
        assert!("random:density=2.0".parse::<AdversarySpec>().and_then(|s| {
            s.validate(&GameParams { options: 2, agents: 2, rounds: 2, conflict_bound: None })
        }).is_err());
    }

    #[test]
    fn spec_validation_checks_dimensions() {
        let params = GameParams { options: 2, agents: 4, rounds: 4, conflict_bound: Some(1) };
        assert!(AdversarySpec::GroupProduct { group_size: 2 }.validate(&params).is_ok());
        assert!(AdversarySpec::GroupProduct { group_size: 3 }.validate(&params).is_err());
        assert!(AdversarySpec::MajorityKiller.validate(&params).is_err());
        let mk = GameParams { options: 2, agents: 9, rounds: 4, conflict_bound: Some(1) };
        assert!(AdversarySpec::MajorityKiller.validate(&mk).is_ok());
        assert!(AdversarySpec::CompassionKiller
            .validate(&GameParams { options: 2, agents: 4, rounds: 4, conflict_bound: None })
            .is_ok());
    }

    #[test]
    fn random_density_extremes() {
        let params = GameParams { options: 2, agents: 3, rounds: 1, conflict_bound: None };
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut all = RandomApprovals::new(1.0, 7);
        let p = all.next_profile(&params, 1, &[], &mut rng).unwrap();
        assert!(p.approvals.iter().all(|s| s.len() == 2));
        let mut none = RandomApprovals::new(0.0, 7);
        let p = none.next_profile(&params, 1, &[], &mut rng).unwrap();
        assert!(p.approvals.iter().all(|s| s.is_empty()));
    }
}
