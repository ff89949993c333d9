//! Exact solver for the conflict-bounded game at toy scale.
//!
//! The game is solved by backward induction over all positions. A
//! position is summarized by the round number, the per-agent
//! dissatisfaction so far, and, for every agent subset of size at most
//! `k`, how many rounds it has been in conflict — that triple determines
//! both the adversary's remaining legal moves and the final payoff, so
//! it is a sufficient statistic of the full history. The adversary moves
//! first each round and may play any of the `(2^k)^N` profiles that keep
//! every subset's conflict count within the bound `C`; the decision
//! maker replies with an option. The value is the adversary's guaranteed
//! final maximum dissatisfaction under optimal play on both sides.
//!
//! The move space is `(2^k)^N` per round, so the solver refuses
//! dimensions beyond small limits (by default `N <= 3`, `k <= 2`,
//! `T <= 4`; raise them deliberately via [`SolveLimits`]).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{ApprovalProfile, GameParams, OptionSet};
use crate::strategies::Strategy;

/// Dimension caps for the exact solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveLimits {
    pub max_agents: u32,
    pub max_options: u32,
    pub max_rounds: u32,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits { max_agents: 3, max_options: 2, max_rounds: 4 }
    }
}

/// One adversary move: a full profile with its precomputed effects.
#[derive(Debug, Clone)]
struct ProfileMove {
    approvals: Vec<OptionSet>,
    /// Bit `s` set when subset `s` is in conflict under this profile.
    conflict_mask: u64,
    /// Per option (0-based), bit `i` set when agent `i+1` disapproves it.
    dissatisfies: Vec<u32>,
}

#[derive(Debug, Clone)]
struct Tables {
    params: GameParams,
    /// Effective conflict bound, clamped to `T` (a subset cannot
    /// conflict more often than there are rounds).
    c_eff: u32,
    /// Agent subsets of size `<= k`, in (size, lexicographic) order.
    subsets: Vec<Vec<u32>>,
    moves: Vec<ProfileMove>,
    dissat_bits: u32,
    count_bits: u32,
}

impl Tables {
    /// Packs `(round, dissatisfaction, counts)` into a memo key.
    fn key(&self, round: u32, dissat: &[u32], counts: &[u32]) -> u64 {
        let mut key: u64 = round as u64;
        for &d in dissat {
            key = (key << self.dissat_bits) | d as u64;
        }
        for &c in counts {
            key = (key << self.count_bits) | c as u64;
        }
        key
    }
}

fn bits_for(max_value: u32) -> u32 {
    32 - max_value.max(1).leading_zeros()
}

fn enumerate_subsets(agents: u32, max_size: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn recurse(agents: u32, size: u32, start: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() as u32 == size {
            out.push(current.clone());
            return;
        }
        for a in start..=agents {
            current.push(a);
            recurse(agents, size, a + 1, current, out);
            current.pop();
        }
    }
    for size in 1..=max_size.min(agents) {
        recurse(agents, size, 1, &mut current, &mut out);
    }
    out
}

fn build_tables(params: &GameParams, limits: &SolveLimits) -> Result<Tables> {
    params.validate()?;
    let Some(c) = params.conflict_bound else {
        return Err(Error::InvalidInput(
            "the exact solver needs a conflict bound; pass C explicitly".into(),
        ));
    };
    if params.agents > limits.max_agents {
        return Err(Error::SolverLimit(format!(
            "{} agents exceed the solver limit of {}",
            params.agents, limits.max_agents
        )));
    }
    if params.options > limits.max_options {
        return Err(Error::SolverLimit(format!(
            "{} options exceed the solver limit of {}",
            params.options, limits.max_options
        )));
    }
    if params.rounds > limits.max_rounds {
        return Err(Error::SolverLimit(format!(
            "{} rounds exceed the solver limit of {}",
            params.rounds, limits.max_rounds
        )));
    }

    let n = params.agents;
    let k = params.options;
    let c_eff = c.min(params.rounds);
    if n > 32 {
        return Err(Error::SolverLimit(format!("{n} agents exceed the 32 supported")));
    }
    let subsets = enumerate_subsets(n, k);
    if subsets.len() > 64 {
        return Err(Error::SolverLimit(format!(
            "{} conflict-tracked subsets exceed the 64 supported",
            subsets.len()
        )));
    }

    let dissat_bits = bits_for(params.rounds);
    let count_bits = bits_for(c_eff);
    let total_bits =
        bits_for(params.rounds + 1) + n * dissat_bits + subsets.len() as u32 * count_bits;
    if total_bits > 64 {
        return Err(Error::SolverLimit(format!(
            "position key needs {total_bits} bits, more than the 64 supported"
        )));
    }

    let ballots_per_agent: u128 = 1u128 << k; // all subsets of {1..k}
    let move_count = ballots_per_agent.pow(n);
    if move_count > 1_000_000 {
        return Err(Error::SolverLimit(format!(
            "(2^{k})^{n} = {move_count} adversary moves per round exceed the 1000000 supported"
        )));
    }
    let mut moves = Vec::with_capacity(move_count as usize);
    for index in 0..move_count {
        let mut rest = index;
        let mut approvals = Vec::with_capacity(n as usize);
        for _ in 0..n {
            approvals.push(OptionSet::from_mask_bits((rest % ballots_per_agent) as u64));
            rest /= ballots_per_agent;
        }
        let mut conflict_mask = 0u64;
        for (s, subset) in subsets.iter().enumerate() {
            let mut common = OptionSet::full(k);
            for &a in subset {
                common = common.intersect(approvals[a as usize - 1]);
            }
            if common.is_empty() {
                conflict_mask |= 1u64 << s;
            }
        }
        let dissatisfies = (1..=k)
            .map(|option| {
                let mut mask = 0u32;
                for (i, set) in approvals.iter().enumerate() {
                    if !set.contains(option) {
                        mask |= 1u32 << i;
                    }
                }
                mask
            })
            .collect();
        moves.push(ProfileMove { approvals, conflict_mask, dissatisfies });
    }

    Ok(Tables { params: *params, c_eff, subsets, moves, dissat_bits, count_bits })
}

fn value_of(
    tables: &Tables,
    memo: &mut HashMap<u64, u32>,
    round: u32,
    dissat: &[u32],
    counts: &[u32],
) -> u32 {
    if round > tables.params.rounds {
        return dissat.iter().copied().max().unwrap_or(0);
    }
    let key = tables.key(round, dissat, counts);
    if let Some(&v) = memo.get(&key) {
        return v;
    }

    let mut best = 0u32; // the all-approve profile is always legal, so
                         // the maximum below is over a non-empty set
    let mut next_dissat = dissat.to_vec();
    let mut next_counts = counts.to_vec();
    'moves: for mv in &tables.moves {
        let mut mask = mv.conflict_mask;
        while mask != 0 {
            let s = mask.trailing_zeros() as usize;
            if counts[s] >= tables.c_eff {
                continue 'moves;
            }
            mask &= mask - 1;
        }
        next_counts.copy_from_slice(counts);
        let mut m = mv.conflict_mask;
        while m != 0 {
            let s = m.trailing_zeros() as usize;
            next_counts[s] += 1;
            m &= m - 1;
        }

        let mut reply_value = u32::MAX;
        for theta in 0..tables.params.options {
            let hit = mv.dissatisfies[theta as usize];
            next_dissat.copy_from_slice(dissat);
            for (i, d) in next_dissat.iter_mut().enumerate() {
                if hit & (1u32 << i) != 0 {
                    *d += 1;
                }
            }
            let v = value_of(tables, memo, round + 1, &next_dissat, &next_counts);
            if v < reply_value {
                reply_value = v;
            }
        }
        if reply_value > best {
            best = reply_value;
        }
    }

    memo.insert(key, best);
    best
}

/// Best reply (lowest-index among optimal) to `approvals` at the given
/// position. Conflict counts already at the bound are clamped there, so
/// positions reached through an over-budget adversary stay well-defined.
fn best_reply(
    tables: &Tables,
    memo: &mut HashMap<u64, u32>,
    round: u32,
    dissat: &[u32],
    counts: &[u32],
    approvals: &[OptionSet],
) -> u32 {
    let k = tables.params.options;
    let mut next_counts = counts.to_vec();
    for (s, subset) in tables.subsets.iter().enumerate() {
        let mut common = OptionSet::full(k);
        for &a in subset {
            common = common.intersect(approvals[a as usize - 1]);
        }
        if common.is_empty() {
            next_counts[s] = (next_counts[s] + 1).min(tables.c_eff);
        }
    }
    let mut best = 1u32;
    let mut best_value = u32::MAX;
    let mut next_dissat = dissat.to_vec();
    for theta in 1..=k {
        next_dissat.copy_from_slice(dissat);
        for (i, d) in next_dissat.iter_mut().enumerate() {
            if !approvals[i].contains(theta) {
                *d += 1;
            }
        }
        let v = value_of(tables, memo, round + 1, &next_dissat, &next_counts);
        if v < best_value {
            best = theta;
            best_value = v;
        }
    }
    best
}

/// A fully solved conflict-bounded game.
#[derive(Debug, Clone)]
pub struct SolvedGame {
    tables: Tables,
    memo: HashMap<u64, u32>,
    value: u32,
}

/// Exported decision table: the optimal reply to every legal adversary
/// move at every position reachable under the optimal decision policy.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DecisionTable {
    pub params: GameParams,
    pub value: u32,
    /// The tracked agent subsets, aligned with each entry's counts.
    pub subsets: Vec<Vec<u32>>,
    pub entries: Vec<DecisionTableEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DecisionTableEntry {
    pub round: u32,
    pub dissatisfaction: Vec<u32>,
    pub conflict_counts: Vec<u32>,
    /// The adversary profile, as per-agent sorted option lists.
    pub profile: Vec<Vec<u32>>,
    pub choice: u32,
}

/// Solves the game exactly: the guaranteed maximum dissatisfaction under
/// optimal play, for a game whose conflict bound is `params.conflict_bound`.
pub fn minimax_solve(params: &GameParams, limits: &SolveLimits) -> Result<SolvedGame> {
    let tables = build_tables(params, limits)?;
    let mut memo = HashMap::new();
    let dissat = vec![0u32; params.agents as usize];
    let counts = vec![0u32; tables.subsets.len()];
    let value = value_of(&tables, &mut memo, 1, &dissat, &counts);
    Ok(SolvedGame { tables, memo, value })
}

impl SolvedGame {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn params(&self) -> &GameParams {
        &self.tables.params
    }

    /// States explored during solving.
    pub fn positions_analyzed(&self) -> usize {
        self.memo.len()
    }

    fn best_reply(&mut self, round: u32, dissat: &[u32], counts: &[u32], approvals: &[OptionSet]) -> u32 {
        best_reply(&self.tables, &mut self.memo, round, dissat, counts, approvals)
    }

    /// A playable strategy following the optimal policy.
    pub fn strategy(&self) -> MinimaxStrategy {
        MinimaxStrategy {
            game: self.clone(),
            round: 1,
            dissat: vec![0; self.tables.params.agents as usize],
            counts: vec![0; self.tables.subsets.len()],
        }
    }

    /// A playable adversary following the optimal worst-case policy: at
    /// every reached position it plays a legal profile maximizing the
    /// value, so any opposing strategy finishes with maximum
    /// dissatisfaction at least [`SolvedGame::value`].
    pub fn adversary(&self) -> MinimaxAdversary {
        MinimaxAdversary {
            game: self.clone(),
            dissat: vec![0; self.tables.params.agents as usize],
            counts: vec![0; self.tables.subsets.len()],
            last_profile: None,
        }
    }

    /// Expands the optimal policy into an explicit table over every
    /// position reachable when the decision maker follows the policy
    /// and the adversary plays any legal move. Refuses beyond
    /// `max_entries`.
    pub fn decision_table(&mut self, max_entries: usize) -> Result<DecisionTable> {
        let n = self.tables.params.agents as usize;
        let subset_count = self.tables.subsets.len();
        let value = self.value;
        let mut entries = Vec::new();
        let mut frontier: Vec<(Vec<u32>, Vec<u32>)> = vec![(vec![0; n], vec![0; subset_count])];

        let SolvedGame { tables, memo, .. } = self;
        for round in 1..=tables.params.rounds {
            let mut next_frontier: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
            for (dissat, counts) in &frontier {
                'moves: for mv in &tables.moves {
                    let mut mask = mv.conflict_mask;
                    while mask != 0 {
                        let s = mask.trailing_zeros() as usize;
                        if counts[s] >= tables.c_eff {
                            continue 'moves;
                        }
                        mask &= mask - 1;
                    }
                    let choice = best_reply(tables, memo, round, dissat, counts, &mv.approvals);
                    entries.push(DecisionTableEntry {
                        round,
                        dissatisfaction: dissat.clone(),
                        conflict_counts: counts.clone(),
                        profile: mv.approvals.iter().map(|s| s.to_vec()).collect(),
                        choice,
                    });
                    if entries.len() > max_entries {
                        return Err(Error::BudgetExceeded {
                            required: entries.len() as u128,
                            budget: max_entries as u128,
                        });
                    }

                    let mut nd = dissat.clone();
                    for (i, d) in nd.iter_mut().enumerate() {
                        if !mv.approvals[i].contains(choice) {
                            *d += 1;
                        }
                    }
                    let mut nc = counts.clone();
                    let mut m = mv.conflict_mask;
                    while m != 0 {
                        let s = m.trailing_zeros() as usize;
                        nc[s] += 1;
                        m &= m - 1;
                    }
                    if !next_frontier.contains(&(nd.clone(), nc.clone())) {
                        next_frontier.push((nd, nc));
                    }
                }
            }
            frontier = next_frontier;
        }

        Ok(DecisionTable {
            params: tables.params,
            value,
            subsets: tables.subsets.clone(),
            entries,
        })
    }
}

/// Optimal decision maker at toy scale.
#[derive(Debug, Clone)]
pub struct MinimaxStrategy {
    game: SolvedGame,
    round: u32,
    dissat: Vec<u32>,
    counts: Vec<u32>,
}

impl MinimaxStrategy {
    pub fn value(&self) -> u32 {
        self.game.value
    }
}

impl Strategy for MinimaxStrategy {
    fn choose(&mut self, profile: &ApprovalProfile) -> Result<u32> {
        if profile.approvals.len() != self.dissat.len() {
            return Err(Error::InvalidInput(format!(
                "profile has {} agents, solver expected {}",
                profile.approvals.len(),
                self.dissat.len()
            )));
        }
        Ok(self.game.best_reply(self.round, &self.dissat, &self.counts, &profile.approvals))
    }

    fn observe(&mut self, profile: &ApprovalProfile, chosen: u32) {
        let k = self.game.tables.params.options;
        let c_eff = self.game.tables.c_eff;
        for (s, subset) in self.game.tables.subsets.iter().enumerate() {
            let mut common = OptionSet::full(k);
            for &a in subset {
                common = common.intersect(profile.approvals[a as usize - 1]);
            }
            if common.is_empty() {
                self.counts[s] = (self.counts[s] + 1).min(c_eff);
            }
        }
        for (d, set) in self.dissat.iter_mut().zip(&profile.approvals) {
            if !set.contains(chosen) {
                *d += 1;
            }
        }
        self.round += 1;
    }
}

/// Worst-case adversary induced by the solved game.
#[derive(Debug, Clone)]
pub struct MinimaxAdversary {
    game: SolvedGame,
    dissat: Vec<u32>,
    counts: Vec<u32>,
    last_profile: Option<Vec<OptionSet>>,
}

impl crate::adversaries::Adversary for MinimaxAdversary {
    fn next_profile(
        &mut self,
        params: &GameParams,
        round: u32,
        decisions: &[u32],
        _rng: &mut rand_chacha::ChaCha8Rng,
    ) -> Result<ApprovalProfile> {
        if decisions.len() as u32 != round - 1 {
            return Err(Error::Protocol {
                round,
                message: format!("{} decisions on record before round {round}", decisions.len()),
            });
        }
        // Fold in the previous round's outcome.
        if let Some(prev) = self.last_profile.take() {
            let chosen = decisions[round as usize - 2];
            let k = self.game.tables.params.options;
            for (s, subset) in self.game.tables.subsets.iter().enumerate() {
                let mut common = OptionSet::full(k);
                for &a in subset {
                    common = common.intersect(prev[a as usize - 1]);
                }
                if common.is_empty() {
                    self.counts[s] += 1;
                }
            }
            for (d, set) in self.dissat.iter_mut().zip(&prev) {
                if !set.contains(chosen) {
                    *d += 1;
                }
            }
        }

        if params.agents as usize != self.dissat.len() {
            return Err(Error::InvalidInput(format!(
                "game has {} agents, solver expected {}",
                params.agents,
                self.dissat.len()
            )));
        }

        let SolvedGame { tables, memo, .. } = &mut self.game;
        let c_eff = tables.c_eff;
        let options = tables.params.options;
        let mut best_move: Option<usize> = None;
        let mut best_value = 0u32;
        let mut next_counts = self.counts.clone();
        let mut next_dissat = self.dissat.clone();
        'moves: for (index, mv) in tables.moves.iter().enumerate() {
            let mut mask = mv.conflict_mask;
            while mask != 0 {
                let s = mask.trailing_zeros() as usize;
                if self.counts[s] >= c_eff {
                    continue 'moves;
                }
                mask &= mask - 1;
            }
            next_counts.copy_from_slice(&self.counts);
            let mut m = mv.conflict_mask;
            while m != 0 {
                let s = m.trailing_zeros() as usize;
                next_counts[s] += 1;
                m &= m - 1;
            }
            let mut reply = u32::MAX;
            for theta in 0..options {
                let hit = mv.dissatisfies[theta as usize];
                next_dissat.copy_from_slice(&self.dissat);
                for (i, d) in next_dissat.iter_mut().enumerate() {
                    if hit & (1u32 << i) != 0 {
                        *d += 1;
                    }
                }
                let v = value_of(tables, memo, round + 1, &next_dissat, &next_counts);
                if v < reply {
                    reply = v;
                }
            }
            if best_move.is_none() || reply > best_value {
                best_move = Some(index);
                best_value = reply;
            }
        }

        let mv = &tables.moves[best_move.expect("all-approve is always legal")];
        self.last_profile = Some(mv.approvals.clone());
        Ok(ApprovalProfile::new(round, mv.approvals.clone()))
    }

    fn advertised_conflict_bound(&self) -> Option<u32> {
        Some(self.game.tables.c_eff)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(k: u32, n: u32, t: u32, c: u32) -> GameParams {
        GameParams { options: k, agents: n, rounds: t, conflict_bound: Some(c) }
    }

    fn solve(k: u32, n: u32, t: u32, c: u32) -> u32 {
        minimax_solve(&params(k, n, t, c), &SolveLimits::default()).unwrap().value()
    }

    #[test]
    fn single_round_values() {
        // One pair conflict is allowed at C = 1 and forces one miss;
        // with C = 0 both agents always share an option.
        assert_eq!(solve(2, 2, 1, 1), 1);
        assert_eq!(solve(2, 2, 1, 0), 0);
    }

    #[test]
    fn zero_conflict_bound_means_zero_value_when_agents_fit() {
        // With N <= k the whole agent set is a tracked subset, so C = 0
        // forces a commonly approved option every round.
        for t in 1..=3 {
            assert_eq!(solve(2, 2, t, 0), 0);
        }
    }

    #[test]
    fn zero_conflict_bound_stays_zero_with_more_agents_than_options() {
        // N > k: if no option were approved by everyone, picking one
        // missing agent per option would give a size-<=k subset with
        // empty intersection, which C = 0 forbids. The solver confirms
        // the value is 0.
        for t in 1..=3 {
            assert_eq!(solve(2, 3, t, 0), 0);
        }
    }

    #[test]
    fn toy_grid_matches_independent_enumeration() {
        // Frozen from an independent brute-force enumeration of the
        // same game (all positions, no memo key packing).
        let expected = [
            ((1u32, 0u32), 0u32),
            ((1, 1), 1),
            ((1, 2), 1),
            ((2, 0), 0),
            ((2, 1), 1),
            ((2, 2), 2),
            ((3, 0), 0),
            ((3, 1), 1),
            ((3, 2), 2),
        ];
        for ((t, c), value) in expected {
            assert_eq!(solve(2, 2, t, c), value, "value(T={t}, C={c})");
        }
    }

    #[test]
    fn value_monotone_in_rounds_and_bound() {
        for c in 0..=2 {
            let mut last = 0;
            for t in 1..=3 {
                let v = solve(2, 2, t, c);
                assert!(v >= last, "value must not fall as T grows");
                last = v;
            }
        }
        for t in 1..=3 {
            let mut last = 0;
            for c in 0..=2 {
                let v = solve(2, 2, t, c);
                assert!(v >= last, "value must not fall as C grows");
                last = v;
            }
        }
    }

    #[test]
    fn warmup_floor_holds_at_toy_scale() {
        // N >= k and C = 1: the warm-up construction forces at least
        // ceil(C/k) = 1.
        assert!(solve(2, 2, 2, 1) >= 1);
        assert!(solve(2, 3, 2, 1) >= 1);
    }

    #[test]
    fn limits_are_enforced() {
        let p = params(2, 4, 4, 1);
        assert!(matches!(
            minimax_solve(&p, &SolveLimits::default()),
            Err(Error::SolverLimit(_))
        ));
        let p = params(3, 2, 2, 1);
        assert!(matches!(
            minimax_solve(&p, &SolveLimits::default()),
            Err(Error::SolverLimit(_))
        ));
        assert!(minimax_solve(&p, &SolveLimits { max_options: 3, ..Default::default() }).is_ok());
    }

    #[test]
    fn solver_requires_conflict_bound() {
        let p = GameParams { options: 2, agents: 2, rounds: 1, conflict_bound: None };
        assert!(minimax_solve(&p, &SolveLimits::default()).is_err());
    }

    #[test]
    fn optimal_strategy_achieves_the_value_against_optimal_adversary() {
        for (t, c) in [(1u32, 1u32), (2, 1), (3, 1), (2, 2), (3, 0)] {
            let p = params(2, 2, t, c);
            let solved = minimax_solve(&p, &SolveLimits::default()).unwrap();
            let mut strategy = solved.strategy();
            let mut adversary = solved.adversary();
            let play = crate::game::run_game(&p, &mut strategy, &mut adversary, 0).unwrap();
            assert_eq!(
                play.max_dissatisfaction(),
                solved.value(),
                "optimal vs optimal must land exactly on the value (T={t}, C={c})"
            );
        }
    }

    #[test]
    fn decision_table_roots_are_exhaustive() {
        let p = params(2, 2, 1, 1);
        let mut solved = minimax_solve(&p, &SolveLimits::default()).unwrap();
        let table = solved.decision_table(10_000).unwrap();
        assert_eq!(table.value, 1);
        // Round 1 has one position and (2^2)^2 = 16 legal moves.
        assert_eq!(table.entries.len(), 16);
        assert!(table.entries.iter().all(|e| e.round == 1 && e.choice >= 1 && e.choice <= 2));
    }
}
