//! Shared helpers for integration tests: an independent conflict-number
//! oracle and random play generation.

// Each test binary compiles this module separately and uses a subset.
#![allow(dead_code)]

use std::collections::HashMap;

use pervote::adversaries::AdversarySpec;
use pervote::game::{run_game, GameParams, PlayRecord};
use pervote::strategies::{build_strategy, StrategyId};

/// Naive conflict numbers, written as differently as possible from the
/// library path: round-outer iteration, bitmask subset enumeration, and
/// per-candidate hash-map accumulation. Returns
/// `(subset_number, tuple_number)`.
pub fn naive_conflict_numbers(play: &PlayRecord) -> (u32, u32) {
    let n = play.params.agents as usize;
    let k = play.params.options;

    let mut subset_rounds: HashMap<u64, u32> = HashMap::new();
    let mut tuple_rounds: HashMap<Vec<u32>, u32> = HashMap::new();

    for profile in &play.profiles {
        // subsets as bitmasks over agents, size filtered by popcount
        for mask in 1u64..(1u64 << n) {
            if mask.count_ones() > k {
                continue;
            }
            let mut shared_option_exists = false;
            for option in 1..=k {
                let mut all_approve = true;
                for agent in 0..n {
                    if mask & (1 << agent) != 0 && !profile.approvals[agent].contains(option) {
                        all_approve = false;
                        break;
                    }
                }
                if all_approve {
                    shared_option_exists = true;
                    break;
                }
            }
            if !shared_option_exists {
                *subset_rounds.entry(mask).or_insert(0) += 1;
            }
        }

        // ordered k-tuples by odometer over agent ids
        let mut tuple = vec![1u32; k as usize];
        'tuples: loop {
            let mut in_conflict = true;
            for (position, &agent) in tuple.iter().enumerate() {
                if profile.approvals[agent as usize - 1].contains(position as u32 + 1) {
                    in_conflict = false;
                    break;
                }
            }
            if in_conflict {
                *tuple_rounds.entry(tuple.clone()).or_insert(0) += 1;
            }
            let mut pos = tuple.len();
            loop {
                if pos == 0 {
                    break 'tuples;
                }
                pos -= 1;
                if tuple[pos] < n as u32 {
                    tuple[pos] += 1;
                    tuple[pos + 1..].fill(1);
                    break;
                }
            }
        }
    }

    (
        subset_rounds.values().copied().max().unwrap_or(0),
        tuple_rounds.values().copied().max().unwrap_or(0),
    )
}

/// A random-ballot play: dimensions and density derived from the seed,
/// decisions made by plurality (conflict analysis only reads profiles).
pub fn random_play(seed: u64, max_agents: u32, max_options: u32, max_rounds: u32) -> PlayRecord {
    let k = 1 + (seed % max_options as u64) as u32;
    let n = 1 + ((seed / 7) % max_agents as u64) as u32;
    let t = 1 + ((seed / 3) % max_rounds as u64) as u32;
    let density = 0.1 + 0.8 * ((seed % 97) as f64 / 96.0);
    let params = GameParams { options: k, agents: n, rounds: t, conflict_bound: None };
    let mut strategy = build_strategy(StrategyId::ApprovalVote, &params, None).unwrap();
    let mut adversary =
        AdversarySpec::Random { density, seed: Some(seed) }.build(&params, seed).unwrap();
    run_game(&params, strategy.as_mut(), adversary.as_mut(), seed).unwrap()
}
