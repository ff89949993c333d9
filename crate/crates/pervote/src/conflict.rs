//! Exact conflict analysis of a play.
//!
//! A set of agents is in conflict in a round when no option is approved
//! by all of them. The conflict number of a play is the maximum, over
//! all agent subsets of size at most `k`, of the number of rounds that
//! subset is in conflict. The tuple variant ranges over ordered
//! `k`-tuples (repeats allowed) where position `i` must disapprove
//! option `i`; every tuple conflict round is also a subset conflict
//! round for the underlying set, so the tuple number never exceeds the
//! subset number.
//!
//! Both numbers are computed by full enumeration: all subsets of size
//! `<= k` and all `N^k` ordered tuples, against every round, i.e.
//! `O((sum_j C(N,j) + N^k) * T)` membership checks. The enumeration
//! refuses (rather than truncating) when that count exceeds a budget.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::PlayRecord;

/// Default enumeration budget, in subset-round / tuple-round checks.
pub const DEFAULT_CHECK_BUDGET: u128 = 100_000_000;

/// Exact subset and tuple conflict numbers with maximizing witnesses.
/// When a number is 0 the witness is the first candidate enumerated
/// (every candidate is vacuously maximizing).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConflictReport {
    pub subset_conflict_number: u32,
    pub tuple_conflict_number: u32,
    /// Agent ids (1-based, increasing) of a subset attaining the maximum.
    pub witness_subset: Vec<u32>,
    /// Agent ids (1-based, one per option position) of a tuple attaining
    /// the maximum.
    pub witness_tuple: Vec<u32>,
}

/// True when the given agents share no approved option in this round's
/// profile. Agent ids are 1-based and must be distinct in spirit but
/// duplicates are harmless.
pub fn is_subset_in_conflict(
    profile: &crate::game::ApprovalProfile,
    agents: &[u32],
) -> Result<bool> {
    if agents.is_empty() {
        return Err(Error::InvalidInput("subset of agents must be non-empty".into()));
    }
    let mut common = crate::game::OptionSet::full(crate::game::MAX_OPTIONS);
    for &a in agents {
        common = common.intersect(profile.approvals_of(a)?);
    }
    Ok(common.is_empty())
}

/// True when, for every position `i` (1-based), agent `tuple[i]`
/// disapproves option `i`. The tuple length plays the role of the option
/// count; repeats are allowed.
pub fn is_tuple_in_conflict(
    profile: &crate::game::ApprovalProfile,
    tuple: &[u32],
) -> Result<bool> {
    if tuple.is_empty() {
        return Err(Error::InvalidInput("tuple of agents must be non-empty".into()));
    }
    for (pos, &agent) in tuple.iter().enumerate() {
        let set = profile.approvals_of(agent)?;
        if set.contains(pos as u32 + 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of subsets of `{1..n}` with size in `1..=max_size`, saturating
/// into the budget check.
fn subset_count(n: u32, max_size: u32) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for j in 1..=max_size.min(n) {
        binom = binom.saturating_mul((n - j + 1) as u128) / j as u128;
        total = total.saturating_add(binom);
    }
    total
}

fn checked_pow(base: u32, exp: u32) -> u128 {
    let mut out: u128 = 1;
    for _ in 0..exp {
        out = out.saturating_mul(base as u128);
    }
    out
}

/// Maximum over agent subsets of size `<= max_size` of the number of
/// rounds the subset is in conflict, with a witness.
pub fn subset_conflict_number(
    play: &PlayRecord,
    max_size: u32,
    budget: u128,
) -> Result<(u32, Vec<u32>)> {
    let n = play.params.agents;
    let t = play.params.rounds as u128;
    let required = subset_count(n, max_size).saturating_mul(t);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }

    let mut best: u32 = 0;
    let mut witness: Vec<u32> = vec![1];
    let mut current: Vec<u32> = Vec::new();

    // Depth-first enumeration in increasing size, lexicographic within a
    // size, so the witness is the first maximizer in that order.
    fn recurse(
        play: &PlayRecord,
        size: u32,
        start: u32,
        current: &mut Vec<u32>,
        best: &mut u32,
        witness: &mut Vec<u32>,
    ) {
        if current.len() as u32 == size {
            let mut rounds_in_conflict = 0u32;
            for profile in &play.profiles {
                let mut common = crate::game::OptionSet::full(crate::game::MAX_OPTIONS);
                for &a in current.iter() {
                    common = common.intersect(profile.approvals[a as usize - 1]);
                }
                if common.is_empty() {
                    rounds_in_conflict += 1;
                }
            }
            if rounds_in_conflict > *best {
                *best = rounds_in_conflict;
                *witness = current.clone();
            }
            return;
        }
        for a in start..=play.params.agents {
            current.push(a);
            recurse(play, size, a + 1, current, best, witness);
            current.pop();
        }
    }

    for size in 1..=max_size.min(n) {
        recurse(play, size, 1, &mut current, &mut best, &mut witness);
    }
    Ok((best, witness))
}

/// Maximum over all `N^k` ordered agent tuples of the number of rounds
/// the tuple is in conflict, with a witness.
pub fn tuple_conflict_number(play: &PlayRecord, budget: u128) -> Result<(u32, Vec<u32>)> {
    let n = play.params.agents;
    let k = play.params.options;
    let t = play.params.rounds as u128;
    let required = checked_pow(n, k).saturating_mul(t);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }

    let mut best: u32 = 0;
    let mut witness: Vec<u32> = vec![1; k as usize];
    let mut tuple: Vec<u32> = vec![1; k as usize];

    // Odometer over tuples, lexicographic with the last position fastest.
    loop {
        let mut rounds_in_conflict = 0u32;
        for profile in &play.profiles {
            let mut conflicted = true;
            for (pos, &agent) in tuple.iter().enumerate() {
                if profile.approvals[agent as usize - 1].contains(pos as u32 + 1) {
                    conflicted = false;
                    break;
                }
            }
            if conflicted {
                rounds_in_conflict += 1;
            }
        }
        if rounds_in_conflict > best {
            best = rounds_in_conflict;
            witness = tuple.clone();
        }

        let mut pos = tuple.len();
        loop {
            if pos == 0 {
                return Ok((best, witness));
            }
            pos -= 1;
            if tuple[pos] < n {
                tuple[pos] += 1;
                for later in tuple.iter_mut().skip(pos + 1) {
                    *later = 1;
                }
                break;
            }
        }
    }
}

/// Full conflict report under the default enumeration budget.
pub fn conflict_report(play: &PlayRecord) -> Result<ConflictReport> {
    conflict_report_with_budget(play, DEFAULT_CHECK_BUDGET)
}

/// Full conflict report; refuses when the subset plus tuple enumeration
/// exceeds `budget` checks.
pub fn conflict_report_with_budget(play: &PlayRecord, budget: u128) -> Result<ConflictReport> {
    let n = play.params.agents;
    let k = play.params.options;
    let t = play.params.rounds as u128;
    let required = subset_count(n, k)
        .saturating_mul(t)
        .saturating_add(checked_pow(n, k).saturating_mul(t));
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }

    let (subset_number, witness_subset) = subset_conflict_number(play, k, budget)?;
    let (tuple_number, witness_tuple) = tuple_conflict_number(play, budget)?;
    debug_assert!(tuple_number <= subset_number);
    Ok(ConflictReport {
        subset_conflict_number: subset_number,
        tuple_conflict_number: tuple_number,
        witness_subset,
        witness_tuple,
    })
}
