//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (run with `-- --nocapture` to see them all).

mod common;

use std::time::{Duration, Instant};

use pervote::adversaries::{AdversarySpec, Scripted};
use pervote::conflict::conflict_report;
use pervote::game::{run_game, GameParams, OptionSet, PlayRecord};
use pervote::harness::{
    check_certificate, doubling_runner, CERTIFICATE_TOLERANCE,
};
use pervote::strategies::{
    build_strategy, compassion_violation_rounds, epsilon_schedule, minimax_solve, SolveLimits,
    StrategyId,
};

fn report(number: u32, name: &str, ok: bool, elapsed: Duration, limit: Duration, detail: String) {
    let timing_ok = elapsed <= limit;
    let verdict = if ok && timing_ok { "PASS" } else { "FAIL" };
    println!(
        "acceptance criterion {number:>2} [{verdict}] {name} ({elapsed:.2?} of {limit:.2?} allowed)"
    );
    assert!(ok, "criterion {number} ({name}) failed: {detail}");
    assert!(
        timing_ok,
        "criterion {number} ({name}) exceeded its runtime limit: {elapsed:.2?} > {limit:.2?}"
    );
}

fn play_matchup(
    params: &GameParams,
    strategy: StrategyId,
    epsilon: Option<f64>,
    adversary: &AdversarySpec,
    seed: u64,
) -> PlayRecord {
    let mut strategy = build_strategy(strategy, params, epsilon).unwrap();
    let mut adversary = adversary.build(params, seed).unwrap();
    run_game(params, strategy.as_mut(), adversary.as_mut(), seed).unwrap()
}

/// The four rules that run at any dimensions. The exact-solver strategy
/// joins where its position space fits.
const HEURISTICS: [StrategyId; 4] = [
    StrategyId::ExponentialWeights,
    StrategyId::ApprovalVote,
    StrategyId::PerpetualEquality,
    StrategyId::HarmonicWinWeights,
];

#[test]
fn criterion_1_plurality_loses_every_round_to_its_killer() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();

    for t in [1u32, 5, 20, 100] {
        let params =
            GameParams { options: 2, agents: 2 * t + 1, rounds: t, conflict_bound: Some(1) };
        let play = play_matchup(
            &params,
            StrategyId::ApprovalVote,
            None,
            &AdversarySpec::MajorityKiller,
            0,
        );
        let loyal_agent = (2 * t + 1) as usize - 1;
        let conflicts = conflict_report(&play).unwrap();
        if play.dissatisfaction[loyal_agent] != t {
            ok = false;
            detail = format!(
                "T={t}: loyal agent dissatisfied {} times, expected exactly {t}",
                play.dissatisfaction[loyal_agent]
            );
        }
        if conflicts.subset_conflict_number != 1 {
            ok = false;
            detail = format!(
                "T={t}: conflict number {}, expected exactly 1",
                conflicts.subset_conflict_number
            );
        }
    }

    report(
        1,
        "approval vote vs majority_killer: exactly T misses at conflict number 1",
        ok,
        start.elapsed(),
        Duration::from_secs(1),
        detail,
    );
}

#[test]
fn criterion_2_compassion_is_ground_down() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();

    for t in [2u32, 6, 20] {
        let params = GameParams { options: 2, agents: t, rounds: t, conflict_bound: Some(1) };
        let play = play_matchup(
            &params,
            StrategyId::PerpetualEquality,
            None,
            &AdversarySpec::CompassionKiller,
            0,
        );
        let floor = t / 2;
        let violations = compassion_violation_rounds(&play);
        let conflicts = conflict_report(&play).unwrap();
        if play.max_dissatisfaction() < floor {
            ok = false;
            detail = format!(
                "T={t}: max dissatisfaction {} below floor {floor}",
                play.max_dissatisfaction()
            );
        }
        if !violations.is_empty() {
            ok = false;
            detail = format!("T={t}: perpetual equality violated compassion in rounds {violations:?}");
        }
        if conflicts.subset_conflict_number != 1 {
            ok = false;
            detail = format!(
                "T={t}: conflict number {}, expected exactly 1",
                conflicts.subset_conflict_number
            );
        }
    }

    report(
        2,
        "perpetual equality vs compassion_killer: floor(T/2) dissatisfaction, compassionate, conflict number 1",
        ok,
        start.elapsed(),
        Duration::from_secs(1),
        detail,
    );
}

#[test]
fn criterion_3_product_construction_floor_is_strategy_independent() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();

    let grid: [(u32, u32); 4] = [(2, 2), (2, 3), (2, 4), (3, 2)];
    for (k, m) in grid {
        let n = k * m;
        let t = (m as u64).pow(k) as u32;
        let params = GameParams { options: k, agents: n, rounds: t, conflict_bound: Some(1) };
        let floor = (m as u64).pow(k - 1).div_ceil(k as u64) as u32;
        let adversary = AdversarySpec::GroupProduct { group_size: m };

        let mut plays: Vec<(String, PlayRecord)> = HEURISTICS
            .iter()
            .map(|&s| (s.to_string(), play_matchup(&params, s, None, &adversary, 0)))
            .collect();

        // The exact solver joins at the dimensions its position space fits.
        if k == 2 && m == 2 {
            let limits = SolveLimits { max_agents: 4, max_options: 2, max_rounds: 4 };
            let solved = minimax_solve(&params, &limits).unwrap();
            let mut strategy = solved.strategy();
            let mut adv = adversary.build(&params, 0).unwrap();
            let play = run_game(&params, &mut strategy, adv.as_mut(), 0).unwrap();
            plays.push(("minimax_oracle".into(), play));
        }

        for (name, play) in &plays {
            if play.max_dissatisfaction() < floor {
                ok = false;
                detail = format!(
                    "k={k} M={m}: {name} got away with {} < floor {floor}",
                    play.max_dissatisfaction()
                );
            }
            let conflicts = conflict_report(play).unwrap();
            if conflicts.subset_conflict_number != 1 {
                ok = false;
                detail = format!(
                    "k={k} M={m}: conflict number {} under {name}, expected exactly 1",
                    conflicts.subset_conflict_number
                );
            }
        }
    }

    report(
        3,
        "group_product forces ceil(M^(k-1)/k) on every strategy at conflict number 1",
        ok,
        start.elapsed(),
        Duration::from_secs(5),
        detail,
    );
}

#[test]
fn criterion_4_warmup_floor() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();

    for c in [2u32, 8, 32] {
        let params = GameParams { options: 2, agents: 4, rounds: 4 * c, conflict_bound: Some(c) };
        let floor = c.div_ceil(2);
        for strategy in HEURISTICS {
            let play =
                play_matchup(&params, strategy, None, &AdversarySpec::WarmupCk { conflicts: c }, 0);
            if play.max_dissatisfaction() < floor {
                ok = false;
                detail = format!(
                    "C={c}: {strategy} got away with {} < floor {floor}",
                    play.max_dissatisfaction()
                );
            }
        }
    }

    report(
        4,
        "warmup_ck forces ceil(C/k) on every strategy",
        ok,
        start.elapsed(),
        Duration::from_secs(1),
        detail,
    );
}

#[test]
fn criterion_5_weight_sum_certificate() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    let mut checked = 0u32;

    let check = |play: &PlayRecord, epsilon: f64, label: String, ok: &mut bool, detail: &mut String| {
        let report = check_certificate(play, epsilon, CERTIFICATE_TOLERANCE).unwrap();
        if !report.all_ok() {
            *ok = false;
            *detail = format!(
                "{label}: certificate slack {} argmin_ok {}",
                report.slack, report.argmin_ok
            );
        }
    };

    // Exponential-weights runs from the construction criteria.
    for (k, m) in [(2u32, 2u32), (2, 3), (2, 4), (3, 2)] {
        let n = k * m;
        let t = (m as u64).pow(k) as u32;
        let params = GameParams { options: k, agents: n, rounds: t, conflict_bound: Some(1) };
        let eps = epsilon_schedule(&params).unwrap();
        let play = play_matchup(
            &params,
            StrategyId::ExponentialWeights,
            None,
            &AdversarySpec::GroupProduct { group_size: m },
            0,
        );
        check(&play, eps, format!("group_product k={k} M={m}"), &mut ok, &mut detail);
        checked += 1;
    }
    for c in [2u32, 8, 32] {
        let params = GameParams { options: 2, agents: 4, rounds: 4 * c, conflict_bound: Some(c) };
        let eps = epsilon_schedule(&params).unwrap();
        let play = play_matchup(
            &params,
            StrategyId::ExponentialWeights,
            None,
            &AdversarySpec::WarmupCk { conflicts: c },
            0,
        );
        check(&play, eps, format!("warmup C={c}"), &mut ok, &mut detail);
        checked += 1;
    }

    // 200 random-ballot plays across the allowed dimension ranges.
    for i in 0..200u64 {
        let k = 1 + (i % 3) as u32;
        let n = 2 + ((i * 7) % 15) as u32; // 2..=16
        let t = 1 + ((i * 131) % 512) as u32; // 1..=512
        let c = 1 + (i % 4) as u32;
        let density = 0.05 + 0.9 * ((i % 41) as f64 / 40.0);
        let params = GameParams { options: k, agents: n, rounds: t, conflict_bound: Some(c) };
        let eps = epsilon_schedule(&params).unwrap();
        let play = play_matchup(
            &params,
            StrategyId::ExponentialWeights,
            None,
            &AdversarySpec::Random { density, seed: Some(9000 + i) },
            i,
        );
        check(&play, eps, format!("random play {i} (k={k} n={n} t={t})"), &mut ok, &mut detail);
        checked += 1;
    }

    report(
        5,
        &format!("weight-sum certificate holds on all {checked} exponential-weights plays"),
        ok,
        start.elapsed(),
        Duration::from_secs(30),
        detail,
    );
}

#[test]
fn criterion_6_tuple_bound_and_oracle_agreement() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();

    for seed in 0..500u64 {
        let play = common::random_play(seed, 5, 3, 8);
        let report = conflict_report(&play).unwrap();
        let (naive_subset, naive_tuple) = common::naive_conflict_numbers(&play);
        if report.tuple_conflict_number > report.subset_conflict_number {
            ok = false;
            detail = format!(
                "seed {seed}: tuple number {} exceeds subset number {}",
                report.tuple_conflict_number, report.subset_conflict_number
            );
        }
        if report.subset_conflict_number != naive_subset
            || report.tuple_conflict_number != naive_tuple
        {
            ok = false;
            detail = format!(
                "seed {seed}: report ({}, {}) disagrees with oracle ({naive_subset}, {naive_tuple})",
                report.subset_conflict_number, report.tuple_conflict_number
            );
        }
    }

    report(
        6,
        "tuple conflict number bounded by subset number; report matches the naive oracle on 500 plays",
        ok,
        start.elapsed(),
        Duration::from_secs(30),
        detail,
    );
}

#[test]
fn criterion_7_solver_value_is_a_true_floor() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();

    for t in [1u32, 2, 3] {
        for c in [0u32, 1] {
            let params = GameParams { options: 2, agents: 2, rounds: t, conflict_bound: Some(c) };
            let solved = minimax_solve(&params, &SolveLimits::default()).unwrap();
            let value = solved.value();

            // N >= k here, so the warm-up floor applies.
            let warmup_floor = c.div_ceil(2);
            if value < warmup_floor {
                ok = false;
                detail = format!("T={t} C={c}: value {value} below ceil(C/k) = {warmup_floor}");
            }

            // Every heuristic against the solver's own worst-case
            // adversary does no better than the optimal value.
            for strategy in HEURISTICS {
                // The schedule needs C >= 1; pin the rate directly where
                // the bound is degenerate.
                let epsilon = (strategy == StrategyId::ExponentialWeights).then_some(0.5);
                let mut strat = build_strategy(strategy, &params, epsilon).unwrap();
                let mut adversary = solved.adversary();
                let play = run_game(&params, strat.as_mut(), &mut adversary, 0).unwrap();
                if play.max_dissatisfaction() < value {
                    ok = false;
                    detail = format!(
                        "T={t} C={c}: {strategy} finished at {} < solver value {value}",
                        play.max_dissatisfaction()
                    );
                }
            }
        }
    }

    report(
        7,
        "solver value lower-bounds every heuristic against the worst-case adversary, and respects ceil(C/k)",
        ok,
        start.elapsed(),
        Duration::from_secs(60),
        detail,
    );
}

#[test]
fn criterion_8_proportional_pizza_windows() {
    let start = Instant::now();
    let t = 40u32;
    let params = GameParams { options: 2, agents: 8, rounds: t, conflict_bound: None };
    let pizza_only = OptionSet::from_options(&[1]).unwrap();
    let curry_only = OptionSet::from_options(&[2]).unwrap();
    let static_round: Vec<OptionSet> = (0..8)
        .map(|i| if i < 5 { pizza_only } else { curry_only })
        .collect();
    let mut adversary = Scripted::from_profiles(vec![static_round; t as usize]);
    let mut strategy = build_strategy(StrategyId::HarmonicWinWeights, &params, None).unwrap();
    let play = run_game(&params, strategy.as_mut(), &mut adversary, 0).unwrap();

    let mut ok = true;
    let mut detail = String::new();
    for window in play.decisions.windows(8) {
        let pizza = window.iter().filter(|&&d| d == 1).count();
        if pizza != 5 {
            ok = false;
            detail = format!("window {window:?} chose pizza {pizza} times, expected 5");
            break;
        }
    }

    report(
        8,
        "harmonic win weights split every 8-round window 5-to-3 over 40 rounds",
        ok,
        start.elapsed(),
        Duration::from_secs(1),
        detail,
    );
}

#[test]
fn criterion_9_doubling_trick_with_hidden_conflict_bound() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();

    let true_c = 8u32;
    let grid = [(4u32, 256u32), (8, 256), (6, 512)];
    for (n, t) in grid {
        let params = GameParams { options: 2, agents: n, rounds: t, conflict_bound: None };
        let mut adversary =
            AdversarySpec::WarmupCk { conflicts: true_c }.build(&params, 0).unwrap();
        let outcome =
            doubling_runner(&params, adversary.as_mut(), None, Some(t), 0).unwrap();

        let epochs = outcome.epochs.len();
        if epochs > 4 {
            ok = false;
            detail = format!("n={n} t={t}: {epochs} epochs, expected at most ceil(log2 8) + 1 = 4");
        }
        let last_bound = outcome.epochs.last().unwrap().bound;
        let total = outcome.total_max_dissatisfaction() as f64;
        if total > 4.0 * last_bound {
            ok = false;
            detail = format!(
                "n={n} t={t}: total {total} exceeds 4 x final epoch bound {last_bound}"
            );
        }
        if outcome.final_conflict_guess > 2 * true_c {
            ok = false;
            detail = format!(
                "n={n} t={t}: guess {} overshot twice the true bound",
                outcome.final_conflict_guess
            );
        }
    }

    report(
        9,
        "doubling runner with hidden C=8: few epochs, total within 4x the final bound",
        ok,
        start.elapsed(),
        Duration::from_secs(10),
        detail,
    );
}
