//! The three lower-bound constructions side by side: what each
//! guarantees, and what the matched strategies actually suffer.
//!
//! ```bash
//! cargo run --example lower_bound_gallery
//! ```

use pervote::adversaries::AdversarySpec;
use pervote::game::GameParams;
use pervote::harness::{lower_bound_floor, run_experiment, ExperimentSpec};
use pervote::strategies::StrategyId;

fn show(spec: &ExperimentSpec) {
    let outcome = run_experiment(spec).expect("experiment runs");
    let floor = lower_bound_floor(spec.strategy, &spec.adversary, &spec.params);
    println!(
        "{:<22} vs {:<20} max_dissat={:<3} floor={:<5} conflict_number={}",
        spec.strategy.to_string(),
        spec.adversary.to_string(),
        outcome.report.observed_max_dissatisfaction,
        floor.map(|f| format!("{f}")).unwrap_or_else(|| "-".into()),
        outcome
            .report
            .conflict_number
            .map(|c| c.to_string())
            .unwrap_or_else(|| "over-budget".into()),
    );
}

fn main() {
    let base = |params, strategy, adversary| ExperimentSpec {
        params,
        strategy,
        epsilon: None,
        adversary,
        seed: 0,
        repeats: 1,
        output: None,
    };

    // Product construction: every strategy loses at least M^(k-1)/k.
    let gp = GameParams { options: 2, agents: 12, rounds: 36, conflict_bound: Some(1) };
    for strategy in [
        StrategyId::ExponentialWeights,
        StrategyId::ApprovalVote,
        StrategyId::PerpetualEquality,
        StrategyId::HarmonicWinWeights,
    ] {
        show(&base(gp, strategy, AdversarySpec::GroupProduct { group_size: 6 }));
    }
    println!();

    // Warm-up rounds: anybody loses at least C/k.
    let wu = GameParams { options: 2, agents: 4, rounds: 40, conflict_bound: Some(10) };
    show(&base(wu, StrategyId::ExponentialWeights, AdversarySpec::WarmupCk { conflicts: 10 }));
    show(&base(wu, StrategyId::ApprovalVote, AdversarySpec::WarmupCk { conflicts: 10 }));
    println!();

    // Plurality's nemesis: the loyal agent loses every single round.
    let mk = GameParams { options: 2, agents: 41, rounds: 20, conflict_bound: Some(1) };
    show(&base(mk, StrategyId::ApprovalVote, AdversarySpec::MajorityKiller));

    // Compassion's nemesis: any rescue-the-worst rule bleeds T/2.
    let ck = GameParams { options: 2, agents: 20, rounds: 20, conflict_bound: Some(1) };
    show(&base(ck, StrategyId::PerpetualEquality, AdversarySpec::CompassionKiller));
}
