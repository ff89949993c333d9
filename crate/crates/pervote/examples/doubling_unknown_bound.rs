//! Running without knowing the conflict bound: guess C = 1, restart
//! with a doubled guess whenever an epoch's dissatisfaction overshoots
//! its bound expression.
//!
//! ```bash
//! cargo run --example doubling_unknown_bound
//! ```

use pervote::adversaries::AdversarySpec;
use pervote::game::GameParams;
use pervote::harness::doubling_runner;

fn show(label: &str, params: &GameParams, adversary: AdversarySpec, seed: u64) {
    let mut adversary = adversary.build(params, seed).expect("adversary builds");
    let outcome = doubling_runner(params, adversary.as_mut(), None, Some(params.rounds), seed)
        .expect("runner finishes");
    println!("{label}:");
    println!("{:>7} {:>8} {:>8} {:>10} {:>10} {:>10}", "epoch", "rounds", "C-guess", "epsilon", "max", "bound");
    for (i, epoch) in outcome.epochs.iter().enumerate() {
        println!(
            "{:>7} {:>8} {:>8} {:>10.4} {:>10} {:>10.2}",
            i + 1,
            format!("{}-{}", epoch.start_round, epoch.end_round),
            epoch.conflict_guess,
            epoch.epsilon,
            epoch.epoch_max_dissatisfaction,
            epoch.bound
        );
    }
    println!(
        "total max dissatisfaction: {} (final guess {})\n",
        outcome.total_max_dissatisfaction(),
        outcome.final_conflict_guess
    );
}

fn main() {
    // A tame adversary: the C = 1 bound is never violated, one epoch.
    let tame = GameParams { options: 2, agents: 4, rounds: 256, conflict_bound: None };
    show("warm-up adversary, true C = 8", &tame, AdversarySpec::WarmupCk { conflicts: 8 }, 0);

    // A hostile stream of empty ballots: dissatisfaction climbs one per
    // round, so the guess has to double its way up.
    let hostile = GameParams { options: 2, agents: 4, rounds: 256, conflict_bound: None };
    show(
        "empty-ballot adversary (unbounded conflicts)",
        &hostile,
        AdversarySpec::Random { density: 0.0, seed: Some(3) },
        3,
    );
}
