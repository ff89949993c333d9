//! Play one game end to end: exponential weights against the product
//! construction, with the transcript written next to the binary's cwd.
//!
//! ```bash
//! cargo run --example single_run
//! ```

use pervote::adversaries::AdversarySpec;
use pervote::conflict::conflict_report;
use pervote::game::{run_game, GameParams};
use pervote::strategies::{build_strategy, epsilon_schedule, StrategyId};

fn main() -> pervote::Result<()> {
    // 2 options, 2 groups of 4 agents, 16 rounds, conflict number 1.
    let params = GameParams::new(2, 8, 16, Some(1))?;
    let epsilon = epsilon_schedule(&params)?;
    println!("scheduled learning rate: {epsilon:.6}");

    let mut strategy = build_strategy(StrategyId::ExponentialWeights, &params, None)?;
    let mut adversary = AdversarySpec::GroupProduct { group_size: 4 }.build(&params, 0)?;
    let play = run_game(&params, strategy.as_mut(), adversary.as_mut(), 0)?;

    println!("decisions:        {:?}", play.decisions);
    println!("dissatisfaction:  {:?}", play.dissatisfaction);
    println!("max / mean:       {} / {:.3}", play.max_dissatisfaction(), play.mean_dissatisfaction());

    let conflicts = conflict_report(&play)?;
    println!(
        "conflict numbers: subset={} (witness {:?}), tuple={} (witness {:?})",
        conflicts.subset_conflict_number,
        conflicts.witness_subset,
        conflicts.tuple_conflict_number,
        conflicts.witness_tuple
    );

    let path = std::env::temp_dir().join("pervote_single_run.json");
    pervote::io::write_transcript(&path, &play, None)?;
    println!("transcript written to {}", path.display());
    Ok(())
}
