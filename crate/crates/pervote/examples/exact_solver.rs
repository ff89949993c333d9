//! Solve tiny games exactly and play against the solver's worst case.
//!
//! The solver walks every position (round, per-agent dissatisfaction,
//! per-subset conflict counts) of the conflict-bounded game and returns
//! the guaranteed maximum dissatisfaction under optimal play, plus a
//! playable optimal strategy and worst-case adversary.
//!
//! ```bash
//! cargo run --example exact_solver
//! ```

use pervote::game::{run_game, GameParams};
use pervote::strategies::{build_strategy, minimax_solve, SolveLimits, StrategyId};

fn main() -> pervote::Result<()> {
    println!("value grid for k=2, N=2:");
    println!("{:>4} {:>4} {:>6} {:>10}", "T", "C", "value", "positions");
    for t in 1..=3 {
        for c in 0..=2 {
            let params = GameParams::new(2, 2, t, Some(c))?;
            let solved = minimax_solve(&params, &SolveLimits::default())?;
            println!("{t:>4} {c:>4} {:>6} {:>10}", solved.value(), solved.positions_analyzed());
        }
    }

    // Heuristics against the worst-case adversary can only do worse
    // than the optimal value.
    let params = GameParams::new(2, 2, 3, Some(1))?;
    let solved = minimax_solve(&params, &SolveLimits::default())?;
    println!("\nk=2 N=2 T=3 C=1: optimal value = {}", solved.value());
    for strategy_id in [StrategyId::ApprovalVote, StrategyId::PerpetualEquality] {
        let mut strategy = build_strategy(strategy_id, &params, None)?;
        let mut adversary = solved.adversary();
        let play = run_game(&params, strategy.as_mut(), &mut adversary, 0)?;
        println!(
            "  {strategy_id} vs worst case: max dissatisfaction {}",
            play.max_dissatisfaction()
        );
    }
    let mut optimal = solved.strategy();
    let mut adversary = solved.adversary();
    let play = run_game(&params, &mut optimal, &mut adversary, 0)?;
    println!("  optimal vs worst case: max dissatisfaction {}", play.max_dissatisfaction());

    // The optimal policy as an explicit table.
    let mut solved = minimax_solve(&GameParams::new(2, 2, 1, Some(1))?, &SolveLimits::default())?;
    let table = solved.decision_table(10_000)?;
    println!("\nT=1 decision table ({} entries), first rows:", table.entries.len());
    for entry in table.entries.iter().take(5) {
        println!(
            "  profile {:?} -> option {}",
            entry.profile, entry.choice
        );
    }
    let path = std::env::temp_dir().join("pervote_decision_table.json");
    std::fs::write(&path, serde_json::to_string_pretty(&table).expect("serializes"))?;
    println!("full table written to {}", path.display());
    Ok(())
}
