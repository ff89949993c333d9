//! Exact conflict analysis of a play: subset and tuple numbers with
//! witnesses, and the enumeration budget that keeps it honest.
//!
//! ```bash
//! cargo run --example conflict_audit
//! ```

use pervote::adversaries::AdversarySpec;
use pervote::conflict::{conflict_report, conflict_report_with_budget};
use pervote::game::{run_game, GameParams};
use pervote::strategies::{build_strategy, StrategyId};

fn main() -> pervote::Result<()> {
    let params = GameParams::new(2, 9, 4, Some(1))?;
    let mut strategy = build_strategy(StrategyId::ApprovalVote, &params, None)?;
    let mut adversary = AdversarySpec::MajorityKiller.build(&params, 0)?;
    let play = run_game(&params, strategy.as_mut(), adversary.as_mut(), 0)?;

    let report = conflict_report(&play)?;
    println!("majority_killer play, T = {}:", params.rounds);
    println!("  subset conflict number = {}", report.subset_conflict_number);
    println!("  witness subset         = {:?}", report.witness_subset);
    println!("  tuple conflict number  = {}", report.tuple_conflict_number);
    println!("  witness tuple          = {:?}", report.witness_tuple);

    // The enumeration is O((subsets + N^k) * T) membership checks and
    // refuses rather than truncating when a budget cannot cover it.
    match conflict_report_with_budget(&play, 50) {
        Err(e) => println!("tiny budget refusal: {e}"),
        Ok(_) => unreachable!("50 checks cannot cover this play"),
    }
    Ok(())
}
