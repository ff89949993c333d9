//! Five friends want pizza, three want curry, nobody ever changes their
//! mind. Weighting each person by 1/(1 + times satisfied) and taking
//! the heavier side splits every stretch of 8 dinners exactly 5 to 3.
//!
//! ```bash
//! cargo run --example pizza_weeks
//! ```

use pervote::adversaries::Scripted;
use pervote::game::{run_game, GameParams, OptionSet};
use pervote::strategies::{build_strategy, StrategyId};

fn main() -> pervote::Result<()> {
    let weeks = 24;
    let params = GameParams::new(2, 8, weeks, None)?;
    let pizza = OptionSet::from_options(&[1])?;
    let curry = OptionSet::from_options(&[2])?;
    let ballots: Vec<OptionSet> =
        (0..8).map(|i| if i < 5 { pizza } else { curry }).collect();
    let mut adversary = Scripted::from_profiles(vec![ballots; weeks as usize]);
    let mut strategy = build_strategy(StrategyId::HarmonicWinWeights, &params, None)?;

    let play = run_game(&params, strategy.as_mut(), &mut adversary, 0)?;
    let names = ["pizza", "curry"];
    let schedule: Vec<&str> =
        play.decisions.iter().map(|&d| names[d as usize - 1]).collect();
    for (week, chunk) in schedule.chunks(8).enumerate() {
        println!("weeks {:>2}-{:>2}: {}", week * 8 + 1, week * 8 + chunk.len(), chunk.join(" "));
    }

    let pizza_count = play.decisions.iter().filter(|&&d| d == 1).count();
    println!(
        "{pizza_count} pizza / {} curry over {weeks} weeks",
        weeks as usize - pizza_count
    );
    Ok(())
}
