//! The machine-checkable dissatisfaction bound.
//!
//! Exponential weights guarantees, for every agent, that
//! `(1+eps)^{D_i}` never exceeds `N * prod_r (1 + eps * delta_r)` where
//! `delta_r` is the chosen option's disapprover mass. This example runs
//! the rule, replays the transcript, and prints the certificate's two
//! sides in log-space.
//!
//! ```bash
//! cargo run --example certificate_check
//! ```

use pervote::adversaries::AdversarySpec;
use pervote::game::{run_game, GameParams};
use pervote::harness::{check_certificate, CERTIFICATE_TOLERANCE};
use pervote::strategies::{build_strategy, epsilon_schedule, StrategyId};

fn main() -> pervote::Result<()> {
    let params = GameParams::new(2, 10, 128, Some(4))?;
    let epsilon = epsilon_schedule(&params)?;
    let mut strategy = build_strategy(StrategyId::ExponentialWeights, &params, None)?;
    let mut adversary = AdversarySpec::Random { density: 0.55, seed: Some(17) }.build(&params, 17)?;
    let play = run_game(&params, strategy.as_mut(), adversary.as_mut(), 17)?;

    let report = check_certificate(&play, epsilon, CERTIFICATE_TOLERANCE)?;
    println!("epsilon                 = {:.6}", report.epsilon);
    println!("max_i D_i ln(1+eps)     = {:.6}  (agent {})", report.max_log_weight, report.worst_agent);
    println!("ln N + sum ln(1+eps d)  = {:.6}", report.log_budget);
    println!("slack                   = {:.6}", report.slack);
    println!("every round at argmin   = {}", report.argmin_ok);
    println!("certificate holds       = {}", report.all_ok());

    // The per-round masses the bound integrates over.
    let shown: Vec<String> = report.deltas.iter().take(8).map(|d| format!("{d:.4}")).collect();
    println!("first disapprover masses: {}", shown.join(", "));
    Ok(())
}
