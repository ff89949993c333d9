//! Perpetual approval voting under bounded conflicts.
//!
//! A group makes one collective decision per round, for many rounds,
//! from approval ballots that may change arbitrarily. An agent is
//! dissatisfied in a round when the chosen option is not on its ballot;
//! keeping everyone's dissatisfaction small is impossible in general but
//! becomes possible when agent subsets rarely lack a commonly approved
//! option. This crate implements that setting end to end:
//!
//! - [`game`]: the round-by-round protocol, transcripts, dissatisfaction
//!   accounting;
//! - [`conflict`]: exact subset and tuple conflict numbers of a play;
//! - [`strategies`]: the exponential weights rule with its tuned
//!   learning rate, plurality baselines, the compassion monitor, and an
//!   exact minimax solver for toy dimensions;
//! - [`adversaries`]: lower-bound ballot constructions with certified
//!   conflict budgets, plus scripted and random generators;
//! - [`harness`]: experiment runs, the weight-sum certificate, the
//!   doubling wrapper for unknown parameters, and CSV sweeps;
//! - [`io`]: transcript JSON/CSV formats; [`cli`]: the `pervote` binary.
//!
//! Every major capability has a runnable example under `examples/`.
//!
//! ```
//! use pervote::adversaries::AdversarySpec;
//! use pervote::game::{run_game, GameParams};
//! use pervote::strategies::{build_strategy, StrategyId};
//!
//! let params = GameParams::new(2, 4, 4, Some(1)).unwrap();
//! let mut strategy =
//!     build_strategy(StrategyId::ExponentialWeights, &params, None).unwrap();
//! let mut adversary =
//!     AdversarySpec::GroupProduct { group_size: 2 }.build(&params, 0).unwrap();
//! let play = run_game(&params, strategy.as_mut(), adversary.as_mut(), 0).unwrap();
//! assert_eq!(play.dissatisfaction.len(), 4);
//! ```

pub mod adversaries;
pub mod cli;
pub mod conflict;
pub mod error;
pub mod game;
pub mod harness;
pub mod io;
pub mod strategies;

pub use error::{Error, Result};
