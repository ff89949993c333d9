//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied value violates a precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Parameters for which the requested quantity is mathematically
    /// degenerate (for example a weight schedule with a single agent).
    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    /// An adversary or transcript broke the game protocol in a specific round.
    #[error("protocol violation in round {round}: {message}")]
    Protocol { round: u32, message: String },

    /// An exact enumeration would exceed the configured work budget.
    /// Enumerations refuse rather than truncate; the bound is part of
    /// the message so callers can raise it deliberately.
    #[error("enumeration budget exceeded: {required} checks required, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    /// Game dimensions too large for the exact solver.
    #[error("solver limit exceeded: {0}")]
    SolverLimit(String),

    /// A transcript, config, or script file failed to parse.
    #[error("parse error in {path}: {message}")]
    Parse { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
