//! Experiment runner behind the `curvelab` binary: argument types, the
//! dispatcher, report rendering and the acceptance suite.

pub mod acceptance;
pub mod args;
pub mod report;
mod run;

pub use args::{Cli, Command, Format, GlobalArgs};
pub use report::{ExperimentSpec, Report, Results, Status};
pub use run::{parse_range, run};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] curvelab_core::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_ACCEPTANCE_FAILED: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(curvelab_core::Error::BudgetExceeded(_)) => EXIT_BUDGET,
            _ => EXIT_INVALID,
        }
    }
}

impl Report {
    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Complete => EXIT_OK,
            Status::Failed => EXIT_ACCEPTANCE_FAILED,
            Status::BudgetExhausted { .. } => EXIT_BUDGET,
        }
    }
}
