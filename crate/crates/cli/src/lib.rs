//! Scenario runner: analytic evaluation, Monte Carlo validation and
//! parameter sweeps over wildfire sensor-network scenarios, written as CSV.

pub mod commands;
pub mod config;
pub mod csvout;
pub mod error;

pub use commands::{analyze, simulate, sweep, Report};
pub use config::{ScenarioConfig, SweepAxis};
pub use error::CliError;
