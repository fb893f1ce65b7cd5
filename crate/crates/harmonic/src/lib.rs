//! Command-line front end and report formats for `harmonic-core`.

pub mod cli;
pub mod output;
pub mod parallel;

pub use cli::{run, Cli, Output};
pub use output::Format;
pub use parallel::run_plan;
