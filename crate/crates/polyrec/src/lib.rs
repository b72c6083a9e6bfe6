//! Command-line front end and JSON file formats for `polyrec-core`.

pub mod cli;
pub mod commands;
pub mod input;
pub mod report;

pub use cli::{run, Outcome};
pub use report::RunReport;
