//! Command-line front end: JSON payloads, commands, and property campaigns.

pub mod campaigns;
pub mod commands;
pub mod generate;
pub mod io;
pub mod report;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] tauideal::Error),
}

impl CliError {
    /// Exit code 3 covers bad input and core errors alike.
    pub const EXIT_CODE: u8 = 3;
}
