//! Command-line front end for `zerodiv`: configuration, the four commands
//! and the exit-code contract.

pub mod commands;
pub mod config;

pub use commands::{execute, Outcome};
pub use config::{Command, GraphChoice, OutputFormat, RunConfig};

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const CLAIM_FAILED: u8 = 1;
    pub const BAD_FIELD: u8 = 2;
    pub const OUT_OF_DOMAIN: u8 = 3;
    pub const UNWRITABLE: u8 = 4;
}
