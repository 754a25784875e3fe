use std::fmt;

use surfkit_core::Error;

/// Process exit codes.
pub mod exit {
    pub const USAGE: u8 = 1;
    pub const GENERICITY: u8 = 2;
    /// Two independent computations disagreed, or a check failed.
    pub const MISMATCH: u8 = 3;
    pub const COMPUTATION: u8 = 4;
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: exit::USAGE, message: message.into() }
    }

    pub fn mismatch(message: impl Into<String>) -> Self {
        CliError { code: exit::MISMATCH, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::InvalidPrime(_) | Error::NotInIdeal => exit::USAGE,
            Error::NotGeneric(_) | Error::GenericityExhausted { .. } => exit::GENERICITY,
            _ => exit::COMPUTATION,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError { code: exit::COMPUTATION, message: e.to_string() }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError { code: exit::COMPUTATION, message: e.to_string() }
    }
}
