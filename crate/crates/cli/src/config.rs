use std::path::{Path, PathBuf};

use serde::Deserialize;
use surfkit_core::field::is_prime;
use surfkit_core::DEFAULT_PRIME;

use crate::error::CliError;

/// Values a config file may set; every command-line flag overrides its key.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub prime: Option<u32>,
    pub seed: Option<u64>,
    pub degree_bound: Option<u32>,
    pub out: Option<PathBuf>,
    pub json: Option<bool>,
    pub rows: Option<Vec<String>>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read config {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::usage(format!("bad config {}: {e}", path.display())))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub prime: u32,
    pub seed: u64,
    /// `None` lets each command pick its own bound.
    pub degree_bound: Option<u32>,
    pub out: PathBuf,
    pub json: bool,
    pub rows: Option<Vec<String>>,
}

/// Flag values as parsed; `None` means "not given".
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub prime: Option<u32>,
    pub seed: Option<u64>,
    pub degree_bound: Option<u32>,
    pub out: Option<PathBuf>,
    pub json: bool,
    pub rows: Option<Vec<String>>,
}

impl RunConfig {
    pub fn merge(flags: Overrides, file: FileConfig) -> Result<Self, CliError> {
        let cfg = RunConfig {
            prime: flags.prime.or(file.prime).unwrap_or(DEFAULT_PRIME),
            seed: flags.seed.or(file.seed).unwrap_or(1),
            degree_bound: flags.degree_bound.or(file.degree_bound),
            out: flags.out.or(file.out).unwrap_or_else(|| PathBuf::from("surfkit-out")),
            json: flags.json || file.json.unwrap_or(false),
            rows: flags.rows.or(file.rows),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.prime <= 1000 {
            return Err(CliError::usage(format!("prime {} too small, need p > 1000", self.prime)));
        }
        if !is_prime(self.prime) || self.prime >= 1 << 31 {
            return Err(CliError::usage(format!("{} is not a prime below 2^31", self.prime)));
        }
        Ok(())
    }

    pub fn bound_or(&self, default: u32) -> u32 {
        self.degree_bound.unwrap_or(default)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_beat_file() {
        let file: FileConfig = toml::from_str("prime = 32003\nseed = 9\njson = true").unwrap();
        let flags = Overrides { seed: Some(4), ..Default::default() };
        let cfg = RunConfig::merge(flags, file).unwrap();
        assert_eq!((cfg.prime, cfg.seed, cfg.json), (32003, 4, true));
    }

    #[test]
    fn rejects_small_and_composite_primes() {
        for p in [2, 997, 32001] {
            let flags = Overrides { prime: Some(p), ..Default::default() };
            assert!(RunConfig::merge(flags, FileConfig::default()).is_err(), "{p}");
        }
    }

    #[test]
    fn unknown_keys_are_errors() {
        assert!(toml::from_str::<FileConfig>("primes = 3").is_err());
    }
}
