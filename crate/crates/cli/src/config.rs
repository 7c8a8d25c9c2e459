//! Optional TOML configuration; command-line flags take precedence.

use std::path::{Path, PathBuf};

use fsind::Limits;
use serde::Deserialize;

use crate::CliError;

/// Environment variable naming the config file.
pub const CONFIG_ENV: &str = "FSIND_CONFIG";

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub enumeration_bound: Option<usize>,
    pub index_bound: Option<usize>,
    pub seed: Option<u64>,
    pub threads: Option<usize>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.to_path_buf(),
            source: e,
        })?;
        toml::from_str(&text).map_err(|e| CliError::Config {
            path: path.to_path_buf(),
            message: e.to_string(),
        })
    }

    /// The file named by `--config`, else by the environment, else defaults.
    pub fn resolve(flag: Option<&PathBuf>) -> Result<Config, CliError> {
        match flag
            .cloned()
            .or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from))
        {
            Some(p) => Config::load(&p),
            None => Ok(Config::default()),
        }
    }

    /// Overlays flag values, then fills the remaining gaps with defaults.
    pub fn limits(&self, flags: &Config) -> Limits {
        let d = Limits::default();
        Limits {
            enumeration: flags
                .enumeration_bound
                .or(self.enumeration_bound)
                .unwrap_or(d.enumeration),
            index: flags.index_bound.or(self.index_bound).unwrap_or(d.index),
            seed: flags.seed.or(self.seed).unwrap_or(d.seed),
        }
    }

    pub fn threads(&self, flags: &Config) -> Option<usize> {
        flags.threads.or(self.threads)
    }
}
