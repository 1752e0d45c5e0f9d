use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Environment variable capping the worker count (0 = automatic).
pub const THREADS_ENV: &str = "SENDOV_LAB_THREADS";

pub const DEFAULT_MIN_SEP: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Check,
    Thresholds,
    Audit,
    Search,
    LemmaGrid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub mode: Mode,
    pub n_min: usize,
    pub n_max: usize,
    pub samples: usize,
    pub seed: u64,
    pub min_sep: f64,
    /// Worker count; 0 lets the pool decide. Not part of the report.
    #[serde(skip)]
    pub threads: usize,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            mode: Mode::Search,
            n_min: 2,
            n_max: 8,
            samples: 100,
            seed: 42,
            min_sep: DEFAULT_MIN_SEP,
            threads: 0,
            out: None,
            format: Format::Json,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_min < 2 {
            return Err(Error::InvalidConfig(format!("n_min = {} < 2", self.n_min)));
        }
        if self.n_max < self.n_min {
            return Err(Error::InvalidConfig(format!(
                "empty degree range {}..={}",
                self.n_min, self.n_max
            )));
        }
        if self.samples == 0 {
            return Err(Error::InvalidConfig("samples must be at least 1".into()));
        }
        if !(self.min_sep > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "min separation {} <= 0",
                self.min_sep
            )));
        }
        Ok(())
    }

    /// Reads the worker cap from the environment, leaving `threads` alone
    /// when the variable is absent or unparsable.
    pub fn with_env_threads(mut self) -> Self {
        if let Some(t) = std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            self.threads = t;
        }
        self
    }
}
