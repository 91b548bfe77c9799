//! Optional JSON configuration mirroring the command-line flags.

use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::Deserialize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub diameter: Option<usize>,
    pub a1_max: Option<i64>,
    pub workers: Option<usize>,
    pub format: Option<Format>,
    #[serde(default)]
    pub disable: Vec<u8>,
    pub with_bcn444: Option<bool>,
    pub data_dir: Option<PathBuf>,
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, String> {
        let Some(path) = path else {
            return Ok(FileConfig::default());
        };
        let text = fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("config {}: {e}", path.display()))
    }

    pub fn format(&self, flag: Option<Format>) -> Format {
        flag.or(self.format).unwrap_or_default()
    }

    /// Flag values replace the file's list when any are given.
    pub fn disable(&self, flag: &[u8]) -> Vec<u8> {
        if flag.is_empty() {
            self.disable.clone()
        } else {
            flag.to_vec()
        }
    }
}
