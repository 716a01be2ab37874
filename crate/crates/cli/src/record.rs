//! Append-only run log (`runs.jsonl`).
//!
//! Each [`RunRecord`] carries a digest of its own contents and the result
//! digest of the previous record for the same configuration, so a log can be
//! checked for tampering or truncation before a run is resumed.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::drivers::Lineage;
use crate::error::{CliError, Result};
use crate::json::{sha256_hex, to_line};

/// The configuration of one invocation: subcommand plus its arguments.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub subcommand: String,
    pub args: Value,
    pub workers: usize,
}

impl RunConfig {
    /// Digest of everything that can change the result (not the workers).
    pub fn digest(&self) -> String {
        sha256_hex(to_line(&(&self.subcommand, &self.args)).as_bytes())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LineageRecord {
    pub checkpoint: Option<String>,
    pub total_shards: usize,
    pub resumed_shards: usize,
    pub computed_shards: usize,
    pub shard_digest: Option<String>,
    /// Result digest of the previous record with the same configuration.
    pub parent: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub artifact_version: String,
    pub config: RunConfig,
    pub config_digest: String,
    pub wall_seconds: f64,
    pub exit_code: u8,
    pub result_digest: String,
    pub lineage: LineageRecord,
    pub record_digest: String,
}

impl RunRecord {
    pub fn new(config: RunConfig, wall_seconds: f64, exit_code: u8, result: &[u8], lineage: &Lineage) -> Self {
        let mut rec = RunRecord {
            artifact_version: env!("CARGO_PKG_VERSION").into(),
            config_digest: config.digest(),
            config,
            wall_seconds,
            exit_code,
            result_digest: sha256_hex(result),
            lineage: LineageRecord {
                checkpoint: lineage.checkpoint.as_ref().map(|p| p.display().to_string()),
                total_shards: lineage.total_shards,
                resumed_shards: lineage.resumed_shards,
                computed_shards: lineage.computed_shards,
                shard_digest: lineage.digest.clone(),
                parent: None,
            },
            record_digest: String::new(),
        };
        rec.record_digest = rec.own_digest();
        rec
    }

    fn own_digest(&self) -> String {
        let mut body = self.clone();
        body.record_digest.clear();
        sha256_hex(to_line(&body).as_bytes())
    }

    pub fn verify(&self) -> bool {
        self.own_digest() == self.record_digest
    }
}

/// Reads and verifies every record of a log; a missing log is empty.
pub fn read_log(path: &Path) -> Result<Vec<RunRecord>> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(CliError::Io { path: path.into(), source: e }),
    };
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let rec: RunRecord = serde_json::from_str(l)
                .map_err(|e| CliError::Input(format!("{}:{}: bad run record: {e}", path.display(), i + 1)))?;
            if !rec.verify() {
                return Err(CliError::Input(format!("{}:{}: run record digest mismatch", path.display(), i + 1)));
            }
            Ok(rec)
        })
        .collect()
}

/// Appends `rec` after linking it to the latest record of the same
/// configuration.
pub fn append(path: &Path, mut rec: RunRecord) -> Result<RunRecord> {
    let previous = read_log(path)?;
    rec.lineage.parent =
        previous.iter().rev().find(|r| r.config_digest == rec.config_digest).map(|r| r.result_digest.clone());
    rec.record_digest = rec.own_digest();
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(CliError::io(dir))?;
    }
    let mut f = OpenOptions::new().create(true).append(true).open(path).map_err(CliError::io(path))?;
    writeln!(f, "{}", to_line(&rec)).map_err(CliError::io(path))?;
    Ok(rec)
}
