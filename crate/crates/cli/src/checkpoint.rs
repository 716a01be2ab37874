//! Append-only shard checkpoints for long positivity runs.
//!
//! A checkpoint is a JSON-lines file. The first line is a [`Header`] naming
//! the run it belongs to; every further line is one finished [`ShardLine`]
//! carrying its own digest. On resume the header must match the current run,
//! every shard digest is re-verified and the listed types must agree with
//! the freshly enumerated shard. A torn final line (from an interrupted
//! write) is dropped; any other damage is an error.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::json::{sha256_hex, to_line};

pub const FORMAT: &str = "cubinv-checkpoint/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub format: String,
    /// Digest of the configuration that determines the result.
    pub run_key: String,
    pub n_types: usize,
    pub shard_size: usize,
}

/// Coefficients of one shard: `(type, value)` pairs in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShardLine {
    pub shard: usize,
    pub values: Vec<(String, String)>,
    pub digest: String,
}

impl ShardLine {
    pub fn new(shard: usize, values: Vec<(String, String)>) -> Self {
        let digest = Self::content_digest(shard, &values);
        ShardLine { shard, values, digest }
    }

    fn content_digest(shard: usize, values: &[(String, String)]) -> String {
        sha256_hex(to_line(&(shard, values)).as_bytes())
    }

    pub fn verify(&self) -> bool {
        Self::content_digest(self.shard, &self.values) == self.digest
    }
}

pub struct Checkpoint {
    path: PathBuf,
    file: File,
    done: BTreeMap<usize, ShardLine>,
}

impl Checkpoint {
    /// Opens (or creates) the checkpoint for `header` in `dir`.
    pub fn open(dir: &Path, header: &Header) -> Result<Self> {
        std::fs::create_dir_all(dir).map_err(CliError::io(dir))?;
        let path = dir.join(format!("shards-{}.jsonl", &header.run_key[..16]));
        let mut done = BTreeMap::new();
        if path.exists() {
            done = Self::load(&path, header)?;
        }
        if done.is_empty() {
            let mut fresh = File::create(&path).map_err(CliError::io(&path))?;
            writeln!(fresh, "{}", to_line(header)).map_err(CliError::io(&path))?;
        } else {
            Self::rewrite(&path, header, &done)?;
        }
        let file = OpenOptions::new().append(true).open(&path).map_err(CliError::io(&path))?;
        Ok(Checkpoint { path, file, done })
    }

    fn load(path: &Path, header: &Header) -> Result<BTreeMap<usize, ShardLine>> {
        let bad = |line: usize, what: &str| CliError::Input(format!("{}:{line}: {what}", path.display()));
        let reader = BufReader::new(File::open(path).map_err(CliError::io(path))?);
        let lines: Vec<String> = reader.lines().collect::<std::io::Result<_>>().map_err(CliError::io(path))?;
        let Some(first) = lines.first() else { return Ok(BTreeMap::new()) };
        let found: Header = match serde_json::from_str(first) {
            Ok(h) => h,
            Err(_) if lines.len() == 1 => return Ok(BTreeMap::new()),
            Err(_) => return Err(bad(1, "unreadable checkpoint header")),
        };
        if found != *header {
            return Err(bad(1, "checkpoint belongs to a different run"));
        }
        let mut done = BTreeMap::new();
        for (i, text) in lines.iter().enumerate().skip(1) {
            let shard: ShardLine = match serde_json::from_str(text) {
                Ok(s) => s,
                Err(_) if i + 1 == lines.len() => break,
                Err(_) => return Err(bad(i + 1, "unreadable shard record")),
            };
            if !shard.verify() {
                return Err(bad(i + 1, "shard digest does not match its contents"));
            }
            done.insert(shard.shard, shard);
        }
        Ok(done)
    }

    /// Drops a torn tail by rewriting the verified records.
    fn rewrite(path: &Path, header: &Header, done: &BTreeMap<usize, ShardLine>) -> Result<()> {
        let tmp = path.with_extension("jsonl.tmp");
        let mut out = File::create(&tmp).map_err(CliError::io(&tmp))?;
        writeln!(out, "{}", to_line(header)).map_err(CliError::io(&tmp))?;
        for s in done.values() {
            writeln!(out, "{}", to_line(s)).map_err(CliError::io(&tmp))?;
        }
        out.sync_all().map_err(CliError::io(&tmp))?;
        std::fs::rename(&tmp, path).map_err(CliError::io(path))
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn completed(&self) -> &BTreeMap<usize, ShardLine> {
        &self.done
    }

    pub fn append(&mut self, shard: ShardLine) -> Result<()> {
        writeln!(self.file, "{}", to_line(&shard)).map_err(CliError::io(&self.path))?;
        self.file.flush().map_err(CliError::io(&self.path))?;
        self.done.insert(shard.shard, shard);
        Ok(())
    }
}

/// Digest over the shard digests in shard order; independent of how many
/// sessions produced them.
pub fn lineage_digest<'a>(shards: impl IntoIterator<Item = &'a ShardLine>) -> String {
    let joined: Vec<&str> = shards.into_iter().map(|s| s.digest.as_str()).collect();
    sha256_hex(joined.join("\n").as_bytes())
}
