//! Append-only result cache for exact solves: line-delimited JSON records
//! keyed by a digest of the problem descriptor and the solver algorithm id.
//! Records carry the witness so a hit can be re-verified before being
//! trusted; corrupted lines are skipped, never fatal.

use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::model::Graph;
use crate::solver::{verify_independent, SolverSettings};

pub const CACHE_FILE: &str = "solves.jsonl";

/// One cached exact solve.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CacheRecord {
    pub key: String,
    pub alpha: usize,
    pub witness: Option<Vec<u32>>,
    /// Seconds since the Unix epoch at record time.
    pub timestamp: u64,
    pub solver_version: String,
}

/// Result of a lookup: the freshest verified record plus parse diagnostics.
#[derive(Debug, Default)]
pub struct CacheLookup {
    pub record: Option<CacheRecord>,
    /// Lines that failed to parse as records.
    pub corrupt_lines: usize,
    /// Records whose witness failed re-verification against the graph.
    pub rejected: usize,
}

/// Cache key: digest of the graph descriptor and the algorithm identity.
pub fn cache_key(g: &Graph) -> String {
    let mut h = Sha256::new();
    h.update(g.descriptor().as_bytes());
    h.update(b"|");
    h.update(SolverSettings::algorithm_id().as_bytes());
    format!("{:x}", h.finalize())
}

/// A result cache rooted at one directory.
#[derive(Debug, Clone)]
pub struct ResultCache {
    path: PathBuf,
}

impl ResultCache {
    pub fn new(dir: impl AsRef<Path>) -> Self {
        ResultCache { path: dir.as_ref().join(CACHE_FILE) }
    }

    pub fn file_path(&self) -> &Path {
        &self.path
    }

    /// Scans the cache file for the key and re-verifies the stored witness
    /// against `g`. Records that fail verification are ignored.
    pub fn lookup(&self, g: &Graph, key: &str) -> CacheLookup {
        let mut out = CacheLookup::default();
        let Ok(text) = fs::read_to_string(&self.path) else {
            return out;
        };
        for line in text.lines() {
            if line.trim().is_empty() {
                continue;
            }
            let Ok(rec) = serde_json::from_str::<CacheRecord>(line) else {
                out.corrupt_lines += 1;
                continue;
            };
            if rec.key != key {
                continue;
            }
            let trusted = match &rec.witness {
                Some(w) => {
                    w.len() == rec.alpha && verify_independent(g, w).unwrap_or(false)
                }
                None => false,
            };
            if trusted {
                out.record = Some(rec);
            } else {
                out.rejected += 1;
            }
        }
        out
    }

    /// Appends one record; creates the directory and file on first use.
    pub fn append(&self, record: &CacheRecord) -> std::io::Result<()> {
        if let Some(dir) = self.path.parent() {
            fs::create_dir_all(dir)?;
        }
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        let line = serde_json::to_string(record).expect("record serializes");
        writeln!(file, "{line}")
    }
}

pub fn now_epoch_secs() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}
