//! On-disk cache of search reports, one JSON document per `(n, d, t)`.

use std::fs;
use std::io::ErrorKind;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formulas::{PairWitness, WitnessOrigin};
use crate::search::{SearchReport, ENGINE_VERSION};
use crate::seqcore::BinarySequence;

pub const CACHE_SCHEMA_VERSION: u32 = 1;
/// Overrides the cache directory.
pub const CACHE_DIR_ENV: &str = "SEQRECON_CACHE_DIR";
const DEFAULT_DIR: &str = ".seqrecon-cache";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub schema_version: u32,
    pub n: usize,
    pub d: usize,
    pub t: i64,
    pub value: u64,
    pub witness_x: Option<BinarySequence>,
    pub witness_y: Option<BinarySequence>,
    pub pairs_scanned: u64,
    pub classes_scanned: u64,
    pub engine_version: String,
    pub elapsed_us: u64,
}

#[derive(Deserialize)]
struct Versions {
    schema_version: Option<u32>,
    engine_version: Option<String>,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$SEQRECON_CACHE_DIR`, falling back to `./.seqrecon-cache`.
    pub fn from_env() -> Self {
        Cache::new(std::env::var_os(CACHE_DIR_ENV).map_or_else(|| PathBuf::from(DEFAULT_DIR), PathBuf::from))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, n: usize, d: usize, t: i64) -> PathBuf {
        self.dir.join(format!("n{n}-d{d}-t{t}.json"))
    }

    pub fn store(&self, report: &SearchReport) -> Result<PathBuf> {
        let entry = CacheEntry {
            schema_version: CACHE_SCHEMA_VERSION,
            n: report.n,
            d: report.d,
            t: report.t,
            value: report.value,
            witness_x: report.witness.map(|w| w.x),
            witness_y: report.witness.map(|w| w.y),
            pairs_scanned: report.pairs_scanned,
            classes_scanned: report.classes_scanned,
            engine_version: ENGINE_VERSION.to_string(),
            elapsed_us: report.elapsed_us,
        };
        let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", self.dir.display()));
        fs::create_dir_all(&self.dir).map_err(io)?;
        let path = self.path(report.n, report.d, report.t);
        let tmp = path.with_extension("json.tmp");
        let text = serde_json::to_string_pretty(&entry).expect("entry serializes");
        fs::write(&tmp, text + "\n").map_err(io)?;
        fs::rename(&tmp, &path).map_err(io)?;
        Ok(path)
    }

    /// `None` when absent or written by another engine/schema version; an
    /// unreadable or inconsistent file is an error.
    pub fn load(&self, n: usize, d: usize, t: i64) -> Result<Option<SearchReport>> {
        let path = self.path(n, d, t);
        let corrupt = |why: String| Error::Cache(format!("{}: {why}", path.display()));
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) if e.kind() == ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(corrupt(e.to_string())),
        };
        let versions: Versions = serde_json::from_str(&text).map_err(|e| corrupt(e.to_string()))?;
        if versions.schema_version != Some(CACHE_SCHEMA_VERSION)
            || versions.engine_version.as_deref() != Some(ENGINE_VERSION)
        {
            return Ok(None);
        }
        let entry: CacheEntry = serde_json::from_str(&text).map_err(|e| corrupt(e.to_string()))?;
        if (entry.n, entry.d, entry.t) != (n, d, t) {
            return Err(corrupt(format!(
                "holds parameters ({}, {}, {})",
                entry.n, entry.d, entry.t
            )));
        }
        let witness = match (entry.witness_x, entry.witness_y) {
            (Some(x), Some(y)) => {
                let w = PairWitness::new(x, y, d, t, WitnessOrigin::Search)
                    .map_err(|e| corrupt(format!("witness rejected: {e}")))?;
                if w.x.len() != n || w.intersection != entry.value {
                    return Err(corrupt("witness does not attain the stored value".into()));
                }
                Some(w)
            }
            (None, None) => None,
            _ => return Err(corrupt("only one witness word present".into())),
        };
        Ok(Some(SearchReport {
            n,
            d,
            t,
            value: entry.value,
            witness,
            pairs_scanned: entry.pairs_scanned,
            classes_scanned: entry.classes_scanned,
            elapsed_us: entry.elapsed_us,
        }))
    }

    /// Cached `(n, d, t)` keys, sorted.
    pub fn keys(&self) -> Result<Vec<(usize, usize, i64)>> {
        let entries = match fs::read_dir(&self.dir) {
            Ok(entries) => entries,
            Err(e) if e.kind() == ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(Error::Cache(format!("{}: {e}", self.dir.display()))),
        };
        let mut keys: Vec<_> = entries
            .filter_map(|e| e.ok())
            .filter_map(|e| parse_key(&e.file_name().to_string_lossy()))
            .collect();
        keys.sort();
        Ok(keys)
    }

    /// Removes every cache file; returns how many were deleted.
    pub fn clear(&self) -> Result<usize> {
        let keys = self.keys()?;
        for &(n, d, t) in &keys {
            fs::remove_file(self.path(n, d, t)).map_err(|e| Error::Cache(e.to_string()))?;
        }
        Ok(keys.len())
    }
}

fn parse_key(name: &str) -> Option<(usize, usize, i64)> {
    let rest = name.strip_prefix('n')?.strip_suffix(".json")?;
    let (n, rest) = rest.split_once("-d")?;
    let (d, t) = rest.split_once("-t")?;
    Some((n.parse().ok()?, d.parse().ok()?, t.parse().ok()?))
}
