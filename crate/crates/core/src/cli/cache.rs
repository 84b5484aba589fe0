//! JSON-lines result cache for `table` sweeps.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::record::OutputRecord;

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable naming the default cache file.
pub const CACHE_ENV: &str = "HODGE_CACHE";

#[derive(Debug, Serialize, Deserialize)]
struct CacheLine {
    schema_version: u32,
    key: String,
    record: OutputRecord,
}

/// Cached records keyed by `(target, g, degrees, chamber)`.
#[derive(Debug, Default)]
pub struct Cache {
    path: Option<PathBuf>,
    entries: BTreeMap<String, OutputRecord>,
    dirty: bool,
}

impl Cache {
    pub fn disabled() -> Self {
        Cache::default()
    }

    /// Loads `path`; a missing file is an empty cache. Unreadable lines or
    /// a schema mismatch discard the whole file, with a warning on `diag`,
    /// and it is rewritten on [`Cache::flush`].
    pub fn open(path: &Path, diag: &mut dyn Write) -> Self {
        let mut cache = Cache {
            path: Some(path.to_path_buf()),
            ..Cache::default()
        };
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return cache,
            Err(e) => {
                let _ = writeln!(
                    diag,
                    "warning: cannot read cache {}: {e}; recomputing",
                    path.display()
                );
                cache.dirty = true;
                return cache;
            }
        };
        for (n, line) in text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
        {
            match serde_json::from_str::<CacheLine>(line) {
                Ok(entry) if entry.schema_version == SCHEMA_VERSION => {
                    cache.entries.insert(entry.key, entry.record);
                }
                Ok(entry) => {
                    let _ = writeln!(
                        diag,
                        "warning: cache {} has schema version {} (expected {SCHEMA_VERSION}); recomputing",
                        path.display(),
                        entry.schema_version
                    );
                    cache.reset();
                    break;
                }
                Err(e) => {
                    let _ = writeln!(
                        diag,
                        "warning: cache {} is corrupt at line {}: {e}; recomputing",
                        path.display(),
                        n + 1
                    );
                    cache.reset();
                    break;
                }
            }
        }
        cache
    }

    fn reset(&mut self) {
        self.entries.clear();
        self.dirty = true;
    }

    pub fn get(&self, key: &str) -> Option<&OutputRecord> {
        self.entries.get(key)
    }

    pub fn insert(&mut self, key: String, record: OutputRecord) {
        if self.path.is_some() {
            self.entries.insert(key, record);
            self.dirty = true;
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Writes the cache back if anything changed, in key order.
    pub fn flush(&mut self) -> io::Result<()> {
        let (Some(path), true) = (&self.path, self.dirty) else {
            return Ok(());
        };
        let mut out = String::new();
        for (key, record) in &self.entries {
            let line = CacheLine {
                schema_version: SCHEMA_VERSION,
                key: key.clone(),
                record: record.clone(),
            };
            out.push_str(&serde_json::to_string(&line).expect("cache lines serialize"));
            out.push('\n');
        }
        fs::write(path, out)?;
        self.dirty = false;
        Ok(())
    }
}
