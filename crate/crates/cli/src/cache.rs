//! Append-only JSON-lines cache of scan verdicts, keyed by
//! `(a, b, c, property, version)`.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use monodec::{MaciParams, Property};
use serde::{Deserialize, Serialize};

pub const CACHE_DIR_VAR: &str = "MONODEC_CACHE_DIR";
const FILE_NAME: &str = "maci-scan.jsonl";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub property: Property,
    pub version: String,
    pub verdict: bool,
}

impl Entry {
    pub fn new(p: MaciParams, property: Property, verdict: bool) -> Self {
        Entry {
            a: p.a,
            b: p.b,
            c: p.c,
            property,
            version: env!("CARGO_PKG_VERSION").to_string(),
            verdict,
        }
    }
}

type Key = (u32, u32, u32, Property);

pub struct ScanCache {
    path: PathBuf,
    verdicts: HashMap<Key, bool>,
}

/// `$MONODEC_CACHE_DIR`, else `$XDG_CACHE_HOME/monodec`, else
/// `$HOME/.cache/monodec`, else `.monodec-cache`.
pub fn default_path() -> PathBuf {
    let dir = std::env::var_os(CACHE_DIR_VAR)
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("XDG_CACHE_HOME").map(|d| PathBuf::from(d).join("monodec")))
        .or_else(|| std::env::var_os("HOME").map(|d| PathBuf::from(d).join(".cache").join("monodec")))
        .unwrap_or_else(|| PathBuf::from(".monodec-cache"));
    dir.join(FILE_NAME)
}

impl ScanCache {
    /// Reads every entry written by this version under a shared lock.
    /// Lines that do not parse are skipped.
    pub fn open(path: &Path) -> std::io::Result<Self> {
        if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
            fs::create_dir_all(parent)?;
        }
        let file = OpenOptions::new().read(true).append(true).create(true).open(path)?;
        file.lock_shared()?;
        let mut verdicts = HashMap::new();
        for line in BufReader::new(&file).lines() {
            let line = line?;
            let Ok(e) = serde_json::from_str::<Entry>(&line) else {
                continue;
            };
            if e.version == env!("CARGO_PKG_VERSION") {
                verdicts.insert((e.a, e.b, e.c, e.property), e.verdict);
            }
        }
        file.unlock()?;
        Ok(ScanCache {
            path: path.to_path_buf(),
            verdicts,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn get(&self, p: MaciParams, property: Property) -> Option<bool> {
        self.verdicts.get(&(p.a, p.b, p.c, property)).copied()
    }

    /// Appends `entries` under an exclusive lock, one JSON object per line.
    pub fn append(&mut self, entries: &[Entry]) -> std::io::Result<()> {
        if entries.is_empty() {
            return Ok(());
        }
        let mut buf = String::new();
        for e in entries {
            buf.push_str(&serde_json::to_string(e).expect("entry serializes"));
            buf.push('\n');
        }
        let mut file: File = OpenOptions::new().append(true).create(true).open(&self.path)?;
        file.lock()?;
        file.write_all(buf.as_bytes())?;
        file.flush()?;
        file.unlock()?;
        for e in entries {
            self.verdicts.insert((e.a, e.b, e.c, e.property), e.verdict);
        }
        Ok(())
    }
}
