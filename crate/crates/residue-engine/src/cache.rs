//! Disk cache for residue results.
//!
//! One JSON file per entry: `{"label", "p", "version", "poly"}`. Writes go to
//! a temporary file followed by an atomic rename, so concurrent runs never
//! observe a torn entry. The engine version participates in the key: changing
//! the expansion convention invalidates old results.

use exact_core::poly::UniPoly;
use serde::{Deserialize, Serialize};
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

/// Version string baked into every cache entry.
pub const ENGINE_VERSION: &str = "residue-engine-1";

/// A stored residue result.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CacheEntry {
    /// Spec label, e.g. `twisted-f`.
    pub label: String,
    /// Family parameter.
    pub p: u32,
    /// Engine version that produced the entry.
    pub version: String,
    /// The residue polynomial in `t`.
    pub poly: UniPoly,
}

/// Directory-backed cache of residue polynomials.
#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    /// Opens (and creates if needed) a cache directory.
    pub fn new(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(DiskCache { dir })
    }

    /// The cache directory.
    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, label: &str, p: u32) -> PathBuf {
        self.dir.join(format!("{label}-p{p}.json"))
    }

    /// Loads an entry if present, valid JSON, and version-matched.
    pub fn get(&self, label: &str, p: u32) -> Option<UniPoly> {
        let entry = self.get_entry(label, p).ok()??;
        (entry.version == ENGINE_VERSION && entry.label == label && entry.p == p)
            .then_some(entry.poly)
    }

    /// Loads an entry, distinguishing absence (`Ok(None)`) from corruption
    /// (`Err`), for cache verification.
    pub fn get_entry(&self, label: &str, p: u32) -> Result<Option<CacheEntry>, String> {
        let path = self.path(label, p);
        let data = match fs::read_to_string(&path) {
            Ok(d) => d,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(format!("{}: {e}", path.display())),
        };
        serde_json::from_str::<CacheEntry>(&data)
            .map(Some)
            .map_err(|e| format!("{}: {e}", path.display()))
    }

    /// Stores an entry via write-to-temporary-then-atomic-rename.
    pub fn put(&self, label: &str, p: u32, poly: &UniPoly) -> std::io::Result<()> {
        let entry = CacheEntry {
            label: label.to_string(),
            p,
            version: ENGINE_VERSION.to_string(),
            poly: poly.clone(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(serde_json::to_string_pretty(&entry).unwrap().as_bytes())?;
        tmp.persist(self.path(label, p)).map_err(|e| e.error)?;
        Ok(())
    }

    /// Lists `(label, p, version)` for every `.json` entry, sorted. Unreadable
    /// entries appear with version `"<corrupt>"`.
    pub fn list(&self) -> std::io::Result<Vec<(String, u32, String)>> {
        let mut out = Vec::new();
        for item in fs::read_dir(&self.dir)? {
            let path = item?.path();
            if path.extension().and_then(|e| e.to_str()) != Some("json") {
                continue;
            }
            match fs::read_to_string(&path)
                .ok()
                .and_then(|d| serde_json::from_str::<CacheEntry>(&d).ok())
            {
                Some(e) => out.push((e.label, e.p, e.version)),
                None => out.push((
                    path.file_stem().unwrap_or_default().to_string_lossy().into_owned(),
                    0,
                    "<corrupt>".into(),
                )),
            }
        }
        out.sort();
        Ok(out)
    }

    /// Removes every `.json` entry.
    pub fn clear(&self) -> std::io::Result<usize> {
        let mut n = 0;
        for item in fs::read_dir(&self.dir)? {
            let path = item?.path();
            if path.extension().and_then(|e| e.to_str()) == Some("json") {
                fs::remove_file(path)?;
                n += 1;
            }
        }
        Ok(n)
    }
}
