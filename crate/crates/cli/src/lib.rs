//! Batch verification driver: claim suites over the exact-arithmetic
//! toolkit, disk-cache administration, and report serialization.
//!
//! Every check produces a [`ClaimReport`] rather than aborting, so a run
//! always shows the status of every claim; the worst verdict drives the
//! process exit code (0 all pass/skipped, 2 resource-capped, 1 falsified,
//! 64 usage error).

pub mod cacheadmin;
pub mod output;
pub mod suites;

use residue_engine::cache::DiskCache;
use residue_engine::EngineConfig;
use std::path::PathBuf;

pub use exact_core::report::{exit_code, ClaimReport, ClaimStatus};

/// Everything a suite run needs: parameter ranges, truncation order, cache
/// location, worker count, and the monomial resource cap.
#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Inclusive `p` range.
    pub p_range: (u32, u32),
    /// Inclusive `m` range.
    pub m_range: (u32, u32),
    /// q-series truncation order.
    pub order: i64,
    /// Residue cache directory (no caching when absent).
    pub cache_dir: Option<PathBuf>,
    /// Worker-pool size.
    pub jobs: usize,
    /// Monomial cap for the residue engine.
    pub max_monomials: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            p_range: (1, 2),
            m_range: (1, 3),
            order: 50,
            cache_dir: None,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
            max_monomials: EngineConfig::default().max_monomials,
        }
    }
}

impl RunConfig {
    /// Rejects configurations outside the supported envelope.
    pub fn validate(&self) -> Result<(), String> {
        if self.p_range.0 < 1 || self.p_range.0 > self.p_range.1 {
            return Err(format!("invalid p range {}..{}", self.p_range.0, self.p_range.1));
        }
        if self.m_range.0 < 1 || self.m_range.0 > self.m_range.1 {
            return Err(format!("invalid m range {}..{}", self.m_range.0, self.m_range.1));
        }
        if self.order < 20 {
            return Err(format!("order must be at least 20, got {}", self.order));
        }
        if self.jobs < 1 {
            return Err("jobs must be at least 1".into());
        }
        if self.max_monomials < 1 {
            return Err("max-monomials must be at least 1".into());
        }
        Ok(())
    }

    /// The residue-engine configuration implied by this run.
    pub fn engine_config(&self) -> EngineConfig {
        EngineConfig { max_monomials: self.max_monomials, ..EngineConfig::default() }
    }

    /// Opens (creating if needed) the configured disk cache.
    pub fn cache(&self) -> Result<Option<DiskCache>, String> {
        match &self.cache_dir {
            None => Ok(None),
            Some(dir) => DiskCache::new(dir.clone())
                .map(Some)
                .map_err(|e| format!("cannot open cache dir: {}", e)),
        }
    }

    /// Runs a closure inside a worker pool of the configured size.
    pub fn with_pool<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T, String> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| format!("cannot build worker pool: {}", e))?;
        Ok(pool.install(f))
    }

    /// Inclusive `p` values.
    pub fn ps(&self) -> Vec<u32> {
        (self.p_range.0..=self.p_range.1).collect()
    }

    /// Inclusive `m` values.
    pub fn ms(&self) -> Vec<u32> {
        (self.m_range.0..=self.m_range.1).collect()
    }
}

/// Parses `A..B` or a single `A` into an inclusive range.
pub fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let parse_one = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("bad range '{}': {}", s, e));
    match s.split_once("..") {
        None => {
            let v = parse_one(s)?;
            Ok((v, v))
        }
        Some((a, b)) => Ok((parse_one(a)?, parse_one(b)?)),
    }
}
