//! Cache administration: listing, clearing, and spot-verifying the residue
//! disk cache by recomputation.

use exact_core::report::{ClaimReport, ClaimStatus};
use residue_engine::cache::DiskCache;
use residue_engine::specs::{twisted_spec, untwisted_spec, twisted_order, untwisted_order, TwistedKind};
use residue_engine::{residue, EngineConfig, EngineError};
use exact_core::poly::UniPoly;
use serde_json::json;
use std::time::{SystemTime, UNIX_EPOCH};

/// Recomputes the polynomial a cache entry claims to hold, from scratch.
fn recompute(label: &str, p: u32, cfg: &EngineConfig) -> Result<UniPoly, String> {
    let diff = |a: Result<UniPoly, EngineError>, b: Result<UniPoly, EngineError>| {
        let a = a.map_err(|e| e.to_string())?;
        let b = b.map_err(|e| e.to_string())?;
        a.sub(&b).map_err(|e| e.to_string())
    };
    match label {
        "twisted-f" => diff(
            residue(&twisted_spec(p, TwistedKind::F, false), twisted_order(p), cfg),
            residue(&twisted_spec(p, TwistedKind::F, true), twisted_order(p), cfg),
        ),
        "twisted-g" => diff(
            residue(&twisted_spec(p, TwistedKind::G, false), twisted_order(p), cfg),
            residue(&twisted_spec(p, TwistedKind::G, true), twisted_order(p), cfg),
        ),
        "untwisted-G" => diff(
            residue(&untwisted_spec(p, false, false), untwisted_order(p), cfg),
            residue(&untwisted_spec(p, false, true), untwisted_order(p), cfg),
        ),
        "untwisted-Gt" => diff(
            residue(&untwisted_spec(p, true, true), untwisted_order(p), cfg),
            residue(&untwisted_spec(p, true, false), untwisted_order(p), cfg),
        ),
        other => Err(format!("unknown cache label '{}'", other)),
    }
}

/// Lists cache entries as one report per entry (corrupt entries falsified).
pub fn list(cache: &DiskCache) -> Result<Vec<ClaimReport>, String> {
    let entries = cache.list().map_err(|e| e.to_string())?;
    Ok(entries
        .into_iter()
        .map(|(label, p, version)| {
            let corrupt = version == "<corrupt>";
            ClaimReport::new(
                format!("cache-entry-{}-p{:02}", label, p),
                "artifact.cache",
                if corrupt { ClaimStatus::Falsified } else { ClaimStatus::Pass },
                json!({"label": label, "p": p, "version": version}),
            )
        })
        .collect())
}

/// Removes all cache entries; reports how many were deleted.
pub fn clear(cache: &DiskCache) -> Result<Vec<ClaimReport>, String> {
    let removed = cache.clear().map_err(|e| e.to_string())?;
    Ok(vec![ClaimReport::new(
        "cache-clear",
        "artifact.cache",
        ClaimStatus::Pass,
        json!({ "removed": removed }),
    )])
}

/// Spot-verifies the cache: flags corrupt entries, then recomputes one
/// randomly chosen entry among those with the smallest `p` (the cheapest to
/// reproduce) and compares it with the stored polynomial.
pub fn verify(cache: &DiskCache, cfg: &EngineConfig) -> Result<Vec<ClaimReport>, String> {
    let entries = cache.list().map_err(|e| e.to_string())?;
    let mut reports = Vec::new();
    let mut sound: Vec<(String, u32)> = Vec::new();
    for (label, p, version) in entries {
        if version == "<corrupt>" {
            reports.push(ClaimReport::new(
                format!("cache-verify-{}-p{:02}", label, p),
                "artifact.cache",
                ClaimStatus::Falsified,
                json!({"label": label, "p": p, "error": "unreadable entry"}),
            ));
        } else {
            sound.push((label, p));
        }
    }
    if sound.is_empty() {
        reports.push(ClaimReport::new(
            "cache-verify",
            "artifact.cache",
            ClaimStatus::Skipped,
            json!({"reason": "no readable entries"}),
        ));
        return Ok(reports);
    }
    let min_p = sound.iter().map(|(_, p)| *p).min().expect("nonempty");
    let cheap: Vec<&(String, u32)> = sound.iter().filter(|(_, p)| *p == min_p).collect();
    let nonce = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.subsec_nanos() as usize)
        .unwrap_or(0);
    let (label, p) = cheap[nonce % cheap.len()].clone();
    let stored = match cache.get_entry(&label, p) {
        Ok(Some(entry)) => entry.poly,
        Ok(None) => {
            reports.push(ClaimReport::new(
                format!("cache-verify-{}-p{:02}", label, p),
                "artifact.cache",
                ClaimStatus::Falsified,
                json!({"label": label, "p": p, "error": "entry vanished"}),
            ));
            return Ok(reports);
        }
        Err(e) => {
            reports.push(ClaimReport::new(
                format!("cache-verify-{}-p{:02}", label, p),
                "artifact.cache",
                ClaimStatus::Falsified,
                json!({"label": label, "p": p, "error": e}),
            ));
            return Ok(reports);
        }
    };
    let id = format!("cache-verify-{}-p{:02}", label, p);
    match recompute(&label, p, cfg) {
        Ok(fresh) if fresh == stored => reports.push(ClaimReport::new(
            id,
            "artifact.cache",
            ClaimStatus::Pass,
            json!({"label": label, "p": p}),
        )),
        Ok(fresh) => reports.push(ClaimReport::new(
            id,
            "artifact.cache",
            ClaimStatus::Falsified,
            json!({"label": label, "p": p,
                   "stored": serde_json::to_value(&stored).expect("poly serializes"),
                   "recomputed": serde_json::to_value(&fresh).expect("poly serializes")}),
        )),
        Err(e) => reports.push(ClaimReport::new(
            id,
            "artifact.cache",
            ClaimStatus::Falsified,
            json!({"label": label, "p": p, "error": e}),
        )),
    }
    Ok(reports)
}
