//! Structured claim verdicts shared by every verification suite.
//!
//! A claim check never aborts a run: it produces a [`ClaimReport`] whose
//! status is one of pass / falsified / skipped / resource-capped, with a
//! serialized witness. Falsified reports always carry a witness.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome of a single claim check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    /// The claim reproduced exactly (up to its stated scalar/sign freedom).
    Pass,
    /// The check was not run (e.g. out of the configured range).
    Skipped,
    /// The computation hit the configured resource cap before finishing.
    ResourceCapped,
    /// The claim failed an exact comparison; the witness shows how.
    Falsified,
}

impl ClaimStatus {
    /// Process exit code contribution: falsified dominates resource-capped.
    pub fn exit_code(self) -> i32 {
        match self {
            ClaimStatus::Pass | ClaimStatus::Skipped => 0,
            ClaimStatus::ResourceCapped => 2,
            ClaimStatus::Falsified => 1,
        }
    }
}

/// One verified (or falsified) claim.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClaimReport {
    /// Stable machine identifier, e.g. `twisted.divisibility.p2`.
    #[serde(rename = "claim-id")]
    pub claim_id: String,
    /// Where the claim is stated, e.g. `S5.table`.
    #[serde(rename = "paper-location")]
    pub paper_location: String,
    /// Verdict.
    pub status: ClaimStatus,
    /// Serialized polynomial / series / scalar evidence.
    pub witness: Value,
    /// Wall-clock milliseconds spent on this claim.
    #[serde(rename = "wall-time")]
    pub wall_time_ms: u64,
}

impl ClaimReport {
    /// Builds a report; callers fill in wall time via [`ClaimReport::timed`].
    pub fn new(
        claim_id: impl Into<String>,
        paper_location: impl Into<String>,
        status: ClaimStatus,
        witness: Value,
    ) -> Self {
        let report = ClaimReport {
            claim_id: claim_id.into(),
            paper_location: paper_location.into(),
            status,
            witness,
        wall_time_ms: 0,
        };
        debug_assert!(
            report.status != ClaimStatus::Falsified || !report.witness.is_null(),
            "falsified reports must carry a witness"
        );
        report
    }

    /// Returns the report with its wall time set.
    pub fn timed(mut self, wall_time_ms: u64) -> Self {
        self.wall_time_ms = wall_time_ms;
        self
    }
}

/// Worst-case exit code over a batch of reports (0 ok, 2 capped, 1 falsified).
pub fn exit_code(reports: &[ClaimReport]) -> i32 {
    let mut code = 0;
    for r in reports {
        let c = r.status.exit_code();
        if c == 1 {
            return 1;
        }
        code = code.max(c);
    }
    code
}
