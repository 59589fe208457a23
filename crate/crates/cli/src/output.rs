//! Report serialization: JSON arrays and TSV rows, to stdout or a file.

use exact_core::report::ClaimReport;
use std::io::Write;
use std::path::Path;

/// Output formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// Pretty-printed JSON array of claim reports.
    Json,
    /// One tab-separated row per report.
    Tsv,
}

/// Renders reports in the chosen format. Wall times are real; callers that
/// need byte-stable output should zero them first (see [`zero_wall_times`]).
pub fn render_reports(reports: &[ClaimReport], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut s = String::from("claim-id\tpaper-location\tstatus\twall-time\twitness\n");
            for r in reports {
                s.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\n",
                    r.claim_id,
                    r.paper_location,
                    serde_json::to_value(r.status)
                        .expect("status serializes")
                        .as_str()
                        .expect("status is a string")
                        .to_string(),
                    r.wall_time_ms,
                    serde_json::to_string(&r.witness).expect("witness serializes"),
                ));
            }
            s
        }
    }
}

/// Copies reports with wall times zeroed, for byte-stable comparison.
pub fn zero_wall_times(reports: &[ClaimReport]) -> Vec<ClaimReport> {
    reports.iter().map(|r| r.clone().timed(0)).collect()
}

/// Writes rendered output to a file or stdout.
pub fn emit(text: &str, out: Option<&Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::report::ClaimStatus;
    use serde_json::json;

    #[test]
    fn tsv_rendering() {
        let reports = vec![ClaimReport::new(
            "demo-claim",
            "S1.example",
            ClaimStatus::Pass,
            json!({"k": 1}),
        )
        .timed(7)];
        let tsv = render_reports(&reports, Format::Tsv);
        assert!(tsv.starts_with("claim-id\t"));
        assert!(tsv.contains("demo-claim\tS1.example\tpass\t7\t{\"k\":1}\n"));
    }

    #[test]
    fn json_roundtrip_and_zeroing() {
        let reports = vec![ClaimReport::new(
            "demo-claim",
            "S1.example",
            ClaimStatus::Skipped,
            json!({"reason": "n/a"}),
        )
        .timed(3)];
        let zeroed = zero_wall_times(&reports);
        let text = render_reports(&zeroed, Format::Json);
        let back: Vec<ClaimReport> = serde_json::from_str(&text).unwrap();
        assert_eq!(back[0].wall_time_ms, 0);
        assert_eq!(back[0].claim_id, "demo-claim");
    }
}
