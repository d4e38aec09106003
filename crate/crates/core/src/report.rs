//! The machine-readable verification report and its text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::point::PointRecord;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConfigEcho {
    pub seed: u64,
    pub trials: usize,
    pub n_max: usize,
    pub eps_max: usize,
    pub rational_height: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureRecord {
    pub point: PointRecord,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityResult {
    pub id: String,
    pub paper_ref: String,
    pub trials: usize,
    pub passes: usize,
    pub failures: Vec<FailureRecord>,
    /// Degenerate points drawn and resampled.
    pub degeneracies: usize,
    /// Summed evaluation time of this id's trials.
    pub wall_time_ms: u64,
}

/// Comparison of the two readings of the cor-d2 left-hand side against its
/// printed right-hand side, over the points sampled for cor-d2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorD2Check {
    pub points: usize,
    /// Matches with the upper parameter `q^{-n}` as printed.
    pub printed_matches: usize,
    /// Matches with the upper parameter `q^{2-n}`.
    pub shifted_matches: usize,
    /// The reading that matched at every point when exactly one did.
    pub matching: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub schema: u32,
    pub catalog_version: u32,
    pub config: ConfigEcho,
    pub results: Vec<IdentityResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cor_d2_lhs_check: Option<CorD2Check>,
}

impl VerificationReport {
    pub fn total_failures(&self) -> usize {
        self.results.iter().map(|r| r.failures.len()).sum()
    }

    pub fn total_degeneracies(&self) -> usize {
        self.results.iter().map(|r| r.degeneracies).sum()
    }

    pub fn all_passed(&self) -> bool {
        self.total_failures() == 0
    }

    /// Copy with every timing field zeroed, for byte-level comparison.
    pub fn without_timing(&self) -> Self {
        let mut r = self.clone();
        for res in &mut r.results {
            res.wall_time_ms = 0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<8} {:>6} {:>6} {:>6} {:>6} {:>8}  reference",
            "id", "trials", "pass", "fail", "degen", "ms"
        );
        for r in &self.results {
            let _ = writeln!(
                out,
                "{:<8} {:>6} {:>6} {:>6} {:>6} {:>8}  {}",
                r.id,
                r.trials,
                r.passes,
                r.failures.len(),
                r.degeneracies,
                r.wall_time_ms,
                r.paper_ref
            );
        }
        for r in &self.results {
            for f in &r.failures {
                let p = &f.point;
                let _ = writeln!(
                    out,
                    "FAIL {}: q={} A={} C={} n={} eps={}: lhs={} rhs={}",
                    r.id, p.q, p.a, p.c, p.n, p.eps, f.lhs, f.rhs
                );
            }
        }
        if let Some(check) = &self.cor_d2_lhs_check {
            let _ = writeln!(
                out,
                "cor-d2 LHS reading: q^{{-n}} matched {}/{}, q^{{2-n}} matched {}/{} -> {}",
                check.printed_matches,
                check.points,
                check.shifted_matches,
                check.points,
                check.matching.as_deref().unwrap_or("undetermined")
            );
        }
        let _ = writeln!(
            out,
            "{} ids, {} failures, {} degenerate points resampled",
            self.results.len(),
            self.total_failures(),
            self.total_degeneracies()
        );
        out
    }
}
