//! Versioned JSON reports.

use std::collections::BTreeMap;

use lgcy::report::{CheckEntry, CheckReport};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct ModelSummary {
    pub name: String,
    pub weights: Vec<u32>,
    pub degree: u32,
    pub group_order: usize,
    pub fingerprint: String,
}

#[derive(Debug, Serialize)]
pub struct OptionsSummary {
    pub l_range: [i64; 2],
    pub precision: u32,
    pub order: u32,
}

#[derive(Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub status: &'static str,
    pub cases: usize,
    pub failed: usize,
    pub max_deviation: Option<String>,
    /// Failing witnesses only; passing ones are counted in `cases`.
    pub witnesses: Vec<CheckEntry>,
}

impl CheckOutcome {
    pub fn from_report(r: &CheckReport) -> Self {
        let failures: Vec<CheckEntry> = r.failures().into_iter().cloned().collect();
        CheckOutcome {
            name: r.name.clone(),
            status: if failures.is_empty() { "pass" } else { "fail" },
            cases: r.entries.len(),
            failed: failures.len(),
            max_deviation: r.max_deviation.map(|d| format!("{d:.2e}")),
            witnesses: failures,
        }
    }

    pub fn skipped(name: &str, reason: &str) -> Self {
        CheckOutcome {
            name: name.into(),
            status: "skipped",
            cases: 0,
            failed: 0,
            max_deviation: None,
            witnesses: vec![CheckEntry { witness: "model".into(), ok: true, detail: reason.into() }],
        }
    }
}

/// Everything run-dependent lives here so the rest of the report is reproducible.
#[derive(Debug, Serialize)]
pub struct RunInfo {
    pub timestamp_unix: u64,
    pub jobs: usize,
    pub timings_ms: BTreeMap<String, u128>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub library_version: &'static str,
    pub model: ModelSummary,
    pub options: OptionsSummary,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
    pub run: RunInfo,
}
