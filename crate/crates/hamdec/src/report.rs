//! JSON serialization of run statistics and property reports.

use anyhow::Result;
use hamdec_core::partition::PlanReport;
use hamdec_core::pipeline::{DecompositionResult, DecompositionStats};

/// Per-stage statistics of a run as pretty-printed JSON.
pub fn stage_stats_json(result: &DecompositionResult) -> Result<String> {
    stats_json(hamdec_core::pipeline::stage_stats(result))
}

pub fn stats_json(stats: &DecompositionStats) -> Result<String> {
    Ok(serde_json::to_string_pretty(stats)?)
}

pub fn plan_report_json(report: &PlanReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(report)?)
}
