//! JSON and plain-text renderings of analysis results.

use serde_json::{json, Value};

use entanglekit_core::locc::ConversionReport;
use entanglekit_core::measures::MeasureReport;
use entanglekit_core::sampling::{McEstimate, SampleMetadata};
use entanglekit_core::separability::{
    Aggregate, CriterionOutcome, CriterionVerdict, SeparabilityReport,
};

pub fn outcome_str(outcome: CriterionOutcome) -> &'static str {
    match outcome {
        CriterionOutcome::EntanglementDetected => "entanglement-detected",
        CriterionOutcome::Passed => "passed",
        CriterionOutcome::NotApplicable => "not-applicable",
    }
}

pub fn aggregate_str(aggregate: Aggregate) -> &'static str {
    match aggregate {
        Aggregate::Separable => "separable",
        Aggregate::Entangled => "entangled",
        Aggregate::Inconclusive => "inconclusive",
    }
}

fn verdict_json(v: &CriterionVerdict) -> Value {
    json!({
        "criterion": v.criterion.name(),
        "parameter": v.parameter,
        "outcome": outcome_str(v.outcome),
        "evidence": v.evidence,
        "detail": v.detail,
    })
}

pub fn separability_json(report: &SeparabilityReport) -> Value {
    json!({
        "verdicts": report.verdicts.iter().map(verdict_json).collect::<Vec<_>>(),
        "aggregate": aggregate_str(report.aggregate),
    })
}

pub fn measures_json(report: &MeasureReport) -> Value {
    let values: serde_json::Map<String, Value> = report
        .entries
        .iter()
        .map(|(k, v)| (k.clone(), json!(v)))
        .collect();
    let skipped: serde_json::Map<String, Value> = report
        .skipped
        .iter()
        .map(|(k, reason)| (k.clone(), json!(reason)))
        .collect();
    json!({ "values": values, "skipped": skipped })
}

pub fn conversion_json(report: &ConversionReport) -> Value {
    json!({
        "relation": report.relation.name(),
        "p_c": report.p_c,
    })
}

pub fn estimate_json(est: &McEstimate, meta: &SampleMetadata, measure: &str) -> Value {
    json!({
        "measure": measure,
        "mean": est.mean,
        "standard_error": est.standard_error,
        "n": est.n,
        "seed": meta.seed,
        "generator": meta.generator,
        "dims": [meta.dims.0, meta.dims.1],
    })
}

pub fn separability_text(report: &SeparabilityReport) -> String {
    let mut out = String::from("criterion        q      outcome                 evidence      detail\n");
    for v in &report.verdicts {
        let q = v
            .parameter
            .map(|q| format!("{q:<6}"))
            .unwrap_or_else(|| "-     ".to_string());
        out.push_str(&format!(
            "{:<16} {} {:<23} {:+.6e} {}\n",
            v.criterion.name(),
            q,
            outcome_str(v.outcome),
            v.evidence,
            v.detail
        ));
    }
    out.push_str(&format!("aggregate: {}\n", aggregate_str(report.aggregate)));
    out
}

pub fn measures_text(report: &MeasureReport) -> String {
    let mut out = String::new();
    for (k, v) in &report.entries {
        out.push_str(&format!("{k:<24} {v:+.12e}\n"));
    }
    for (k, reason) in &report.skipped {
        out.push_str(&format!("{k:<24} skipped ({reason})\n"));
    }
    out
}
