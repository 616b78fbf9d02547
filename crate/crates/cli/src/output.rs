//! Report rendering. Human-readable text by default, JSON mirrors of the
//! domain types with `--json`; integers are always emitted as decimal
//! strings. Everything here is a pure function of its inputs, so identical
//! runs produce identical bytes.

use num_bigint::BigInt;
use serde_json::{json, Value};

use dioph_core::verify::{CampaignReport, LemmaReport, TheoremReport};
use dioph_core::SolutionCertificate;

fn vec_text(v: &[BigInt]) -> String {
    let inner: Vec<String> = v.iter().map(BigInt::to_string).collect();
    format!("({})", inner.join(", "))
}

fn vec_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn matrix_json(m: &dioph_core::IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|r| vec_json(m.row(r))).collect())
}

fn certificate_json(cert: &SolutionCertificate) -> Value {
    json!({ "d": cert.d.to_string(), "x0": vec_json(&cert.x0) })
}

pub(crate) fn bound_report(d: &BigInt, as_json: bool) -> String {
    if as_json {
        json!({ "d": d.to_string() }).to_string()
    } else {
        format!("d = {d}")
    }
}

pub(crate) fn solve_report(
    d: &BigInt,
    cert: Option<&SolutionCertificate>,
    as_json: bool,
) -> String {
    if as_json {
        return json!({
            "d": d.to_string(),
            "feasible": cert.is_some(),
            "x0": cert.map(|c| vec_json(&c.x0)).unwrap_or(Value::Null),
        })
        .to_string();
    }
    match cert {
        Some(c) => format!("d = {d}\nx0 = {}", vec_text(&c.x0)),
        None => format!("d = {d}\ninfeasible"),
    }
}

pub(crate) fn theorem_report(report: &TheoremReport, as_json: bool) -> String {
    if as_json {
        return json!({
            "d": report.d.to_string(),
            "feasible": report.feasible,
            "certificate": report.certificate.as_ref().map(certificate_json).unwrap_or(Value::Null),
            "holds": report.holds,
            "oracle_agreement": report.oracle_agreement.map(Value::Bool).unwrap_or(Value::Null),
        })
        .to_string();
    }
    let mut lines = vec![
        format!("d = {}", report.d),
        format!("feasible = {}", report.feasible),
    ];
    if let Some(cert) = &report.certificate {
        lines.push(format!("x0 = {}", vec_text(&cert.x0)));
    }
    if let Some(agree) = report.oracle_agreement {
        lines.push(format!("oracle agreement = {agree}"));
    }
    lines.push(format!("holds = {}", report.holds));
    lines.join("\n")
}

pub(crate) fn lemma_report(report: &LemmaReport, as_json: bool) -> String {
    if as_json {
        let violation = report
            .violation
            .as_ref()
            .map(|v| {
                json!({
                    "columns": v.column_set,
                    "minor_a": v.minor_a.to_string(),
                    "minor_h": v.minor_h.to_string(),
                })
            })
            .unwrap_or(Value::Null);
        return json!({
            "holds": report.holds,
            "pairs": report.pairs_checked,
            "violation": violation,
        })
        .to_string();
    }
    let mut lines = vec![format!("pairs = {}", report.pairs_checked)];
    if let Some(v) = &report.violation {
        lines.push(format!(
            "violation: columns {:?}, |minor of A| = {}, |complementary minor of H| = {}",
            v.column_set, v.minor_a, v.minor_h
        ));
    }
    lines.push(format!("holds = {}", report.holds));
    lines.join("\n")
}

pub(crate) fn oracle_report(cap: u64, solutions: &[Vec<BigInt>], as_json: bool) -> String {
    if as_json {
        return json!({
            "cap": cap.to_string(),
            "count": solutions.len(),
            "solutions": Value::Array(solutions.iter().map(|s| vec_json(s)).collect()),
        })
        .to_string();
    }
    let mut lines = vec![
        format!("cap = {cap}"),
        format!("count = {}", solutions.len()),
    ];
    lines.extend(solutions.iter().map(|s| vec_text(s)));
    lines.join("\n")
}

pub(crate) fn campaign_report(report: &CampaignReport, as_json: bool) -> String {
    if as_json {
        let failures: Vec<Value> = report
            .failures
            .iter()
            .map(|f| {
                json!({
                    "trial": f.trial,
                    "seed": f.seed,
                    "a": f.system.as_ref().map(|s| matrix_json(s.a())).unwrap_or(Value::Null),
                    "b": f.system.as_ref().map(|s| vec_json(s.b())).unwrap_or(Value::Null),
                    "detail": f.detail,
                })
            })
            .collect();
        return json!({
            "mode": report.mode.name(),
            "seed": report.params.seed,
            "m": report.params.m,
            "n": report.params.n,
            "entry_bound": report.params.entry_bound,
            "witness_bound": report.params.witness_bound,
            "trials": report.trials,
            "failures": failures,
        })
        .to_string();
    }
    let mut lines = vec![
        format!("mode = {}", report.mode.name()),
        format!("seed = {}", report.params.seed),
        format!(
            "params: m = {}, n = {}, entry_bound = {}, witness_bound = {}",
            report.params.m,
            report.params.n,
            report.params.entry_bound,
            report.params.witness_bound
        ),
        format!("trials = {}", report.trials),
        format!("failures = {}", report.failures.len()),
    ];
    for f in &report.failures {
        lines.push(format!(
            "failure trial={} seed={}: {}",
            f.trial, f.seed, f.detail
        ));
        if let Some(sys) = &f.system {
            lines.push(format!("  A = {}", sys.a()));
            lines.push(format!("  b = {}", vec_text(sys.b())));
        }
    }
    lines.push(if report.failures.is_empty() {
        "PASS".into()
    } else {
        "FAIL".into()
    });
    lines.join("\n")
}
