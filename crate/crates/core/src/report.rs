//! Machine-readable and human-readable reports of a verification run.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::centralizer::DualityReport;
use crate::checks::{CheckOutcome, Context, Status};
use crate::mode::Mode;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    pub mode: String,
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub k: usize,
    /// The value `q` was specialized to, as `p/q`.
    pub specialize: Option<String>,
}

/// Dimensions from the double centralizer verification; absent when it did not run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDims {
    pub module: Option<usize>,
    pub commutant: Option<usize>,
    #[serde(rename = "span_Adk")]
    pub span_adk: Option<usize>,
    pub bicommutant: Option<usize>,
    pub hecke_image: Option<usize>,
}

impl From<&DualityReport> for ReportDims {
    fn from(r: &DualityReport) -> Self {
        ReportDims {
            module: Some(r.dim_module),
            commutant: Some(r.dim_commutant),
            span_adk: Some(r.dim_span_adk),
            bicommutant: Some(r.dim_bicommutant),
            hecke_image: Some(r.dim_hecke_image),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub params: ReportParams,
    pub checks: Vec<CheckOutcome>,
    pub dims: ReportDims,
    /// True when no check failed.
    pub passed: bool,
}

impl Report {
    pub fn new(ctx: &Context, checks: Vec<CheckOutcome>) -> Self {
        let p = &ctx.params;
        let (mode, specialize) = match p.mode {
            Mode::Classical => ("classical".to_string(), None),
            Mode::Quantum => ("quantum".to_string(), None),
            Mode::Specialized { num, den } => ("quantum".to_string(), Some(format!("{num}/{den}"))),
        };
        let dims = ctx.duality_if_computed().map(ReportDims::from).unwrap_or_default();
        let passed = checks.iter().all(|c| c.status != Status::Fail);
        Report { params: ReportParams { mode, m: p.m, n: p.n, d: p.d, k: p.k, specialize }, checks, dims, passed }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_text(&self) -> String {
        let p = &self.params;
        let mut out = String::new();
        let at = p.specialize.as_ref().map(|s| format!(" at q = {s}")).unwrap_or_default();
        let _ = writeln!(out, "{} gl({}|{}), d = {}, k = {}{at}", p.mode, p.m, p.n, p.d, p.k);
        for c in &self.checks {
            let _ = writeln!(out, "{} {}: {}", c.status.label(), c.name, c.detail);
        }
        let d = &self.dims;
        if d.module.is_some() {
            let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
            let _ = writeln!(
                out,
                "dims: module {}, commutant {}, span {}, bicommutant {}, Hecke image {}",
                show(d.module),
                show(d.commutant),
                show(d.span_adk),
                show(d.bicommutant),
                show(d.hecke_image)
            );
        }
        let _ = writeln!(out, "result: {}", if self.passed { "pass" } else { "fail" });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::{run_checks, RunParams};

    #[test]
    fn json_round_trip_and_schema_keys() {
        let ctx = Context::new(RunParams::new(Mode::Quantum, 1, 1, 1, 0));
        let checks = run_checks(&ctx, &["double-centralizer".into(), "hecke-relations".into()]).unwrap();
        let report = Report::new(&ctx, checks);
        let json = report.to_json();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        for key in ["module", "commutant", "span_Adk", "bicommutant", "hecke_image"] {
            assert!(value["dims"][key].is_u64(), "{key}");
        }
        assert_eq!(value["checks"][0]["status"], "pass");
        assert_eq!(value["params"]["mode"], "quantum");
        assert!(report.passed);
    }

    #[test]
    fn text_lists_checks_in_order() {
        let ctx = Context::new(RunParams::new(Mode::Classical, 1, 1, 2, 0));
        let checks = run_checks(&ctx, &["hecke-relations".into(), "euler-operator".into()]).unwrap();
        let text = Report::new(&ctx, checks).to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "classical gl(1|1), d = 2, k = 0");
        assert!(lines[1].starts_with("PASS euler-operator"));
        assert!(lines[2].starts_with("PASS hecke-relations"));
        assert_eq!(*lines.last().unwrap(), "result: pass");
    }
}
