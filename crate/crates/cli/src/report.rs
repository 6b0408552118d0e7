//! The verification report and its JSON and text renderings.

use std::fmt::Write as _;

use quadstruct::CheckReport;
use serde::Serialize;

use crate::config::ScenarioConfig;

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub scenario: ScenarioConfig,
    pub checks: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub passed: bool,
}

impl VerificationReport {
    /// Sorts checks by name and derives the overall flag from the failure counts.
    pub fn new(scenario: ScenarioConfig, mut checks: Vec<CheckReport>, notes: Vec<String>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let passed = checks.iter().all(CheckReport::passed);
        VerificationReport { scenario, checks, notes, passed }
    }

    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    /// Pretty JSON without timings, so equal inputs give equal bytes.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let s = &self.scenario;
        let _ = writeln!(out, "scenario: {} over {} (samples {}, seed {})", s.kind.name(), s.field, s.samples, s.seed);
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let verdict = if c.passed() { "PASS" } else { "FAIL" };
            let mode = serde_json::to_value(c.mode).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default();
            let time = c.elapsed.map(|d| format!(" {:.3}s", d.as_secs_f64())).unwrap_or_default();
            let _ = writeln!(
                out,
                "{verdict} {:width$} {mode:10} {:>8} cases {:>4} failures{time}  [{}]",
                c.name, c.cases, c.failures, c.anchor
            );
            if let Some(ce) = &c.counterexample {
                let _ = writeln!(out, "     counterexample: {ce}");
            }
            if let Some(note) = &c.note {
                let _ = writeln!(out, "     note: {note}");
            }
        }
        let _ = writeln!(out, "overall: {}", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}

#[cfg(test)]
mod tests {
    use quadstruct::Mode;

    use super::*;
    use crate::config::demo_e8;

    #[test]
    fn overall_flag_and_order() {
        let mut b = CheckReport::new("b", "", Mode::Sampled);
        b.record(true, String::new);
        let mut a = CheckReport::new("a", "", Mode::Exhaustive);
        a.record(false, || "ce".into());
        let r = VerificationReport::new(demo_e8(), vec![b, a], vec![]);
        assert_eq!(r.checks[0].name, "a");
        assert!(!r.passed);
        assert_eq!(r.exit_code(), 1);
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["checks"][0]["counterexample"], "ce");
        assert_eq!(json["scenario"]["params"]["s"][4], "-1/15");
        assert!(r.to_text().contains("FAIL a"));
    }
}
