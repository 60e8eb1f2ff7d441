//! Text and JSON rendering of command results.
//!
//! Both formats are produced from the same [`Outcome`], and residuals are
//! rendered by the same `Display` impls, so verdicts and residuals agree.

use std::fmt::Write as _;

use bigbracket::suites::SuiteReport;
use bigbracket::CheckReport;
use serde_json::{json, Value};

use crate::input::StructureFile;

/// A named value reported alongside the checks.
pub enum Item {
    Text(String),
    File(Box<StructureFile>),
}

pub struct Outcome {
    pub command: String,
    pub reports: Vec<CheckReport>,
    pub suite: Option<SuiteReport>,
    pub items: Vec<(String, Item)>,
}

impl Outcome {
    pub fn new(command: &str) -> Self {
        Outcome {
            command: command.to_string(),
            reports: Vec::new(),
            suite: None,
            items: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(CheckReport::passed) && self.suite.as_ref().is_none_or(SuiteReport::passed)
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            write!(out, "{r}").unwrap();
        }
        if let Some(s) = &self.suite {
            write!(out, "{s}").unwrap();
        }
        for (name, item) in &self.items {
            match item {
                Item::Text(t) => writeln!(out, "{name}: {t}").unwrap(),
                Item::File(f) => writeln!(out, "{name}: {}", serde_json::to_string(f).unwrap()).unwrap(),
            }
        }
        writeln!(out, "verdict: {}", if self.passed() { "PASS" } else { "FAIL" }).unwrap();
        out
    }

    pub fn json(&self) -> Value {
        let reports: Vec<Value> = self
            .reports
            .iter()
            .map(|r| {
                let conditions: Vec<Value> = r
                    .conditions
                    .iter()
                    .map(|c| {
                        json!({
                            "name": c.name,
                            "label": c.label,
                            "passed": c.passed(),
                            "residual": c.residual.to_string(),
                        })
                    })
                    .collect();
                json!({ "title": r.title, "passed": r.passed(), "conditions": conditions })
            })
            .collect();
        let mut v = json!({ "command": self.command, "passed": self.passed(), "reports": reports });
        if let Some(s) = &self.suite {
            v["suite"] = json!({
                "name": s.name,
                "seed": s.seed,
                "instances": s.instances,
                "checks": s.checks,
                "passed": s.passed(),
                "failures": s.failures,
                "tally": s.tally,
            });
        }
        for (name, item) in &self.items {
            v[name] = match item {
                Item::Text(t) => Value::String(t.clone()),
                Item::File(f) => serde_json::to_value(f).unwrap(),
            };
        }
        v
    }
}
