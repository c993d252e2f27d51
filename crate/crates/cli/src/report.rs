//! Machine-readable run reports. The JSON body contains no timestamps and lists items in
//! the order they were scheduled, so identical inputs give identical bytes.

use std::fmt::Write as _;

use lawcheck::{Checklist, Report};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const TOOL: &str = "prekosmos";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of(path: &str, bytes: &[u8]) -> Self {
        let digest = Sha256::digest(bytes);
        let hex = digest.iter().fold(String::new(), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        });
        InputDigest { path: path.to_string(), sha256: hex }
    }
}

/// Reports sharing an anchor (a topic such as "group-object axioms").
#[derive(Debug, Clone, Serialize)]
pub struct AnchorGroup {
    pub anchor: String,
    pub passed: bool,
    pub checks: usize,
    pub failed: usize,
    pub reports: Vec<Report>,
}

/// One unit of work: a criterion applied to one subject.
#[derive(Debug, Clone, Serialize)]
pub struct Item {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub criterion: Option<u8>,
    pub name: String,
    pub subject: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub skipped: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub groups: Vec<AnchorGroup>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

impl Item {
    pub fn new(criterion: u8, name: &str, subject: &str) -> Self {
        Item { criterion: Some(criterion), ..Item::standalone(name, subject) }
    }

    /// An item outside the numbered suite criteria.
    pub fn standalone(name: &str, subject: &str) -> Self {
        Item {
            criterion: None,
            name: name.into(),
            subject: subject.into(),
            passed: true,
            skipped: false,
            error: None,
            groups: Vec::new(),
            data: None,
        }
    }

    pub fn push(&mut self, report: Report) {
        match self.groups.iter_mut().find(|g| g.anchor == report.anchor) {
            Some(g) => {
                g.checks += 1;
                if !report.passed {
                    g.failed += 1;
                    g.passed = false;
                }
                g.reports.push(report);
            }
            None => self.groups.push(AnchorGroup {
                anchor: report.anchor.clone(),
                passed: report.passed,
                checks: 1,
                failed: usize::from(!report.passed),
                reports: vec![report],
            }),
        }
        self.passed = self.error.is_none() && self.groups.iter().all(|g| g.passed);
    }

    pub fn extend(&mut self, reports: impl IntoIterator<Item = Report>) {
        for r in reports {
            self.push(r);
        }
    }

    pub fn checklist(&mut self, c: Checklist) {
        self.extend(c.into_reports());
    }

    pub fn assert(&mut self, anchor: &str, name: &str, passed: bool, detail: Option<String>) -> bool {
        self.push(Report::assertion(name, anchor, passed, detail));
        passed
    }

    pub fn fail(&mut self, error: String) {
        self.error = Some(error);
        self.passed = false;
    }

    pub fn skip(&mut self, why: String) {
        self.skipped = true;
        self.error = None;
        self.data = Some(Value::String(why));
    }

    pub fn checks(&self) -> usize {
        self.groups.iter().map(|g| g.checks).sum()
    }

    pub fn failed_reports(&self) -> impl Iterator<Item = &Report> {
        self.groups.iter().flat_map(|g| g.reports.iter().filter(|r| !r.passed))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub tool: String,
    pub version: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub inputs: Vec<InputDigest>,
    pub warnings: Vec<String>,
    pub items: Vec<Item>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn new(command: &str) -> Self {
        SuiteReport {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: command.into(),
            seed: None,
            inputs: Vec::new(),
            warnings: Vec::new(),
            items: Vec::new(),
            passed: true,
        }
    }

    pub fn add(&mut self, item: Item) {
        self.passed &= item.passed;
        self.items.push(item);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.tool, self.version, self.command);
        for i in &self.inputs {
            let _ = writeln!(out, "input {} sha256:{}", i.path, i.sha256);
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        for item in &self.items {
            let status = if item.skipped {
                "SKIP"
            } else if item.passed {
                "PASS"
            } else {
                "FAIL"
            };
            let tag = item.criterion.map(|c| format!("{c} ")).unwrap_or_default();
            let _ = writeln!(out, "[{status}] {tag}{} :: {} ({} checks)", item.name, item.subject, item.checks());
            if let Some(e) = &item.error {
                let _ = writeln!(out, "    error: {e}");
            }
            for r in item.failed_reports().take(8) {
                let _ = write!(out, "    failed: {} / {}", r.anchor, r.name);
                if let Some(w) = &r.witness {
                    match &w.coords {
                        Some(c) => {
                            let _ = write!(out, " at {c:?}");
                        }
                        None => {
                            let _ = write!(out, " at {}", w.index);
                        }
                    }
                    let _ = write!(out, ": {} vs {}", w.lhs, w.rhs);
                }
                if let Some(d) = &r.detail {
                    let _ = write!(out, " ({d})");
                }
                out.push('\n');
            }
            if let Some(Value::Object(m)) = &item.data {
                for (k, v) in m {
                    let _ = writeln!(out, "    {k}: {v}");
                }
            }
        }
        let _ = writeln!(out, "overall: {}", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}
