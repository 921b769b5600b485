use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witness: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u128>,
}

/// One invocation's result. The verdict is `pass` iff no non-skipped check
/// failed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub command: String,
    pub context: Map<String, Value>,
    pub checks: Vec<Check>,
    pub verdict: Status,
}

pub struct ReportBuilder {
    command: String,
    context: Map<String, Value>,
    checks: Vec<Check>,
    timings: bool,
}

impl ReportBuilder {
    pub fn new(command: &str, timings: bool) -> Self {
        Self {
            command: command.to_string(),
            context: Map::new(),
            checks: Vec::new(),
            timings,
        }
    }

    pub fn context(&mut self, key: &str, value: impl Into<Value>) {
        self.context.insert(key.to_string(), value.into());
    }

    /// Runs `f`, recording its status and witness. An `Err` becomes a
    /// failed check carrying the message.
    pub fn check<E: std::fmt::Display>(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, Value), E>) {
        let start = Instant::now();
        let (status, witness) = match f() {
            Ok((true, w)) => (Status::Pass, w),
            Ok((false, w)) => (Status::Fail, w),
            Err(e) => (Status::Fail, serde_json::json!({ "error": e.to_string() })),
        };
        self.push(name, status, witness, Some(start.elapsed().as_millis()));
    }

    pub fn skip(&mut self, name: &str, reason: &str) {
        self.push(name, Status::Skipped, serde_json::json!({ "reason": reason }), None);
    }

    fn push(&mut self, name: &str, status: Status, witness: Value, ms: Option<u128>) {
        self.checks.push(Check {
            name: name.to_string(),
            status,
            witness,
            wall_ms: if self.timings { ms.or(Some(0)) } else { None },
        });
    }

    pub fn finish(self) -> VerificationReport {
        let failed = self.checks.iter().any(|c| c.status == Status::Fail);
        VerificationReport {
            command: self.command,
            context: self.context,
            checks: self.checks,
            verdict: if failed { Status::Fail } else { Status::Pass },
        }
    }
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Status::Pass
    }

    /// JSON text; `indent = 0` gives a single line.
    pub fn to_json(&self, indent: usize) -> String {
        if indent == 0 {
            return serde_json::to_string(self).expect("report serializes");
        }
        let pad = vec![b' '; indent];
        let fmt = serde_json::ser::PrettyFormatter::with_indent(&pad);
        let mut out = Vec::new();
        let mut ser = serde_json::Serializer::with_formatter(&mut out, fmt);
        self.serialize(&mut ser).expect("report serializes");
        String::from_utf8(out).expect("JSON is UTF-8")
    }

    /// Human-readable lines for standard error.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            s.push_str(&format!("{tag} {}\n", c.name));
        }
        s.push_str(&format!(
            "{}: {}\n",
            self.command,
            if self.passed() { "all checks passed" } else { "verification failed" }
        ));
        s
    }
}
