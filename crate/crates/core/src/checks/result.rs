use std::fmt::Display;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub name: String,
    pub value: String,
}

/// Outcome of one certificate check, with exact witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub duration_ms: u64,
    pub notes: String,
}

impl CheckResult {
    pub fn new(id: impl Into<String>) -> CheckResult {
        CheckResult { id: id.into(), status: Status::Pass, witnesses: Vec::new(), duration_ms: 0, notes: String::new() }
    }

    pub fn skipped(id: impl Into<String>, reason: impl Into<String>) -> CheckResult {
        let mut r = CheckResult::new(id);
        r.status = Status::Skipped;
        r.notes = reason.into();
        r
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn witness(&mut self, name: impl Into<String>, value: impl Display) -> &mut CheckResult {
        self.witnesses.push(Witness { name: name.into(), value: value.to_string() });
        self
    }

    /// Marks the check failed, recording why as a witness.
    pub fn fail(&mut self, name: impl Into<String>, value: impl Display) -> &mut CheckResult {
        self.status = Status::Fail;
        self.witness(name, value)
    }

    /// Records `ok` under `name`; a false value fails the check.
    pub fn require(&mut self, name: impl Into<String>, ok: bool, detail: impl Display) -> bool {
        if !ok {
            self.fail(name, detail);
        }
        ok
    }

    pub fn note(&mut self, text: impl AsRef<str>) {
        if !self.notes.is_empty() {
            self.notes.push(' ');
        }
        self.notes.push_str(text.as_ref());
    }

    pub fn witness_value(&self, name: &str) -> Option<&str> {
        self.witnesses.iter().find(|w| w.name == name).map(|w| w.value.as_str())
    }
}

/// Runs `f` and stamps its wall-clock duration on the result.
pub fn timed(f: impl FnOnce() -> CheckResult) -> CheckResult {
    let start = Instant::now();
    let mut r = f();
    r.duration_ms = start.elapsed().as_millis() as u64;
    r
}
