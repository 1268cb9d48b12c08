//! Verification reports.

use std::fmt;

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub suite: String,
    /// Number of individual checks performed.
    pub checked: usize,
    /// Checks that failed; any entry makes the report fail.
    pub failures: Vec<String>,
    /// Known, documented deviations; they fail the report only in strict mode.
    pub anomalies: Vec<String>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            ..Default::default()
        }
    }

    /// Records one check; `fail` is only evaluated when `ok` is false.
    pub fn check(&mut self, ok: bool, fail: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok {
            self.failures.push(fail());
        }
        ok
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        self.checked += 1;
        self.failures.push(msg.into());
    }

    pub fn anomaly(&mut self, msg: impl Into<String>) {
        self.anomalies.push(msg.into());
    }

    pub fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn passed_strict(&self) -> bool {
        self.failures.is_empty() && self.anomalies.is_empty()
    }

    /// Folds another report's counts and messages into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self.anomalies.extend(other.anomalies);
        self.notes.extend(other.notes);
    }

    /// `SUITE name PASS|FAIL checked=N anomalies=M`
    pub fn summary_line(&self, strict: bool) -> String {
        let ok = if strict { self.passed_strict() } else { self.passed() };
        format!(
            "SUITE {} {} checked={} anomalies={}",
            self.suite,
            if ok { "PASS" } else { "FAIL" },
            self.checked,
            self.anomalies.len()
        )
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        for a in &self.anomalies {
            writeln!(f, "  anomaly: {a}")?;
        }
        for (i, x) in self.failures.iter().enumerate() {
            if i == 20 {
                writeln!(f, "  ... {} more failures", self.failures.len() - 20)?;
                break;
            }
            writeln!(f, "  FAILED: {x}")?;
        }
        write!(f, "{}", self.summary_line(false))
    }
}
