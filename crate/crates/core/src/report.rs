//! Pass/fail bookkeeping for the verification sweeps.

/// Outcome of one verification suite: how many checks ran and which failed.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            checks: 0,
            failures: Vec::new(),
        }
    }

    /// Records one check; on failure, `detail()` is evaluated for the report.
    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    pub fn mismatches(&self) -> usize {
        self.failures.len()
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// One-line summary in the `N mismatches / M checks` form.
    pub fn summary(&self) -> String {
        format!(
            "{}: {} mismatches / {} checks",
            self.name,
            self.mismatches(),
            self.checks
        )
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }
}
