//! Summaries returned by the `verify_*` entry points.

use serde::{Deserialize, Serialize};

/// One identity checked over a family of cases; `failures` names the cases that broke it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Check {
    pub fn new(name: &str) -> Self {
        Check { name: name.to_string(), ..Default::default() }
    }

    pub fn record(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(case());
        }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n: usize,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn new(n: usize, checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(Check::pass);
        VerifyReport { n, checks, pass }
    }
}
