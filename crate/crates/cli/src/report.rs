//! Pass/fail reports produced by the `verify` subcommand.

use std::collections::BTreeMap;
use std::fmt::{Display, Write as _};

use serde::Serialize;

/// One checked claim: a name, the expected and observed values as text, and
/// the verdict.
#[derive(Debug, Serialize)]
pub struct Claim {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

/// A full verification run: which claim id, with which parameters, and how
/// each individual claim fared.
#[derive(Debug, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub claims: Vec<Claim>,
    pub wall_seconds: f64,
}

impl TheoremReport {
    pub fn new(id: &str) -> Self {
        TheoremReport {
            id: id.to_string(),
            params: BTreeMap::new(),
            claims: Vec::new(),
            wall_seconds: 0.0,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Display) {
        self.params.insert(key.to_string(), value.to_string());
    }

    /// Record a claim that holds exactly when `expected == observed`.
    pub fn check_eq<T: PartialEq + Display>(&mut self, name: &str, expected: T, observed: T) {
        let pass = expected == observed;
        self.claims.push(Claim {
            name: name.to_string(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            pass,
        });
    }

    /// Record a claim whose verdict the caller has already decided.
    pub fn check(&mut self, name: &str, expected: impl Display, observed: impl Display, pass: bool) {
        self.claims.push(Claim {
            name: name.to_string(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            pass,
        });
    }

    pub fn failed(&self) -> usize {
        self.claims.iter().filter(|c| !c.pass).count()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        if self.params.is_empty() {
            let _ = writeln!(out, "verify {}", self.id);
        } else {
            let params: Vec<String> =
                self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(out, "verify {} ({})", self.id, params.join(", "));
        }
        let name_w = self.claims.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let exp_w = self.claims.iter().map(|c| c.expected.len()).max().unwrap_or(0);
        let obs_w = self.claims.iter().map(|c| c.observed.len()).max().unwrap_or(0);
        for c in &self.claims {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "  {:<name_w$}  expected {:<exp_w$}  observed {:<obs_w$}  {verdict}",
                c.name, c.expected, c.observed
            );
        }
        let passed = self.claims.len() - self.failed();
        let _ = writeln!(
            out,
            "{passed}/{} claims passed in {:.2}s",
            self.claims.len(),
            self.wall_seconds
        );
        out
    }
}
