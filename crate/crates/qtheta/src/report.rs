//! Verification reports: a named list of pass/fail checks with residual sizes.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub residual_term_count: usize,
}

impl Check {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Pass, detail: detail.into(), residual_term_count: 0 }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>, residual_term_count: usize) -> Self {
        Check { name: name.into(), status: Status::Fail, detail: detail.into(), residual_term_count }
    }

    /// Pass iff `residual_term_count == 0`.
    pub fn from_residual(name: impl Into<String>, residual_term_count: usize, detail: impl Into<String>) -> Self {
        let status = if residual_term_count == 0 { Status::Pass } else { Status::Fail };
        Check { name: name.into(), status, detail: detail.into(), residual_term_count }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check::from_residual(name, usize::from(!ok), detail)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), ..Default::default() }
    }

    pub fn param(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.checks {
            let s = if c.passed() { "pass" } else { "FAIL" };
            writeln!(f, "  [{s}] {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Check that passes iff `residual` is zero; the detail names up to three
/// offending (left weight, right weight, z) components.
pub fn tensor_residual<S: crate::scalars::Coeff>(
    name: impl Into<String>,
    residual: &crate::ncalg::TensorElement<S>,
) -> Check {
    let name = name.into();
    if residual.is_zero() {
        return Check::pass(name, "residual is zero");
    }
    let comps = residual.components();
    let mut parts: Vec<String> = comps
        .iter()
        .take(3)
        .map(|((wl, wr, z), t)| format!("({wl},{wr},z^{z}): {t}"))
        .collect();
    if comps.len() > 3 {
        parts.push(format!("... {} components in total", comps.len()));
    }
    Check::fail(name, parts.join("; "), residual.len())
}

/// Check that passes iff `residual` is zero, listing up to three terms.
pub fn element_residual<S: crate::scalars::Coeff>(
    name: impl Into<String>,
    residual: &crate::ncalg::NCElement<S>,
) -> Check {
    let name = name.into();
    if residual.is_zero() {
        return Check::pass(name, "residual is zero");
    }
    let shown: Vec<String> = residual
        .terms()
        .take(3)
        .map(|(w, c)| format!("{c}*{}", crate::ncalg::word_to_string(w)))
        .collect();
    Check::fail(name, shown.join(" + "), residual.len())
}
