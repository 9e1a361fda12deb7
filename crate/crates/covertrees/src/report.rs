//! Structured verification reports and their JSON form.
//!
//! Every kappa value serializes as a decimal string: the counts outgrow
//! 64-bit integers quickly and must never pass through floating point.

use serde_json::{json, Map, Value};

use crate::spanning::TreeCount;

/// One recorded comparison. `lhs` and `rhs` keep the raw values so a
/// failure is diagnosable from the report alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    pub fn equality(name: impl Into<String>, lhs: &TreeCount, rhs: &TreeCount) -> Self {
        Check {
            name: name.into(),
            pass: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn comparison(
        name: impl Into<String>,
        pass: bool,
        lhs: impl ToString,
        rhs: impl ToString,
    ) -> Self {
        Check {
            name: name.into(),
            pass,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

/// One row of a double-cover census: unordered cover type `a`, how many
/// covers have it, and their common spanning-tree count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub cover_type: usize,
    pub multiplicity: u64,
    pub kappa: TreeCount,
}

/// Outcome of one verification run: named kappa values, census rows and
/// pass/fail checks. A report passes only if every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// Which verification produced this report (mirrors the CLI subcommand).
    pub run: String,
    /// Input parameters, stringly typed for uniform serialization.
    pub params: Vec<(String, String)>,
    /// Named kappa values, e.g. "direct", "characters", "closed_form".
    pub kappa: Vec<(String, TreeCount)>,
    pub census: Vec<CensusRow>,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(run: impl Into<String>) -> Self {
        VerificationReport {
            run: run.into(),
            params: Vec::new(),
            kappa: Vec::new(),
            census: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn push_param(&mut self, name: impl Into<String>, value: impl ToString) {
        self.params.push((name.into(), value.to_string()));
    }

    pub fn push_kappa(&mut self, name: impl Into<String>, value: TreeCount) {
        self.kappa.push((name.into(), value));
    }

    pub fn kappa_named(&self, name: &str) -> Option<&TreeCount> {
        self.kappa.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    /// Overall verdict: false as soon as any check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// JSON form: `{"run", "params", "checks", "census", "kappa"}` with
    /// every integer rendered as a decimal string.
    pub fn to_json(&self) -> Value {
        let params: Map<String, Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        let kappa: Map<String, Value> = self
            .kappa
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.to_string())))
            .collect();
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "pass": c.pass,
                    "lhs": c.lhs,
                    "rhs": c.rhs,
                })
            })
            .collect();
        let census: Vec<Value> = self
            .census
            .iter()
            .map(|row| {
                json!({
                    "a": row.cover_type.to_string(),
                    "multiplicity": row.multiplicity.to_string(),
                    "kappa": row.kappa.to_string(),
                })
            })
            .collect();
        json!({
            "run": self.run,
            "params": params,
            "checks": checks,
            "census": census,
            "kappa": kappa,
        })
    }
}
