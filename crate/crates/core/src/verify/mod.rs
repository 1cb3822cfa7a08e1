//! Runnable checks with three-valued verdicts.
//!
//! A `Fail` always carries a counterexample that can be re-checked without
//! trusting the solver that found it. `Indeterminate` is reported whenever
//! a budget-truncated interval cannot decide a check; it never counts as a
//! pass.

mod density;
mod inequalities;
mod tritau;

pub use density::{density_falsifier, phi_bound_check};
pub use inequalities::{inequality_suite, inequality_suite_from, tightness_and_baselines};
pub use tritau::{all_labeled_graphs, random_trifree, tritau_exhaustive, TritauSample};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Indeterminate,
}

impl Verdict {
    /// Fail dominates, then indeterminate.
    pub fn combine(items: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut out = Verdict::Pass;
        for v in items {
            match v {
                Verdict::Fail => return Verdict::Fail,
                Verdict::Indeterminate => out = Verdict::Indeterminate,
                Verdict::Pass => {}
            }
        }
        out
    }

    /// `value ≤ bound` for a value known to lie in `[lower, upper]`.
    pub fn at_most(lower: i64, upper: i64, bound: i64) -> Verdict {
        if upper <= bound {
            Verdict::Pass
        } else if lower > bound {
            Verdict::Fail
        } else {
            Verdict::Indeterminate
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Indeterminate => "indeterminate",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    /// graph6 text or generator parameters.
    pub instance: String,
    pub measured: Map<String, Value>,
    pub verdict: Verdict,
    pub counterexample: Option<Value>,
    pub note: Option<String>,
}

impl CheckReport {
    pub(crate) fn new(name: &str, instance: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            instance: instance.into(),
            measured: Map::new(),
            verdict: Verdict::Pass,
            counterexample: None,
            note: None,
        }
    }

    pub(crate) fn measure(&mut self, key: &str, value: impl Serialize) {
        self.measured.insert(
            key.into(),
            serde_json::to_value(value).expect("measurement serializes"),
        );
    }

    pub(crate) fn fail(&mut self, witness: Value) {
        self.verdict = Verdict::Fail;
        self.counterexample = Some(witness);
    }
}
