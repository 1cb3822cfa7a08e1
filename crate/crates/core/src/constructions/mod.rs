//! The two extremal constructions and their finite-n premise checks.
//!
//! * [`norin`]: `G = K₁ ∨ H` for a triangle-free `H` of small independence
//!   number, which makes `α₁(G) + c·τ(G) > |E(G)|` for a given `c > 1`.
//! * [`trifree`] + [`ratio`]: a cleaned random graph `G` and the join
//!   `H = K̄_⌊k⌋ ∨ G`, whose `τ` and `α₁` ratios are compared against the
//!   closed-form predictions.

pub mod low_alpha;
pub mod norin;
pub mod optimal_d;
pub mod ratio;
pub mod trifree;

pub use low_alpha::{low_alpha_trifree, LowAlphaGraph, DEFAULT_EFFORT};
pub use norin::{norin_check, parse_ratio, NorinReport};
pub use optimal_d::{optimal_d, Objective, OptimalD};
pub use ratio::{
    build_join_h, egt_ratio_pipeline, Alpha1Status, Implication, PipelineOptions, Premises,
    RatioReport,
};
pub use trifree::{sample_trifree, RemovalMethod, TrifreeReport};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Three-valued outcome of a measured premise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Truth {
    True,
    False,
    Indeterminate,
}

impl Truth {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }

    /// Conjunction: any `False` wins, then any `Indeterminate`.
    pub fn all(items: impl IntoIterator<Item = Truth>) -> Truth {
        let mut out = Truth::True;
        for t in items {
            match t {
                Truth::False => return Truth::False,
                Truth::Indeterminate => out = Truth::Indeterminate,
                Truth::True => {}
            }
        }
        out
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Truth::True => "true",
            Truth::False => "false",
            Truth::Indeterminate => "indeterminate",
        }
    }
}

/// Inputs of the random construction. Derived quantities are computed on
/// demand: `p = n^(-θ)`, `k = d·n·p`, `k_int = ⌊k⌋`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub n: usize,
    pub theta: f64,
    pub d: f64,
    pub eps: f64,
    pub seed: u64,
    /// Replaces `n^(-θ)` when set; only meant for degenerate probes such
    /// as `p = 0`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_override: Option<f64>,
}

impl ConstructionParams {
    pub const DEFAULT_THETA: f64 = 0.75;

    pub fn new(n: usize, d: f64, eps: f64, seed: u64) -> Self {
        ConstructionParams {
            n,
            theta: Self::DEFAULT_THETA,
            d,
            eps,
            seed,
            p_override: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::Parameter("n must be at least 1".into()));
        }
        if !(self.theta > 0.0 && self.theta < 1.0) {
            return Err(Error::Parameter(format!(
                "θ = {} not in (0, 1)",
                self.theta
            )));
        }
        if self.d.is_nan() || self.d <= 0.0 || !self.d.is_finite() {
            return Err(Error::Parameter(format!("d = {} must be positive", self.d)));
        }
        if !(self.eps > 0.0 && self.eps < 1.0) {
            return Err(Error::Parameter(format!("ε = {} not in (0, 1)", self.eps)));
        }
        if let Some(p) = self.p_override {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Parameter(format!("p = {p} not in [0, 1]")));
            }
        }
        Ok(())
    }

    pub fn p(&self) -> f64 {
        self.p_override
            .unwrap_or_else(|| (self.n as f64).powf(-self.theta))
    }

    pub fn k(&self) -> f64 {
        self.d * self.n as f64 * self.p()
    }

    pub fn k_int(&self) -> usize {
        self.k().floor() as usize
    }

    /// `k² / (2(1-ε)p)`, taken as 0 when `k = 0`.
    pub fn phi_threshold(&self) -> f64 {
        let k = self.k();
        if k == 0.0 {
            0.0
        } else {
            k * k / (2.0 * (1.0 - self.eps) * self.p())
        }
    }

    /// `(1+ε)pn²/2` and `(1-ε)pn²/2`.
    pub fn edge_window(&self) -> (f64, f64) {
        let base = self.p() * (self.n * self.n) as f64 / 2.0;
        ((1.0 - self.eps) * base, (1.0 + self.eps) * base)
    }
}
