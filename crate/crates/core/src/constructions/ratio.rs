//! The join `H = K̄_⌊k⌋ ∨ G` over a cleaned random graph and its ratio
//! report.

use serde::{Deserialize, Serialize};

use super::{sample_trifree, ConstructionParams, TrifreeReport, Truth};
use crate::error::{Error, Result};
use crate::graph::{graph6, is_triangle_free, is_triangular, join, Graph};
use crate::solvers::{alpha1_exact, tau_exact, tau_join_formula, Budget, Problem, SolveOutcome};

/// Largest conflict graph (one node per edge of `H`) for which an exact
/// `α₁` is attempted.
pub const ALPHA1_EXACT_LIMIT: usize = 2000;

/// `K̄_k ∨ G` with the `k` hubs labeled `0..k` and `G` shifted by `k`.
pub fn build_join_h(g: &Graph, k_int: usize) -> Result<Graph> {
    if k_int == 0 {
        return Err(Error::Parameter("hub count must be at least 1".into()));
    }
    if !is_triangle_free(g) {
        return Err(Error::Precondition("G must be triangle-free".into()));
    }
    Ok(join(&Graph::empty(k_int), g))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PipelineOptions {
    /// Attempt an exact `α₁(H)` (only when `|E(H)| ≤ 2000`).
    pub alpha1_exact: bool,
    pub alpha1_budget: Budget,
    /// Also solve `τ(H)` directly on the built join, for cross-checking.
    pub direct_tau: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            alpha1_exact: false,
            alpha1_budget: Budget::nodes(200_000),
            direct_tau: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Alpha1Status {
    NotRequested,
    TooLarge,
    Exact,
    Bounded,
}

/// Outcome of "premises ⇒ ratio bounds" on one run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Implication {
    /// Both ratio bounds are certified.
    Holds,
    /// Premises hold and a bound is certified violated.
    Violated,
    /// Some premise or bound could not be decided.
    Indeterminate,
    /// A premise is certified false and a bound is not certified.
    Vacuous,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Premises {
    pub bullet1: Truth,
    pub bullet2: Truth,
    pub bullet3: Truth,
    pub k_int_positive: bool,
    /// `k ≥ 1/ε`
    pub k_at_least_inv_eps: bool,
    /// `d ≥ ε(1 - ε/2)`
    pub d_large_enough: bool,
    pub all: Truth,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Ratios {
    pub tau: f64,
    pub alpha1: f64,
    pub min: f64,
    /// `(α₁ + 2τ)/|E(H)|`
    pub sum: f64,
    /// `α₁ + c·τ - |E(H)|`
    pub c_margin: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub params: ConstructionParams,
    pub p: f64,
    pub k: f64,
    pub k_int: usize,
    pub c: f64,
    pub trifree: TrifreeReport,
    pub g_graph6: String,
    /// Why `H` was not built, if it was not.
    pub skipped: Option<String>,
    pub h_order: usize,
    pub h_size: usize,
    pub tau: Option<SolveOutcome>,
    pub tau_source: String,
    pub tau_direct: Option<SolveOutcome>,
    /// `|E(G)|`: the edges of `G` share no triangle of `H`.
    pub alpha1_lower: usize,
    pub alpha1: Option<SolveOutcome>,
    pub alpha1_status: Alpha1Status,
    /// Measured with `τ_lower` and `α₁_lb`.
    pub ratios: Option<Ratios>,
    /// `(2d - d²)/(2d + 1)`
    pub tau_prediction: f64,
    /// `1/(2d + 1)`
    pub alpha1_prediction: f64,
    /// prediction minus measured; negative when the measurement is larger
    pub tau_slack: Option<f64>,
    pub alpha1_slack: Option<f64>,
    /// `(2(1-ε)²d - d²) / ((2d+1)(1+ε)(1-ε))`
    pub tau_theorem_bound: f64,
    /// `(1-ε) / ((2d+1)(1+ε))`
    pub alpha1_theorem_bound: f64,
    pub tau_bound_met: Truth,
    pub alpha1_bound_met: Truth,
    pub premises: Premises,
    pub implication: Implication,
    pub h_is_triangular: Option<bool>,
}

fn at_least(lower: f64, upper: f64, bound: f64) -> Truth {
    if lower >= bound {
        Truth::True
    } else if upper < bound {
        Truth::False
    } else {
        Truth::Indeterminate
    }
}

pub fn tau_prediction(d: f64) -> f64 {
    (2.0 * d - d * d) / (2.0 * d + 1.0)
}

pub fn alpha1_prediction(d: f64) -> f64 {
    1.0 / (2.0 * d + 1.0)
}

pub fn tau_theorem_bound(d: f64, eps: f64) -> f64 {
    (2.0 * (1.0 - eps).powi(2) * d - d * d) / ((2.0 * d + 1.0) * (1.0 + eps) * (1.0 - eps))
}

pub fn alpha1_theorem_bound(d: f64, eps: f64) -> f64 {
    (1.0 - eps) / ((2.0 * d + 1.0) * (1.0 + eps))
}

/// Samples `G`, builds `H` and reports every ratio, prediction and
/// premise. Budget exhaustion only widens intervals.
pub fn egt_ratio_pipeline(
    params: &ConstructionParams,
    c: f64,
    budget: Budget,
    options: PipelineOptions,
) -> Result<RatioReport> {
    params.validate()?;
    if !c.is_finite() {
        return Err(Error::Parameter(format!("c = {c} must be finite")));
    }
    let (d, eps) = (params.d, params.eps);
    let (g, trifree) = sample_trifree(params, budget)?;
    let (k, k_int) = (params.k(), params.k_int());
    let n = g.order();
    let premises_flags = |trifree: &TrifreeReport| {
        let flags = Premises {
            bullet1: trifree.bullet1,
            bullet2: trifree.bullet2,
            bullet3: trifree.bullet3,
            k_int_positive: k_int >= 1,
            k_at_least_inv_eps: k * eps >= 1.0,
            d_large_enough: d >= eps * (1.0 - eps / 2.0),
            all: Truth::True,
        };
        let all = Truth::all([
            flags.bullet1,
            flags.bullet2,
            flags.bullet3,
            Truth::from_bool(flags.k_int_positive),
            Truth::from_bool(flags.k_at_least_inv_eps),
            Truth::from_bool(flags.d_large_enough),
        ]);
        Premises { all, ..flags }
    };
    let premises = premises_flags(&trifree);
    let mut report = RatioReport {
        params: *params,
        p: params.p(),
        k,
        k_int,
        c,
        g_graph6: graph6::encode(&g),
        skipped: None,
        h_order: 0,
        h_size: 0,
        tau: None,
        tau_source: "join-formula".into(),
        tau_direct: None,
        alpha1_lower: g.size(),
        alpha1: None,
        alpha1_status: Alpha1Status::NotRequested,
        ratios: None,
        tau_prediction: tau_prediction(d),
        alpha1_prediction: alpha1_prediction(d),
        tau_slack: None,
        alpha1_slack: None,
        tau_theorem_bound: tau_theorem_bound(d, eps),
        alpha1_theorem_bound: alpha1_theorem_bound(d, eps),
        tau_bound_met: Truth::Indeterminate,
        alpha1_bound_met: Truth::Indeterminate,
        implication: Implication::Vacuous,
        premises,
        h_is_triangular: None,
        trifree,
    };
    if k_int == 0 {
        report.skipped = Some(format!("⌊k⌋ = 0 (k = {k})"));
        return Ok(report);
    }

    let h = build_join_h(&g, k_int)?;
    report.h_order = h.order();
    report.h_size = h.size();
    report.h_is_triangular = Some(is_triangular(&h));

    let mut tau = tau_join_formula(&g, k_int, budget)?;
    // φ_⌊k⌋ ≤ φ_k pointwise, so the real-k upper bound also caps max φ_⌊k⌋
    let hub_edges = (n * k_int) as f64;
    let tightened = hub_edges - report.trifree.phi.upper;
    if tightened > tau.lower {
        tau = SolveOutcome::new(
            Problem::Tau,
            tightened,
            tau.upper,
            tau.certificate,
            tau.stats,
        );
    }
    if options.direct_tau {
        let direct = tau_exact(&h, budget);
        if let (Some(a), Some(b)) = (tau.value_int(), direct.value_int()) {
            assert_eq!(a, b, "join formula and direct solve disagree");
        }
        report.tau_direct = Some(direct);
    }

    if options.alpha1_exact {
        if h.size() <= ALPHA1_EXACT_LIMIT {
            let a1 = alpha1_exact(&h, options.alpha1_budget);
            assert!(a1.upper >= report.alpha1_lower as f64);
            report.alpha1_status = if a1.is_optimal() {
                Alpha1Status::Exact
            } else {
                Alpha1Status::Bounded
            };
            report.alpha1 = Some(a1);
        } else {
            report.alpha1_status = Alpha1Status::TooLarge;
        }
    }

    let e = h.size() as f64;
    let a1 = report
        .alpha1
        .as_ref()
        .map_or(report.alpha1_lower as f64, |o| {
            o.lower.max(report.alpha1_lower as f64)
        });
    let ratios = Ratios {
        tau: tau.lower / e,
        alpha1: a1 / e,
        min: tau.lower.min(a1) / e,
        sum: (a1 + 2.0 * tau.lower) / e,
        c_margin: a1 + c * tau.lower - e,
    };
    report.tau_slack = Some(report.tau_prediction - ratios.tau);
    report.alpha1_slack = Some(report.alpha1_prediction - ratios.alpha1);
    report.tau_bound_met = at_least(tau.lower / e, tau.upper / e, report.tau_theorem_bound);
    // only the certified lower bound |E(G)| is compared
    report.alpha1_bound_met =
        Truth::from_bool(report.alpha1_lower as f64 / e >= report.alpha1_theorem_bound);
    let conclusion = Truth::all([report.tau_bound_met, report.alpha1_bound_met]);
    report.implication = match (report.premises.all, conclusion) {
        (Truth::True, Truth::True) => Implication::Holds,
        (Truth::True, Truth::False) => Implication::Violated,
        (Truth::False, _) => Implication::Vacuous,
        _ => Implication::Indeterminate,
    };
    report.ratios = Some(ratios);
    report.tau = Some(tau);
    Ok(report)
}
