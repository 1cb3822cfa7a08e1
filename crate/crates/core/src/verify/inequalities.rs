use num_rational::Ratio;
use serde_json::json;

use super::{CheckReport, Verdict};
use crate::graph::{disjoint_union, graph6, Graph, StandardGraph};
use crate::solvers::{alpha1_exact, oracle_bruteforce, tau_exact, Budget, Problem, SolveOutcome};

/// `α₁ + τ ≤ m`, `4(α₁ + τ) ≤ n²` and `2τ ≤ m`, each decided on the
/// certified intervals: pass when the upper ends satisfy it, fail when the
/// lower ends violate it.
pub fn inequality_suite(g: &Graph, budget: Budget) -> CheckReport {
    let a1 = alpha1_exact(g, budget);
    let tau = tau_exact(g, budget);
    inequality_suite_from(g, &a1, &tau)
}

/// [`inequality_suite`] on precomputed outcomes (for example from the
/// exhaustive oracle).
pub fn inequality_suite_from(g: &Graph, a1: &SolveOutcome, tau: &SolveOutcome) -> CheckReport {
    let (n, m) = (g.order() as i64, g.size() as i64);
    let mut report = CheckReport::new("suite", graph6::encode(g));
    let (lo, hi) = (
        a1.lower_int() + tau.lower_int(),
        a1.upper_int() + tau.upper_int(),
    );
    let checks = [
        ("alpha1_plus_tau_le_m", Verdict::at_most(lo, hi, m)),
        (
            "four_sum_le_n_squared",
            Verdict::at_most(4 * lo, 4 * hi, n * n),
        ),
        (
            "two_tau_le_m",
            Verdict::at_most(2 * tau.lower_int(), 2 * tau.upper_int(), m),
        ),
    ];
    report.measure("n", n);
    report.measure("m", m);
    report.measure("alpha1", [a1.lower_int(), a1.upper_int()]);
    report.measure("tau", [tau.lower_int(), tau.upper_int()]);
    for (name, v) in checks {
        report.measure(name, v);
    }
    report.verdict = Verdict::combine(checks.map(|c| c.1));
    if report.verdict == Verdict::Fail {
        report.counterexample = Some(json!({
            "graph6": graph6::encode(g),
            "alpha1_certificate": a1.certificate,
            "tau_interval": [tau.lower_int(), tau.upper_int()],
        }));
    }
    report
}

fn exact(out: &SolveOutcome) -> Option<i64> {
    out.value_int()
}

/// Exact `α₁ + τ = n²/4` for `K_n` and `K_{n/2,n/2}`, plus the min-ratio
/// of `K_s ⊔ K_{t,t}`. Components whose search space fits `oracle_limit`
/// are cross-checked against the exhaustive oracle.
pub fn tightness_and_baselines(
    n_even: usize,
    s: usize,
    t: usize,
    budget: Budget,
    oracle_limit: u64,
) -> crate::Result<CheckReport> {
    if !n_even.is_multiple_of(2) {
        return Err(crate::Error::Parameter(format!(
            "n = {n_even} must be even"
        )));
    }
    let mut report = CheckReport::new("tightness", format!("n={n_even} s={s} t={t}"));
    let half = n_even / 2;
    let kn = StandardGraph::Complete(n_even).build()?;
    let knn = StandardGraph::CompleteBipartite(half, half).build()?;
    let ks = StandardGraph::Complete(s).build()?;
    let ktt = StandardGraph::CompleteBipartite(t, t).build()?;
    let union = disjoint_union(&ks, &ktt);
    let target = (n_even * n_even / 4) as i64;
    let mut verdicts = Vec::new();
    let mut mismatches = Vec::new();

    for (label, g) in [("complete", &kn), ("balanced_bipartite", &knn)] {
        let a1 = alpha1_exact(g, budget);
        let tau = tau_exact(g, budget);
        let v = match (exact(&a1), exact(&tau)) {
            (Some(a), Some(b)) if a + b == target => Verdict::Pass,
            (Some(a), Some(b)) => {
                mismatches.push(json!({"graph": label, "alpha1": a, "tau": b, "target": target}));
                Verdict::Fail
            }
            _ => Verdict::Indeterminate,
        };
        report.measure(&format!("{label}_alpha1"), exact(&a1));
        report.measure(&format!("{label}_tau"), exact(&tau));
        verdicts.push(v);
    }
    report.measure("n_squared_over_4", target);

    // the baseline: values add over edge-disjoint components
    let a1 = alpha1_exact(&union, budget);
    let tau = tau_exact(&union, budget);
    let mut cross_checked = Vec::new();
    for (label, g) in [("K_s", &ks), ("K_tt", &ktt)] {
        for problem in [Problem::Alpha1, Problem::Tau] {
            let Ok(oracle) = oracle_bruteforce(problem, g, oracle_limit) else {
                continue;
            };
            let solver = match problem {
                Problem::Alpha1 => alpha1_exact(g, budget),
                _ => tau_exact(g, budget),
            };
            cross_checked.push(format!("{label}:{}", problem.name()));
            if exact(&solver) != exact(&oracle) {
                mismatches.push(json!({
                    "graph": label,
                    "problem": problem.name(),
                    "solver": exact(&solver),
                    "oracle": exact(&oracle),
                }));
                verdicts.push(Verdict::Fail);
            }
        }
    }
    report.measure("oracle_cross_checked", &cross_checked);
    let m = union.size() as i64;
    report.measure("baseline_m", m);
    match (exact(&a1), exact(&tau)) {
        (Some(a), Some(b)) => {
            let parts = [(&ks, "K_s"), (&ktt, "K_tt")];
            let sum_a: Option<i64> = parts
                .iter()
                .map(|(g, _)| exact(&alpha1_exact(g, budget)))
                .sum();
            let sum_t: Option<i64> = parts
                .iter()
                .map(|(g, _)| exact(&tau_exact(g, budget)))
                .sum();
            if sum_a != Some(a) || sum_t != Some(b) {
                mismatches.push(json!({"graph": "union", "additivity": [a, b, sum_a, sum_t]}));
                verdicts.push(Verdict::Fail);
            }
            report.measure("baseline_alpha1", a);
            report.measure("baseline_tau", b);
            if m > 0 {
                let ratio = Ratio::new(a.min(b), m);
                report.measure(
                    "baseline_min_ratio",
                    format!("{}/{}", ratio.numer(), ratio.denom()),
                );
                report.measure("baseline_min_ratio_value", a.min(b) as f64 / m as f64);
            }
            report.measure("asymptote", 1.0 / 3.0);
        }
        _ => verdicts.push(Verdict::Indeterminate),
    }
    report.verdict = Verdict::combine(verdicts);
    if report.verdict == Verdict::Fail {
        report.counterexample = Some(json!(mismatches));
    }
    Ok(report)
}
