//! The `K₁ ∨ H` construction.
//!
//! For triangle-free `H` on `n` vertices, `G = K₁ ∨ H` has `m_H + n` edges,
//! `τ(G) = n - α(H)` and `α₁(G) ≥ m_H` (the edges of `H` share no
//! triangle). So `α₁(G) + c·τ(G) > |E(G)|` already holds whenever
//! `c(n - α(H)) > n`, i.e. `α(H)/n < (c-1)/c`.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::Truth;
use crate::error::{Error, Result};
use crate::graph::{is_triangle_free, Graph};
use crate::solvers::{alpha_exact, tau_join_formula, Budget, SolveOutcome};

/// Parses `"3/2"`, `"2"` or a finite decimal such as `"1.5"` into an exact
/// rational.
pub fn parse_ratio(text: &str) -> Result<Ratio<i64>> {
    let text = text.trim();
    let bad = || Error::Parameter(format!("cannot read {text:?} as a rational number"));
    if let Some((num, den)) = text.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: i64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(Error::Parameter("zero denominator".into()));
        }
        return Ok(Ratio::new(num, den));
    }
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part
            .chars()
            .chain(frac_part.chars())
            .all(|ch| ch.is_ascii_digit())
        || frac_part.len() > 15
    {
        return Err(bad());
    }
    let den = 10i64.pow(frac_part.len() as u32);
    let digits = format!("{int_part}{frac_part}");
    let num: i64 = if digits.is_empty() {
        0
    } else {
        digits.parse().map_err(|_| bad())?
    };
    let value = Ratio::new(num, den);
    Ok(if negative { -value } else { value })
}

fn ratio_to_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NorinReport {
    pub n: usize,
    pub m_h: usize,
    pub alpha_h: SolveOutcome,
    /// Local-search iterations spent building `H`, when it was built here.
    pub effort: Option<u64>,
    /// `9·sqrt(n ln n)`, the asymptotic upper bound on the least `α(H)`.
    pub kim_diagnostic: f64,
    pub m_g: usize,
    pub tau_g: SolveOutcome,
    pub alpha1_lower: usize,
    /// `c` as `"p/q"`.
    pub c: String,
    pub c_value: f64,
    /// `α₁_lb + c·τ_lower`, and the exact rational `"p/q"`.
    pub lhs: f64,
    pub lhs_exact: String,
    pub rhs: usize,
    /// `lhs > rhs`, evaluated on the `τ` interval.
    pub verdict: Truth,
    /// `α(H)/n < (c-1)/c`, evaluated on the `α` interval.
    pub predicate: Truth,
    /// Both are decided and agree, or at least one is undecided.
    pub consistent: bool,
}

/// Evaluates the `K₁ ∨ H` inequality for a triangle-free `H` and `c > 1`.
pub fn norin_check(h: &Graph, c: Ratio<i64>, budget: Budget) -> Result<NorinReport> {
    if c <= Ratio::from_integer(1) {
        return Err(Error::Parameter(format!("c = {c} must exceed 1")));
    }
    if !is_triangle_free(h) {
        return Err(Error::Precondition("H must be triangle-free".into()));
    }
    let n = h.order();
    let m_h = h.size();
    let tau = tau_join_formula(h, 1, budget)?;
    let alpha = alpha_exact(h, budget);
    if let (Some(t), Some(a)) = (tau.value_int(), alpha.value_int()) {
        assert_eq!(t, n as i64 - a, "τ(K₁ ∨ H) = n - α(H) violated");
    }

    let big = |x: i64| Ratio::from_integer(x);
    let nn = big(n as i64);
    let lhs_at = |t: i64| big(m_h as i64) + c * big(t);
    let rhs = big((m_h + n) as i64);
    let verdict = if lhs_at(tau.lower_int()) > rhs {
        Truth::True
    } else if lhs_at(tau.upper_int()) <= rhs {
        Truth::False
    } else {
        Truth::Indeterminate
    };
    let threshold = (c - big(1)) / c;
    let predicate = if big(alpha.upper_int()) / nn < threshold {
        Truth::True
    } else if big(alpha.lower_int()) / nn >= threshold {
        Truth::False
    } else {
        Truth::Indeterminate
    };
    let consistent = verdict == Truth::Indeterminate
        || predicate == Truth::Indeterminate
        || verdict == predicate;
    assert!(consistent, "verdict and predicate disagree");
    let lhs = lhs_at(tau.lower_int());
    let nf = n as f64;
    Ok(NorinReport {
        n,
        m_h,
        alpha_h: alpha,
        effort: None,
        kim_diagnostic: if n > 1 {
            9.0 * (nf * nf.ln()).sqrt()
        } else {
            0.0
        },
        m_g: m_h + n,
        tau_g: tau,
        alpha1_lower: m_h,
        c: format!("{}/{}", c.numer(), c.denom()),
        c_value: ratio_to_f64(c),
        lhs: ratio_to_f64(lhs),
        lhs_exact: format!("{}/{}", lhs.numer(), lhs.denom()),
        rhs: m_h + n,
        verdict,
        predicate,
        consistent,
    })
}
