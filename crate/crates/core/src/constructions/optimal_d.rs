//! Closed-form choice of `d` for the two objectives.

use serde::{Deserialize, Serialize};

use super::ratio::tau_prediction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    /// `min(τ, α₁)/|E|`, limited by `(2d - d²)/(2d + 1)`.
    MinRatio,
    /// `(α₁ + 2τ)/|E| = (1 + 2(2d - d²))/(2d + 1)`.
    SumRatio,
}

impl Objective {
    pub fn closed_form(&self, d: f64) -> f64 {
        match self {
            Objective::MinRatio => tau_prediction(d),
            Objective::SumRatio => (1.0 + 2.0 * (2.0 * d - d * d)) / (2.0 * d + 1.0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OptimalD {
    pub objective: Objective,
    pub d: f64,
    pub value: f64,
    /// Best grid point over `(0, 2)` at step `1e-4`.
    pub grid_best_d: f64,
    pub grid_best_value: f64,
    /// `value` is within `1e-9` of the grid maximum and beats `d ± 1e-4`.
    pub grid_verified: bool,
}

pub fn optimal_d(objective: Objective) -> OptimalD {
    let (d, value) = match objective {
        Objective::MinRatio => ((5f64.sqrt() - 1.0) / 2.0, (3.0 - 5f64.sqrt()) / 2.0),
        Objective::SumRatio => ((3f64.sqrt() - 1.0) / 2.0, 3.0 - 3f64.sqrt()),
    };
    let f = |x: f64| objective.closed_form(x);
    let (grid_best_d, grid_best_value) = (1..20_000)
        .map(|i| i as f64 * 1e-4)
        .map(|x| (x, f(x)))
        .fold((0.0, f64::NEG_INFINITY), |best, cur| {
            if cur.1 > best.1 {
                cur
            } else {
                best
            }
        });
    let grid_verified = (f(d) - value).abs() <= 1e-9
        && value >= grid_best_value - 1e-9
        && f(d) >= f(d - 1e-4)
        && f(d) >= f(d + 1e-4);
    OptimalD {
        objective,
        d,
        value,
        grid_best_d,
        grid_best_value,
        grid_verified,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_ratio() {
        let o = optimal_d(Objective::MinRatio);
        assert!((o.d - 0.618034).abs() < 1e-6);
        assert!((o.value - 0.381966).abs() < 1e-6);
        assert!(o.grid_verified);
    }

    #[test]
    fn sum_ratio() {
        let o = optimal_d(Objective::SumRatio);
        assert!((o.d - 0.366025).abs() < 1e-6);
        assert!((o.value - 1.267949).abs() < 1e-6);
        assert!(o.grid_verified);
        assert!((o.grid_best_d - o.d).abs() < 1e-4);
    }

    #[test]
    fn prediction_is_useless_past_two() {
        assert!(Objective::MinRatio.closed_form(2.0).abs() < 1e-15);
        assert!(Objective::MinRatio.closed_form(2.5) < 0.0);
    }
}
