//! Certified solvers.
//!
//! Every solver returns a [`SolveOutcome`]: a value interval that is
//! guaranteed to contain the optimum, a feasible certificate attaining the
//! "primal" end of the interval, and a status. Running out of budget is not
//! an error; it only widens the interval and downgrades the status to
//! [`Status::Bounded`].
//!
//! | problem  | sense | route                                            |
//! |----------|-------|--------------------------------------------------|
//! | `Tau`    | min   | hitting set over triangle edge-triples ([`tau`]) |
//! | `Alpha1` | max   | independent set of the edge-conflict graph       |
//! | `Alpha`  | max   | independent set via clique search on complement  |
//! | `Phi`    | max   | reduction + component branch-and-bound ([`phi`]) |

mod budget;
pub mod certify;
mod join_formula;
mod mis;
pub mod oracle;
pub mod phi;
pub mod tau;

pub use budget::Budget;
pub(crate) use budget::Tracker;
pub use join_formula::tau_join_formula;
pub use mis::{alpha1_exact, alpha_exact, conflict_graph};
pub use oracle::oracle_bruteforce;
pub use phi::{phi_max, phi_value};
pub use tau::{greedy_minimal_cover, tau_exact};

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeSet, Graph, VertexSet};

/// Absolute tolerance for real-valued `φ_k` comparisons.
pub const PHI_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "problem", rename_all = "UPPERCASE")]
pub enum Problem {
    Tau,
    Alpha1,
    Alpha,
    Phi { k: f64 },
}

impl Problem {
    pub fn name(&self) -> &'static str {
        match self {
            Problem::Tau => "TAU",
            Problem::Alpha1 => "ALPHA1",
            Problem::Alpha => "ALPHA",
            Problem::Phi { .. } => "PHI",
        }
    }

    pub fn is_minimization(&self) -> bool {
        matches!(self, Problem::Tau)
    }

    /// Values are integers unless this is `φ_k` with non-integral `k`.
    pub fn is_integral(&self) -> bool {
        match self {
            Problem::Phi { k } => k.fract() == 0.0,
            _ => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Optimal,
    Bounded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    Edges(EdgeSet),
    Vertices(VertexSet),
}

impl Certificate {
    pub fn len(&self) -> usize {
        match self {
            Certificate::Edges(e) => e.len(),
            Certificate::Vertices(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sorted canonical edge indices, or sorted vertex labels.
    pub fn indices(&self, n: usize) -> Vec<usize> {
        match self {
            Certificate::Edges(e) => e.canonical_indices(n),
            Certificate::Vertices(v) => v.as_slice().to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveOutcome {
    #[serde(flatten)]
    pub problem: Problem,
    pub lower: f64,
    pub upper: f64,
    pub status: Status,
    /// Attains `upper` for `Tau`, `lower` for the maximization problems.
    pub certificate: Certificate,
    pub stats: SolveStats,
}

impl SolveOutcome {
    pub(crate) fn new(
        problem: Problem,
        lower: f64,
        upper: f64,
        certificate: Certificate,
        stats: SolveStats,
    ) -> Self {
        let (lower, upper) = if problem.is_integral() {
            // integral optimum: round the bounds inward
            (
                (lower - PHI_TOLERANCE).ceil(),
                (upper + PHI_TOLERANCE).floor(),
            )
        } else {
            (lower, upper)
        };
        let upper = upper.max(lower);
        let status = if upper - lower <= PHI_TOLERANCE {
            Status::Optimal
        } else {
            Status::Bounded
        };
        let upper = if status == Status::Optimal {
            lower
        } else {
            upper
        };
        SolveOutcome {
            problem,
            lower,
            upper,
            status,
            certificate,
            stats,
        }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == Status::Optimal
    }

    /// The exact value, if certified.
    pub fn value(&self) -> Option<f64> {
        self.is_optimal().then_some(self.lower)
    }

    /// Integer lower bound. Panics for non-integral `φ_k`.
    pub fn lower_int(&self) -> i64 {
        assert!(
            self.problem.is_integral(),
            "{:?} is real-valued",
            self.problem
        );
        self.lower as i64
    }

    pub fn upper_int(&self) -> i64 {
        assert!(
            self.problem.is_integral(),
            "{:?} is real-valued",
            self.problem
        );
        self.upper as i64
    }

    pub fn value_int(&self) -> Option<i64> {
        self.is_optimal().then(|| self.lower_int())
    }

    pub fn edge_certificate(&self) -> Option<&EdgeSet> {
        match &self.certificate {
            Certificate::Edges(e) => Some(e),
            Certificate::Vertices(_) => None,
        }
    }

    pub fn vertex_certificate(&self) -> Option<&VertexSet> {
        match &self.certificate {
            Certificate::Vertices(v) => Some(v),
            Certificate::Edges(_) => None,
        }
    }

    /// Checks the certificate against `g` with [`certify`].
    pub fn certificate_is_valid(&self, g: &Graph) -> bool {
        certify::check_outcome(g, self).is_ok()
    }
}
