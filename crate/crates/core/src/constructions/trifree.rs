//! Cleaned random graphs: `G = G₀ - X` for `G₀ = G(n, p)` and an
//! inclusion-minimal triangle cover `X`.

use serde::{Deserialize, Serialize};

use super::{ConstructionParams, Truth};
use crate::error::Result;
use crate::graph::{count_triangles, gnp, is_triangle_free, EdgeSet, Graph};
use crate::solvers::{
    greedy_minimal_cover, phi_max, tau_exact, Budget, Certificate, Problem, SolveOutcome,
    SolveStats, PHI_TOLERANCE,
};

/// Largest triangle count for which a minimum cover is attempted.
pub const EXACT_REMOVAL_LIMIT: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RemovalMethod {
    Exact,
    GreedyMinimal,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrifreeReport {
    pub n: usize,
    pub p: f64,
    pub k: f64,
    pub m0: usize,
    pub triangle_count0: usize,
    pub removed: EdgeSet,
    pub removed_count: usize,
    pub removal_method: RemovalMethod,
    pub m: usize,
    pub edge_lower: f64,
    pub edge_upper: f64,
    /// `m ≤ (1+ε)pn²/2`
    pub bullet1: Truth,
    /// `m ≥ (1-ε)pn²/2`
    pub bullet2: Truth,
    pub phi_threshold: f64,
    /// `max_S φ_k(G)` for the real `k`.
    pub phi: SolveOutcome,
    /// `φ_upper ≤ k²/(2(1-ε)p)`
    pub bullet3: Truth,
    pub no_isolated_vertices: bool,
    pub g0_no_isolated_vertices: bool,
}

impl TrifreeReport {
    pub fn bullets(&self) -> Truth {
        Truth::all([self.bullet1, self.bullet2, self.bullet3])
    }
}

/// Three-valued `interval ≤ threshold` with the tolerance absorbing
/// floating-point dust.
pub(crate) fn at_most(lower: f64, upper: f64, threshold: f64) -> Truth {
    if upper <= threshold + PHI_TOLERANCE {
        Truth::True
    } else if lower > threshold + PHI_TOLERANCE {
        Truth::False
    } else {
        Truth::Indeterminate
    }
}

/// Samples `G₀`, removes a triangle cover and measures the three density
/// premises. Each solve gets its own copy of `budget`.
pub fn sample_trifree(
    params: &ConstructionParams,
    budget: Budget,
) -> Result<(Graph, TrifreeReport)> {
    params.validate()?;
    let (n, p, k) = (params.n, params.p(), params.k());
    let g0 = gnp(n, p, params.seed)?;
    let triangle_count0 = count_triangles(&g0);

    let exact = (triangle_count0 <= EXACT_REMOVAL_LIMIT)
        .then(|| tau_exact(&g0, budget))
        .filter(SolveOutcome::is_optimal);
    let (removed, removal_method) = match exact {
        Some(out) => (
            out.edge_certificate()
                .expect("τ certifies with edges")
                .clone(),
            RemovalMethod::Exact,
        ),
        None => (greedy_minimal_cover(&g0), RemovalMethod::GreedyMinimal),
    };
    let g = g0.without_edges(&removed);
    debug_assert!(is_triangle_free(&g));

    let phi = if k > 0.0 {
        phi_max(&g, k, budget)?
    } else {
        // φ₀(S) = -|E(G[S])| peaks at the empty set
        SolveOutcome {
            problem: Problem::Phi { k },
            lower: 0.0,
            upper: 0.0,
            status: crate::solvers::Status::Optimal,
            certificate: Certificate::Vertices(Default::default()),
            stats: SolveStats::default(),
        }
    };
    let (edge_lower, edge_upper) = params.edge_window();
    let m = g.size();
    let phi_threshold = params.phi_threshold();
    let report = TrifreeReport {
        n,
        p,
        k,
        m0: g0.size(),
        triangle_count0,
        removed_count: removed.len(),
        removed,
        removal_method,
        m,
        edge_lower,
        edge_upper,
        bullet1: Truth::from_bool(m as f64 <= edge_upper),
        bullet2: Truth::from_bool(m as f64 >= edge_lower),
        phi_threshold,
        bullet3: at_most(phi.lower, phi.upper, phi_threshold),
        phi,
        no_isolated_vertices: g.isolated_vertices().is_empty(),
        g0_no_isolated_vertices: g0.isolated_vertices().is_empty(),
    };
    Ok((g, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::certify::is_triangle_cover;

    fn golden() -> f64 {
        (5f64.sqrt() - 1.0) / 2.0
    }

    #[test]
    fn zero_probability() {
        let mut params = ConstructionParams::new(10, 0.5, 0.5, 1);
        params.p_override = Some(0.0);
        let (g, r) = sample_trifree(&params, Budget::UNLIMITED).unwrap();
        assert_eq!(g.size(), 0);
        assert!(r.removed.is_empty());
        assert_eq!(
            (r.bullet1, r.bullet2, r.bullet3),
            (Truth::True, Truth::True, Truth::True)
        );
        assert_eq!((r.phi.lower, r.phi.upper), (0.0, 0.0));
    }

    #[test]
    fn cleaned_graph_is_triangle_free() {
        for seed in 0..5 {
            let params = ConstructionParams::new(64, golden(), 0.5, seed);
            let g0 = gnp(64, params.p(), seed).unwrap();
            let (g, r) = sample_trifree(&params, Budget::UNLIMITED).unwrap();
            assert!(is_triangle_free(&g));
            assert!(is_triangle_cover(&g0, &r.removed).is_ok());
            assert!(r.removed_count <= r.triangle_count0);
            assert_eq!(r.m + r.removed_count, r.m0);
            if r.g0_no_isolated_vertices {
                assert!(r.no_isolated_vertices);
            }
            // removal never isolates a vertex that had an edge
            for v in 0..64 {
                if g0.degree(v) > 0 {
                    assert!(g.degree(v) > 0);
                }
            }
        }
    }

    #[test]
    fn dense_input_uses_greedy() {
        let mut params = ConstructionParams::new(40, 0.5, 0.5, 3);
        params.p_override = Some(0.9);
        let (g, r) = sample_trifree(&params, Budget::nodes(1)).unwrap();
        assert!(r.triangle_count0 > EXACT_REMOVAL_LIMIT);
        assert_eq!(r.removal_method, RemovalMethod::GreedyMinimal);
        assert!(is_triangle_free(&g));
    }

    #[test]
    fn three_way_comparison() {
        assert_eq!(at_most(1.0, 2.0, 2.0), Truth::True);
        assert_eq!(at_most(1.0, 2.0, 1.5), Truth::Indeterminate);
        assert_eq!(at_most(3.0, 4.0, 2.0), Truth::False);
        assert_eq!(at_most(0.0, 0.0, 0.0), Truth::True);
    }
}
