use super::{phi_max, Budget, Certificate, Problem, SolveOutcome};
use crate::error::{Error, Result};
use crate::graph::{is_triangle_free, Edge, EdgeSet, Graph};

/// `τ(K̄_k ∨ G) = nk - max_S φ_k(S)` for triangle-free `G` and integer `k >= 1`.
///
/// The interval is the `φ` interval reflected: `τ_lower = nk - φ_upper` and
/// `τ_upper = nk - φ_lower`. The certificate is a cover of the join with
/// the `k` hub vertices labeled `0..k` and `G` shifted by `k`: for the
/// optimal `S` it deletes all hub edges of vertices outside `S` plus the
/// edges of `G[S]`, which is `k(n - |S|) + |E(G[S])| = nk - φ_k(S)` edges.
pub fn tau_join_formula(g: &Graph, k: usize, budget: Budget) -> Result<SolveOutcome> {
    if k == 0 {
        return Err(Error::Parameter("hub count k must be at least 1".into()));
    }
    if !is_triangle_free(g) {
        return Err(Error::Precondition(
            "the join formula needs a triangle-free graph".into(),
        ));
    }
    let n = g.order();
    let phi = phi_max(g, k as f64, budget)?;
    let set = phi.vertex_certificate().expect("φ certifies with vertices");
    let mut cover = Vec::new();
    for v in (0..n).filter(|&v| !set.contains(v)) {
        cover.extend((0..k).map(|h| Edge::new(h, k + v)));
    }
    cover.extend(
        g.edges()
            .iter()
            .filter(|e| set.contains(e.u) && set.contains(e.v))
            .map(|e| Edge::new(k + e.u, k + e.v)),
    );
    let total = (n * k) as f64;
    Ok(SolveOutcome::new(
        Problem::Tau,
        total - phi.upper,
        total - phi.lower,
        Certificate::Edges(EdgeSet::new(cover)),
        phi.stats,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{join, StandardGraph};
    use crate::solvers::tau_exact;

    fn via_formula(g: &Graph, k: usize) -> i64 {
        let out = tau_join_formula(g, k, Budget::UNLIMITED).unwrap();
        let h = join(&Graph::empty(k), g);
        assert!(out.certificate_is_valid(&h), "{out:?}");
        out.value_int().unwrap()
    }

    fn via_direct(g: &Graph, k: usize) -> i64 {
        let h = join(&Graph::empty(k), g);
        tau_exact(&h, Budget::UNLIMITED).value_int().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(via_formula(&Graph::empty(4), 3), 0);
        let k2 = StandardGraph::Complete(2).build().unwrap();
        assert_eq!(via_formula(&k2, 1), 1);
        assert_eq!(via_direct(&k2, 1), 1);
        let c5 = StandardGraph::Cycle(5).build().unwrap();
        assert_eq!(via_formula(&c5, 1), 3);
        assert_eq!(via_direct(&c5, 1), 3);
        let p4 = StandardGraph::Path(4).build().unwrap();
        assert_eq!(via_formula(&p4, 2), 3);
        assert_eq!(via_direct(&p4, 2), 3);
    }

    #[test]
    fn preconditions() {
        let k3 = StandardGraph::Complete(3).build().unwrap();
        assert!(matches!(
            tau_join_formula(&k3, 1, Budget::UNLIMITED),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            tau_join_formula(&Graph::empty(2), 0, Budget::UNLIMITED),
            Err(Error::Parameter(_))
        ));
    }
}
