//! Polynomial-time certificate checks, written against the raw graph and
//! independent of every solver's internal data structures.

use super::{Certificate, Problem, SolveOutcome, PHI_TOLERANCE};
use crate::graph::{EdgeSet, Graph, VertexSet};

fn edges_present(g: &Graph, set: &EdgeSet) -> Result<(), String> {
    match set.as_slice().iter().find(|e| !g.has_edge(e.u, e.v)) {
        Some(e) => Err(format!("certificate edge {}-{} not in graph", e.u, e.v)),
        None => Ok(()),
    }
}

/// Deleting `set` leaves `g` triangle-free.
pub fn is_triangle_cover(g: &Graph, set: &EdgeSet) -> Result<(), String> {
    edges_present(g, set)?;
    let n = g.order();
    let kept =
        |a: usize, b: usize| g.has_edge(a, b) && !set.contains(&crate::graph::Edge::new(a, b));
    for a in 0..n {
        for b in a + 1..n {
            if !kept(a, b) {
                continue;
            }
            for c in b + 1..n {
                if kept(a, c) && kept(b, c) {
                    return Err(format!("triangle {a}-{b}-{c} survives deletion"));
                }
            }
        }
    }
    Ok(())
}

/// No triangle of `g` contains two edges of `set`.
pub fn is_triangle_independent(g: &Graph, set: &EdgeSet) -> Result<(), String> {
    edges_present(g, set)?;
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if !(g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) {
                    continue;
                }
                let chosen = [(a, b), (a, c), (b, c)]
                    .iter()
                    .filter(|&&(x, y)| set.contains(&crate::graph::Edge::new(x, y)))
                    .count();
                if chosen > 1 {
                    return Err(format!("triangle {a}-{b}-{c} holds {chosen} chosen edges"));
                }
            }
        }
    }
    Ok(())
}

pub fn is_independent_set(g: &Graph, set: &VertexSet) -> Result<(), String> {
    if let Some(&v) = set.as_slice().iter().find(|&&v| v >= g.order()) {
        return Err(format!("vertex {v} out of range"));
    }
    if g.is_independent(set) {
        Ok(())
    } else {
        Err("certificate vertices are not independent".into())
    }
}

/// `k|S| - |E(G[S])|` recomputed from scratch.
pub fn phi_of(g: &Graph, set: &VertexSet, k: f64) -> f64 {
    let s = set.as_slice();
    let mut inside = 0usize;
    for (i, &u) in s.iter().enumerate() {
        inside += s[i + 1..].iter().filter(|&&v| g.has_edge(u, v)).count();
    }
    k * s.len() as f64 - inside as f64
}

/// Full check of an outcome: interval ordering, certificate feasibility and
/// that the certificate attains the primal bound.
pub fn check_outcome(g: &Graph, out: &SolveOutcome) -> Result<(), String> {
    if out.lower > out.upper + PHI_TOLERANCE {
        return Err(format!("inverted interval [{}, {}]", out.lower, out.upper));
    }
    if out.is_optimal() && (out.upper - out.lower).abs() > PHI_TOLERANCE {
        return Err("OPTIMAL with a nondegenerate interval".into());
    }
    let size = out.certificate.len() as f64;
    match (&out.problem, &out.certificate) {
        (Problem::Tau, Certificate::Edges(set)) => {
            is_triangle_cover(g, set)?;
            if size != out.upper {
                return Err(format!("cover has {size} edges, upper bound {}", out.upper));
            }
        }
        (Problem::Alpha1, Certificate::Edges(set)) => {
            is_triangle_independent(g, set)?;
            if size != out.lower {
                return Err(format!("set has {size} edges, lower bound {}", out.lower));
            }
        }
        (Problem::Alpha, Certificate::Vertices(set)) => {
            is_independent_set(g, set)?;
            if size != out.lower {
                return Err(format!(
                    "set has {size} vertices, lower bound {}",
                    out.lower
                ));
            }
        }
        (Problem::Phi { k }, Certificate::Vertices(set)) => {
            if let Some(&v) = set.as_slice().iter().find(|&&v| v >= g.order()) {
                return Err(format!("vertex {v} out of range"));
            }
            let value = phi_of(g, set, *k);
            if (value - out.lower).abs() > PHI_TOLERANCE {
                return Err(format!("φ(S) = {value}, lower bound {}", out.lower));
            }
        }
        (p, _) => return Err(format!("certificate kind does not match {}", p.name())),
    }
    Ok(())
}
