use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{CheckReport, Verdict};
use crate::constructions::Truth;
use crate::error::{Error, Result};
use crate::graph::{graph6, Graph, VertexSet};
use crate::solvers::{phi_max, phi_value, Budget};

/// A vertex set with per-vertex counts of neighbors inside it.
struct Subset<'a> {
    g: &'a Graph,
    inside: Vec<bool>,
    inner_degree: Vec<usize>,
    edges: usize,
    size: usize,
}

impl<'a> Subset<'a> {
    fn new(g: &'a Graph, members: &[usize]) -> Self {
        let mut s = Subset {
            g,
            inside: vec![false; g.order()],
            inner_degree: vec![0; g.order()],
            edges: 0,
            size: 0,
        };
        for &v in members {
            s.insert(v);
        }
        s
    }

    fn insert(&mut self, v: usize) {
        self.inside[v] = true;
        self.size += 1;
        self.edges += self.inner_degree[v];
        for &u in self.g.neighbors(v) {
            self.inner_degree[u] += 1;
        }
    }

    fn remove(&mut self, v: usize) {
        self.inside[v] = false;
        self.size -= 1;
        self.edges -= self.inner_degree[v];
        for &u in self.g.neighbors(v) {
            self.inner_degree[u] -= 1;
        }
    }

    fn members(&self) -> Vec<usize> {
        (0..self.g.order()).filter(|&v| self.inside[v]).collect()
    }
}

/// `|E(G[S])| - (1-ε)p|S|²/2`; negative means a violation.
fn slack(edges: usize, size: usize, p: f64, eps: f64) -> f64 {
    edges as f64 - (1.0 - eps) * p * (size * size) as f64 / 2.0
}

/// Seeded search for `S` with `|S| ≥ εn` and `|E(G[S])| < (1-ε)p|S|²/2`.
///
/// Candidates: the nested sets obtained by repeatedly deleting a vertex of
/// largest inner degree (ties to the lowest label), then `effort` random
/// swap attempts starting from the most violating candidate of a few
/// sizes. Finding nothing is not a proof.
pub fn density_falsifier(
    g: &Graph,
    p: f64,
    eps: f64,
    effort: u64,
    seed: u64,
) -> Result<CheckReport> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::Parameter(format!("ε = {eps} not in (0, 1)")));
    }
    let n = g.order();
    let min_size = ((eps * n as f64).ceil() as usize).max(1);
    let mut report = CheckReport::new("density", graph6::encode(g));
    report.measure("p", p);
    report.measure("eps", eps);
    report.measure("min_size", min_size);
    report.measure("effort", effort);
    report.measure("seed", seed);
    if min_size > n {
        report.note = Some("no admissible subset".into());
        return Ok(report);
    }

    // peeling
    let mut current = Subset::new(g, &(0..n).collect::<Vec<_>>());
    let mut peeled: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut best = (f64::INFINITY, Vec::new());
    loop {
        let s = current.size;
        let sl = slack(current.edges, s, p, eps);
        peeled[s] = current.members();
        if sl < best.0 {
            best = (sl, peeled[s].clone());
        }
        if s <= min_size {
            break;
        }
        let v = (0..n)
            .filter(|&v| current.inside[v])
            .max_by_key(|&v| (current.inner_degree[v], std::cmp::Reverse(v)))
            .expect("nonempty");
        current.remove(v);
    }

    // swaps at a few sizes
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sizes: Vec<usize> = vec![min_size];
    let extra = (n - min_size).min(3);
    for _ in 0..extra {
        sizes.push(rng.gen_range(min_size..=n));
    }
    let per_size = effort / sizes.len() as u64;
    for &size in &sizes {
        let mut s = Subset::new(g, &peeled[size]);
        let mut outside: Vec<usize> = (0..n).filter(|&v| !s.inside[v]).collect();
        let mut inside = s.members();
        if outside.is_empty() {
            continue;
        }
        for _ in 0..per_size {
            let i = rng.gen_range(0..inside.len());
            let j = rng.gen_range(0..outside.len());
            let (u, v) = (inside[i], outside[j]);
            let delta =
                s.inner_degree[v] as i64 - s.inner_degree[u] as i64 - g.has_edge(u, v) as i64;
            if delta < 0 || (delta == 0 && rng.gen_bool(0.5)) {
                s.remove(u);
                s.insert(v);
                inside[i] = v;
                outside[j] = u;
                let sl = slack(s.edges, size, p, eps);
                if sl < best.0 {
                    let mut members = inside.clone();
                    members.sort_unstable();
                    best = (sl, members);
                }
            }
        }
    }

    let witness = VertexSet::new(best.1);
    let inner = g.induced_edge_count(&witness.mask(n));
    report.measure("best_slack", best.0);
    report.measure("best_size", witness.len());
    if best.0 < 0.0 {
        report.fail(json!({
            "graph6": graph6::encode(g),
            "set": witness,
            "edges_inside": inner,
            "threshold": (1.0 - eps) * p * (witness.len() * witness.len()) as f64 / 2.0,
        }));
    } else {
        report.note = Some(format!("no violation found at effort {effort}"));
    }
    Ok(report)
}

/// Compares a certified `max φ_k` interval with `k²/(2(1-ε)p)`, `k = dnp`.
pub fn phi_bound_check(g: &Graph, p: f64, d: f64, eps: f64, budget: Budget) -> Result<CheckReport> {
    if !(eps > 0.0 && eps < 1.0) || d.is_nan() || d <= 0.0 || p.is_nan() || p <= 0.0 {
        return Err(Error::Parameter(format!(
            "need 0 < ε < 1, d > 0, p > 0 (got ε = {eps}, d = {d}, p = {p})"
        )));
    }
    let n = g.order();
    let k = d * n as f64 * p;
    let threshold = k * k / (2.0 * (1.0 - eps) * p);
    let mut report = CheckReport::new("phibound", graph6::encode(g));
    report.measure("p", p);
    report.measure("d", d);
    report.measure("eps", eps);
    report.measure("k", k);
    report.measure("threshold", threshold);
    // f(x) = kx - (1-ε)px²/2 peaks at x* with f(x*) equal to the threshold
    let x_star = k / ((1.0 - eps) * p);
    report.measure("x_star", x_star);
    report.measure(
        "f_at_x_star",
        k * x_star - (1.0 - eps) * p * x_star * x_star / 2.0,
    );
    if k == 0.0 {
        report.measure("phi", [0.0, 0.0]);
        return Ok(report);
    }
    let phi = phi_max(g, k, budget)?;
    report.measure("phi", [phi.lower, phi.upper]);
    report.measure("phi_status", phi.status);
    report.verdict = match crate::constructions::trifree::at_most(phi.lower, phi.upper, threshold) {
        Truth::True => Verdict::Pass,
        Truth::False => Verdict::Fail,
        Truth::Indeterminate => Verdict::Indeterminate,
    };
    if report.verdict == Verdict::Fail {
        let set = phi
            .vertex_certificate()
            .expect("vertex certificate")
            .clone();
        report.fail(json!({
            "graph6": graph6::encode(g),
            "set": set,
            "phi": phi_value(g, &set, k),
            "threshold": threshold,
        }));
    } else {
        report.note = Some("a pass covers this instance only".into());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::StandardGraph;

    #[test]
    fn empty_graph_violates_density() {
        let r = density_falsifier(&Graph::empty(10), 0.5, 0.5, 100, 0).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let w = r.counterexample.unwrap();
        assert_eq!(w["edges_inside"], 0);
        assert!(w["set"].as_array().unwrap().len() >= 5);
    }

    #[test]
    fn complete_graph_passes_density() {
        for n in [4, 9, 16] {
            let g = StandardGraph::Complete(n).build().unwrap();
            let r = density_falsifier(&g, 1.0, 0.5, 500, 1).unwrap();
            assert_eq!(r.verdict, Verdict::Pass);
        }
    }

    #[test]
    fn swaps_find_a_sparse_half() {
        // the five isolated vertices form a violating 5-set
        let k5 = StandardGraph::Complete(5).build().unwrap();
        let g = crate::graph::disjoint_union(&Graph::empty(5), &k5);
        let r = density_falsifier(&g, 0.5, 0.5, 1000, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn phi_bound_examples() {
        let r = phi_bound_check(&Graph::empty(10), 0.1, 0.1, 0.5, Budget::UNLIMITED).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(
            r.counterexample.unwrap()["set"].as_array().unwrap().len(),
            10
        );
        assert!(phi_bound_check(&Graph::empty(3), 0.0, 0.1, 0.5, Budget::UNLIMITED).is_err());
    }
}
