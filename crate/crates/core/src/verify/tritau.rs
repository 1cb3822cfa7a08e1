use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{CheckReport, Verdict};
use crate::constructions::build_join_h;
use crate::error::{Error, Result};
use crate::graph::{enumerate_triangles, gnp, graph6, is_triangle_free, Edge, Graph};
use crate::solvers::{phi_max, tau_exact, Budget};

/// Largest order for exhaustive labeled enumeration.
pub const MAX_EXHAUSTIVE_N: usize = 6;

/// Sampled instances beyond the exhaustive range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TritauSample {
    pub count: usize,
    pub seed: u64,
    pub min_n: usize,
    pub max_n: usize,
}

/// All `2^C(n,2)` labeled graphs on `n` vertices, bit `i` of the index
/// selecting the `i`-th pair in lexicographic order.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| (e.u, e.v));
        Graph::from_edges(n, edges).expect("valid pairs")
    })
}

/// `G(n, p)` followed by deleting a random edge of a random remaining
/// triangle until none is left.
pub fn random_trifree(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let g = gnp(n, p, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut b = g.to_builder();
    loop {
        let current = b.clone().build();
        let tris = enumerate_triangles(&current);
        if tris.is_empty() {
            return Ok(current);
        }
        let t = tris[rng.gen_range(0..tris.len())];
        let e = t.edges()[rng.gen_range(0..3)];
        b.remove_edge(e.u, e.v);
    }
}

/// `τ(K̄_k ∨ G) = nk - max φ_k(G)` on every labeled triangle-free graph with
/// at most `n_max` vertices, plus sampled triangle-free graphs.
pub fn tritau_exhaustive(
    n_max: usize,
    k_set: &[usize],
    sample: Option<TritauSample>,
    budget: Budget,
) -> Result<CheckReport> {
    if n_max > MAX_EXHAUSTIVE_N {
        return Err(Error::Parameter(format!(
            "exhaustive range is capped at n = {MAX_EXHAUSTIVE_N}"
        )));
    }
    if k_set.is_empty() || k_set.contains(&0) {
        return Err(Error::Parameter(
            "k values must be positive integers".into(),
        ));
    }
    let mut instances: Vec<Graph> = (1..=n_max)
        .flat_map(all_labeled_graphs)
        .filter(is_triangle_free)
        .collect();
    let exhaustive = instances.len();
    if let Some(s) = sample {
        if s.min_n == 0 || s.min_n > s.max_n {
            return Err(Error::Parameter("sample order range is empty".into()));
        }
        let span = (s.max_n - s.min_n + 1) as u64;
        for i in 0..s.count as u64 {
            let n = s.min_n + (i % span) as usize;
            instances.push(random_trifree(n, 0.5, s.seed.wrapping_add(i))?);
        }
    }

    let mut report = CheckReport::new(
        "tritau",
        format!(
            "n_max={n_max} k={k_set:?} sample={}",
            sample.map_or("none".into(), |s| format!(
                "{}@{}..={} seed {}",
                s.count, s.min_n, s.max_n, s.seed
            ))
        ),
    );
    let mut cases = 0u64;
    let mut undecided = 0u64;
    for g in &instances {
        for &k in k_set {
            cases += 1;
            let phi = phi_max(g, k as f64, budget)?;
            let h = build_join_h(g, k)?;
            let tau = tau_exact(&h, budget);
            let (Some(phi_v), Some(tau_v)) = (phi.value_int(), tau.value_int()) else {
                undecided += 1;
                continue;
            };
            let expected = (g.order() * k) as i64 - phi_v;
            if tau_v != expected {
                report.fail(json!({
                    "graph6": graph6::encode(g),
                    "k": k,
                    "tau_join": tau_v,
                    "nk_minus_phi": expected,
                    "phi_certificate": phi.certificate,
                    "tau_certificate": tau.certificate,
                }));
                break;
            }
        }
        if report.verdict == Verdict::Fail {
            break;
        }
    }
    report.measure("exhaustive_graphs", exhaustive);
    report.measure("sampled_graphs", instances.len() - exhaustive);
    report.measure("cases", cases);
    report.measure("undecided", undecided);
    if report.verdict != Verdict::Fail && undecided > 0 {
        report.verdict = Verdict::Indeterminate;
    }
    Ok(report)
}
