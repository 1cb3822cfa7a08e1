//! `max_S φ_k(S)` with `φ_k(S) = k|S| - |E(G[S])|` for real `k > 0`.
//!
//! The search state is a set `In` of chosen vertices and a set `U` of
//! undecided ones. With `w(v) = k - |N(v) ∩ In|` the value of completing
//! the state with `T ⊆ U` is `φ_k(In) + Σ_{v∈T} w(v) - |E(G[T])|`, so every
//! subproblem is a vertex-weighted instance of the same functional.
//!
//! Because `|E(G[·])|` is supermodular, the marginal value of adding `v`
//! to any completion lies in `[w(v) - deg_U(v), w(v)]`. This gives two
//! value-preserving reductions applied to a fixpoint at every node:
//! `w(v) <= 0` means `v` never helps (drop it), and `w(v) >= deg_U(v)`
//! means `v` never hurts (take it). Remaining vertices are split into
//! connected components of `G[U]`, which are independent given `In`.
//!
//! Upper bounds, all admissible:
//! * `Σ_{v∈U} max(0, w(v))`: drops every edge inside `U`.
//! * Lagrangian: for any `λ_e ∈ [0, 1]` on the edges of `G[U]`,
//!   `[u∈T][v∈T] >= λ_e([u∈T] + [v∈T] - 1)`, hence the value is at most
//!   `Σ_v max(0, w(v) - Σ_{e∋v} λ_e) + Σ_e λ_e`. The multipliers are
//!   improved by a few passes of exact coordinate descent.
//! * Star partition: cover `U` by vertex-disjoint stars and ignore edges
//!   between stars and between leaves; each star is then solved exactly.
//!
//! The minimum of the three prunes a node when it cannot beat the best
//! value already known to the caller.

use super::{Budget, Certificate, Problem, SolveOutcome, Tracker, PHI_TOLERANCE};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

const LAGRANGE_PASSES: usize = 4;

/// `φ_k(S)` for the given vertex set.
pub fn phi_value(g: &Graph, set: &VertexSet, k: f64) -> f64 {
    let mask = set.mask(g.order());
    k * set.len() as f64 - g.induced_edge_count(&mask) as f64
}

struct Sub {
    lower: f64,
    members: Vec<usize>,
    upper: f64,
}

struct Search<'a> {
    g: &'a Graph,
    k: f64,
    integral: bool,
    tracker: Tracker,
}

impl Search<'_> {
    fn weight(&self, taken: &[u32], v: usize) -> f64 {
        self.k - taken[v] as f64
    }

    fn round_bound(&self, b: f64) -> f64 {
        if self.integral {
            (b + PHI_TOLERANCE).floor()
        } else {
            b
        }
    }

    /// Best completion of `verts` given the chosen-neighbor counts `taken`.
    /// `floor` is the value below which the caller has no use for the
    /// result; subtrees whose bound cannot exceed it are cut off.
    fn solve(&mut self, verts: &[usize], mut taken: Vec<u32>, floor: f64) -> Sub {
        let n = self.g.order();
        let mut in_u = vec![false; n];
        for &v in verts {
            in_u[v] = true;
        }
        let mut deg = vec![0usize; n];
        for &v in verts {
            deg[v] = self.g.neighbors(v).iter().filter(|&&u| in_u[u]).count();
        }
        let mut forced = Vec::new();
        let mut forced_value = 0.0;
        let mut stack: Vec<usize> = verts.iter().rev().copied().collect();
        while let Some(v) = stack.pop() {
            if !in_u[v] {
                continue;
            }
            let w = self.weight(&taken, v);
            let take = if w <= 0.0 {
                false
            } else if w >= deg[v] as f64 {
                true
            } else {
                continue;
            };
            in_u[v] = false;
            if take {
                forced_value += w;
                forced.push(v);
            }
            for &u in self.g.neighbors(v) {
                if in_u[u] {
                    deg[u] -= 1;
                    if take {
                        taken[u] += 1;
                    }
                    stack.push(u);
                }
            }
        }
        let rest: Vec<usize> = verts.iter().copied().filter(|&v| in_u[v]).collect();
        let floor = floor - forced_value;
        let mut sub = if rest.is_empty() {
            Sub {
                lower: 0.0,
                members: Vec::new(),
                upper: 0.0,
            }
        } else {
            let comps = self.components(&rest, &in_u);
            if comps.len() == 1 {
                self.branch(&rest, &in_u, &taken, floor)
            } else {
                self.solve_components(comps, &taken, floor)
            }
        };
        sub.lower += forced_value;
        sub.upper += forced_value;
        sub.members.extend(forced);
        sub
    }

    fn components(&self, rest: &[usize], in_u: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.g.order()];
        let mut out = Vec::new();
        for &s in rest {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &u in self.g.neighbors(v) {
                    if in_u[u] && !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn solve_components(&mut self, comps: Vec<Vec<usize>>, taken: &[u32], floor: f64) -> Sub {
        let n = self.g.order();
        let bounds: Vec<f64> = comps
            .iter()
            .map(|c| {
                let mut mask = vec![false; n];
                for &v in c {
                    mask[v] = true;
                }
                self.bound(c, &mask, taken)
            })
            .collect();
        let mut total = Sub {
            lower: 0.0,
            members: Vec::new(),
            upper: 0.0,
        };
        let mut rest_bound: f64 = bounds.iter().sum();
        for (comp, b) in comps.iter().zip(&bounds) {
            rest_bound -= b;
            let part = self.solve(comp, taken.to_vec(), floor - total.upper - rest_bound);
            total.lower += part.lower;
            total.upper += part.upper.min(*b);
            total.members.extend(part.members);
        }
        total
    }

    fn branch(&mut self, rest: &[usize], in_u: &[bool], taken: &[u32], floor: f64) -> Sub {
        let bound = self.round_bound(self.bound(rest, in_u, taken));
        if bound <= floor + PHI_TOLERANCE {
            return Sub {
                lower: 0.0,
                members: Vec::new(),
                upper: bound,
            };
        }
        let (mut best_value, mut best) = self.greedy(rest, in_u, taken);
        if !self.tracker.tick() {
            return Sub {
                lower: best_value,
                members: best,
                upper: bound,
            };
        }
        if best_value >= bound - PHI_TOLERANCE {
            return Sub {
                lower: best_value,
                members: best,
                upper: best_value,
            };
        }
        let v = *rest
            .iter()
            .max_by(|&&a, &&b| {
                let da = self.g.neighbors(a).iter().filter(|&&u| in_u[u]).count();
                let db = self.g.neighbors(b).iter().filter(|&&u| in_u[u]).count();
                da.cmp(&db).then(b.cmp(&a))
            })
            .expect("nonempty component");
        let w = self.weight(taken, v);
        let remaining: Vec<usize> = rest.iter().copied().filter(|&u| u != v).collect();

        let mut with_taken = taken.to_vec();
        for &u in self.g.neighbors(v) {
            with_taken[u] += 1;
        }
        let with = self.solve(&remaining, with_taken, floor.max(best_value) - w);
        if w + with.lower > best_value {
            best_value = w + with.lower;
            best = with.members;
            best.push(v);
        }
        let without = self.solve(&remaining, taken.to_vec(), floor.max(best_value));
        if without.lower > best_value {
            best_value = without.lower;
            best = without.members;
        }
        Sub {
            lower: best_value,
            members: best,
            upper: (w + with.upper).max(without.upper).min(bound),
        }
    }

    /// Greedy completion: repeatedly take the vertex of largest positive
    /// marginal gain, ties by label.
    fn greedy(&self, rest: &[usize], in_u: &[bool], taken: &[u32]) -> (f64, Vec<usize>) {
        let n = self.g.order();
        let mut gain = vec![f64::NEG_INFINITY; n];
        for &v in rest {
            gain[v] = self.weight(taken, v);
        }
        let mut chosen = Vec::new();
        let mut value = 0.0;
        loop {
            let pick = rest
                .iter()
                .copied()
                .filter(|&v| gain[v] > 0.0)
                .max_by(|&a, &b| gain[a].total_cmp(&gain[b]).then(b.cmp(&a)));
            let Some(v) = pick else { break };
            value += gain[v];
            chosen.push(v);
            gain[v] = f64::NEG_INFINITY;
            for &u in self.g.neighbors(v) {
                if in_u[u] {
                    gain[u] -= 1.0;
                }
            }
        }
        (value, chosen)
    }

    fn bound(&self, verts: &[usize], in_u: &[bool], taken: &[u32]) -> f64 {
        let weights: Vec<f64> = verts
            .iter()
            .map(|&v| self.weight(taken, v).max(0.0))
            .collect();
        let trivial: f64 = weights.iter().sum();
        trivial
            .min(self.lagrangian_bound(verts, in_u, &weights))
            .min(self.star_bound(verts, in_u, taken))
    }

    fn lagrangian_bound(&self, verts: &[usize], in_u: &[bool], weights: &[f64]) -> f64 {
        let n = self.g.order();
        let mut local = vec![usize::MAX; n];
        for (i, &v) in verts.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in verts.iter().enumerate() {
            for &u in self.g.neighbors(v) {
                if in_u[u] && u > v {
                    edges.push((i, local[u]));
                }
            }
        }
        let mut lambda = vec![0.5; edges.len()];
        let mut load = vec![0.0; verts.len()];
        for &(a, b) in &edges {
            load[a] += 0.5;
            load[b] += 0.5;
        }
        for _ in 0..LAGRANGE_PASSES {
            for (e, &(a, b)) in edges.iter().enumerate() {
                let ra = weights[a] - (load[a] - lambda[e]);
                let rb = weights[b] - (load[b] - lambda[e]);
                let next = ra.min(rb).clamp(0.0, 1.0);
                load[a] += next - lambda[e];
                load[b] += next - lambda[e];
                lambda[e] = next;
            }
        }
        let residual: f64 = weights
            .iter()
            .zip(&load)
            .map(|(w, l)| (w - l).max(0.0))
            .sum();
        residual + lambda.iter().sum::<f64>()
    }

    fn star_bound(&self, verts: &[usize], in_u: &[bool], taken: &[u32]) -> f64 {
        let n = self.g.order();
        let mut free = in_u.to_vec();
        let mut order = verts.to_vec();
        let live_deg =
            |v: usize, free: &[bool]| self.g.neighbors(v).iter().filter(|&&u| free[u]).count();
        order.sort_by_key(|&v| (std::cmp::Reverse(live_deg(v, in_u)), v));
        let mut total = 0.0;
        let mut placed = vec![false; n];
        for &c in &order {
            if placed[c] {
                continue;
            }
            placed[c] = true;
            free[c] = false;
            let wc = self.weight(taken, c).max(0.0);
            let mut leaves_out = 0.0;
            let mut leaves_in = 0.0;
            for &u in self.g.neighbors(c) {
                if free[u] && !placed[u] {
                    placed[u] = true;
                    free[u] = false;
                    let wu = self.weight(taken, u);
                    leaves_out += wu.max(0.0);
                    leaves_in += (wu - 1.0).max(0.0);
                }
            }
            total += leaves_out.max(wc + leaves_in);
        }
        total
    }
}

/// `max_S φ_k(S)` with a certified interval. The empty set is allowed, so
/// the value is at least 0.
pub fn phi_max(g: &Graph, k: f64, budget: Budget) -> Result<SolveOutcome> {
    if k.is_nan() || k <= 0.0 || !k.is_finite() {
        return Err(Error::Parameter(format!(
            "φ_k needs a finite k > 0, got {k}"
        )));
    }
    let problem = Problem::Phi { k };
    let mut search = Search {
        g,
        k,
        integral: problem.is_integral(),
        tracker: Tracker::new(budget),
    };
    let all: Vec<usize> = (0..g.order()).collect();
    let sub = search.solve(&all, vec![0; g.order()], 0.0);
    let set = VertexSet::new(sub.members);
    let lower = phi_value(g, &set, k);
    debug_assert!(
        (lower - sub.lower).abs() <= 1e-6,
        "{lower} vs {}",
        sub.lower
    );
    Ok(SolveOutcome::new(
        problem,
        lower,
        sub.upper.max(lower),
        Certificate::Vertices(set),
        search.tracker.stats(),
    ))
}
