//! Minimum triangle edge cover `τ(G)` as a hitting-set branch-and-bound.
//!
//! Each triangle is a 3-element set of edges; `τ` is the minimum number of
//! edges meeting all of them. A node of the search fixes some edges as
//! deleted ("chosen") and some as kept ("forbidden"). Its lower bound is
//! the number of chosen edges plus the size of a greedy packing of
//! still-unhit triangles that are pairwise disjoint on their non-forbidden
//! edges: every cover completing the node needs a distinct edge for each
//! packed triangle. The branching edge is the one lying in the most unhit
//! triangles, ties broken by canonical index; the "delete" child is
//! explored first.

use super::{Budget, Certificate, Problem, SolveOutcome, Tracker};
use crate::graph::{enumerate_triangles, EdgeSet, Graph};

const INFEASIBLE: usize = usize::MAX;

/// Triangles as triples of positions into `g.edges()`, plus the reverse
/// incidence lists.
pub(crate) struct TriangleSystem {
    pub triangles: Vec<[usize; 3]>,
    pub incident: Vec<Vec<usize>>,
}

impl TriangleSystem {
    pub fn new(g: &Graph) -> Self {
        let mut incident = vec![Vec::new(); g.size()];
        let triangles: Vec<[usize; 3]> = enumerate_triangles(g)
            .iter()
            .enumerate()
            .map(|(t, tri)| {
                let ids = tri
                    .edges()
                    .map(|e| g.edge_position(e).expect("triangle edge present"));
                for &e in &ids {
                    incident[e].push(t);
                }
                ids
            })
            .collect();
        TriangleSystem {
            triangles,
            incident,
        }
    }
}

/// Greedy cover (edge in the most unhit triangles, ties by canonical index)
/// followed by a pruning pass in reverse insertion order that drops every
/// edge whose triangles are all hit by other chosen edges. The result is
/// inclusion-minimal.
pub fn greedy_minimal_cover(g: &Graph) -> EdgeSet {
    let sys = TriangleSystem::new(g);
    let ids = greedy_minimal_ids(&sys, g.size());
    EdgeSet::new(ids.into_iter().map(|e| g.edges()[e]).collect())
}

fn greedy_minimal_ids(sys: &TriangleSystem, m: usize) -> Vec<usize> {
    let mut hits = vec![0u32; sys.triangles.len()];
    let mut unhit: Vec<usize> = sys.incident.iter().map(Vec::len).collect();
    let mut remaining = sys.triangles.len();
    let mut order = Vec::new();
    while remaining > 0 {
        let e = (0..m)
            .max_by(|&a, &b| unhit[a].cmp(&unhit[b]).then(b.cmp(&a)))
            .expect("edges exist while triangles remain");
        order.push(e);
        for &t in &sys.incident[e] {
            if hits[t] == 0 {
                remaining -= 1;
                for &f in &sys.triangles[t] {
                    unhit[f] -= 1;
                }
            }
            hits[t] += 1;
        }
    }
    let mut keep = vec![true; order.len()];
    for i in (0..order.len()).rev() {
        let e = order[i];
        if sys.incident[e].iter().all(|&t| hits[t] >= 2) {
            keep[i] = false;
            for &t in &sys.incident[e] {
                hits[t] -= 1;
            }
        }
    }
    order
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect()
}

struct Search<'a> {
    sys: &'a TriangleSystem,
    hits: Vec<u32>,
    /// unhit triangles through each edge
    unhit: Vec<usize>,
    chosen: Vec<bool>,
    forbidden: Vec<bool>,
    n_chosen: usize,
    remaining: usize,
    best: usize,
    best_set: Vec<usize>,
    tracker: Tracker,
}

impl Search<'_> {
    fn choose(&mut self, e: usize) {
        self.chosen[e] = true;
        self.n_chosen += 1;
        for &t in &self.sys.incident[e] {
            if self.hits[t] == 0 {
                self.remaining -= 1;
                for &f in &self.sys.triangles[t] {
                    self.unhit[f] -= 1;
                }
            }
            self.hits[t] += 1;
        }
    }

    fn unchoose(&mut self, e: usize) {
        self.chosen[e] = false;
        self.n_chosen -= 1;
        for &t in &self.sys.incident[e] {
            self.hits[t] -= 1;
            if self.hits[t] == 0 {
                self.remaining += 1;
                for &f in &self.sys.triangles[t] {
                    self.unhit[f] += 1;
                }
            }
        }
    }

    /// Forces the last free edge of every unhit triangle. Returns the
    /// forced edges, or `None` when some triangle can no longer be hit.
    fn propagate(&mut self) -> Option<Vec<usize>> {
        let mut forced = Vec::new();
        loop {
            let mut progress = false;
            for t in 0..self.sys.triangles.len() {
                if self.hits[t] > 0 {
                    continue;
                }
                let mut free = self.sys.triangles[t]
                    .iter()
                    .filter(|&&e| !self.forbidden[e]);
                match (free.next(), free.next()) {
                    (None, _) => {
                        for &e in forced.iter().rev() {
                            self.unchoose(e);
                        }
                        return None;
                    }
                    (Some(&e), None) => {
                        self.choose(e);
                        forced.push(e);
                        progress = true;
                    }
                    _ => {}
                }
            }
            if !progress {
                return Some(forced);
            }
        }
    }

    fn lower_bound(&self) -> usize {
        let mut used = vec![false; self.chosen.len()];
        let mut packed = 0;
        for (t, tri) in self.sys.triangles.iter().enumerate() {
            if self.hits[t] > 0 {
                continue;
            }
            let free = || tri.iter().filter(|&&e| !self.forbidden[e]);
            if free().count() == 0 {
                return INFEASIBLE;
            }
            if free().all(|&e| !used[e]) {
                for &e in free() {
                    used[e] = true;
                }
                packed += 1;
            }
        }
        self.n_chosen + packed
    }

    fn search(&mut self) -> usize {
        if !self.tracker.tick() {
            return self.lower_bound();
        }
        let Some(forced) = self.propagate() else {
            return INFEASIBLE;
        };
        let result = self.expand();
        for &e in forced.iter().rev() {
            self.unchoose(e);
        }
        result
    }

    fn expand(&mut self) -> usize {
        if self.remaining == 0 {
            if self.n_chosen < self.best {
                self.best = self.n_chosen;
                self.best_set = (0..self.chosen.len()).filter(|&e| self.chosen[e]).collect();
            }
            return self.n_chosen;
        }
        let lb = self.lower_bound();
        if lb >= self.best {
            return lb;
        }
        let e = (0..self.chosen.len())
            .filter(|&e| !self.chosen[e] && !self.forbidden[e] && self.unhit[e] > 0)
            .max_by(|&a, &b| self.unhit[a].cmp(&self.unhit[b]).then(b.cmp(&a)))
            .expect("an unhit triangle has a free edge after propagation");
        self.choose(e);
        let with = self.search();
        self.unchoose(e);
        self.forbidden[e] = true;
        let without = self.search();
        self.forbidden[e] = false;
        with.min(without)
    }
}

/// `τ(G)` with a certified interval.
pub fn tau_exact(g: &Graph, budget: Budget) -> SolveOutcome {
    let sys = TriangleSystem::new(g);
    let m = g.size();
    let incumbent = greedy_minimal_ids(&sys, m);
    let mut s = Search {
        sys: &sys,
        hits: vec![0; sys.triangles.len()],
        unhit: sys.incident.iter().map(Vec::len).collect(),
        chosen: vec![false; m],
        forbidden: vec![false; m],
        n_chosen: 0,
        remaining: sys.triangles.len(),
        best: incumbent.len(),
        best_set: incumbent,
        tracker: Tracker::new(budget),
    };
    let explored = s.search();
    let lower = explored.min(s.best);
    let cert = EdgeSet::new(s.best_set.iter().map(|&e| g.edges()[e]).collect());
    SolveOutcome::new(
        Problem::Tau,
        lower as f64,
        s.best as f64,
        Certificate::Edges(cert),
        s.tracker.stats(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gnp, StandardGraph};
    use crate::solvers::certify::is_triangle_cover;

    fn tau(g: &Graph) -> i64 {
        let out = tau_exact(g, Budget::UNLIMITED);
        assert!(out.is_optimal());
        assert!(out.certificate_is_valid(g));
        out.value_int().unwrap()
    }

    fn complete(n: usize) -> Graph {
        StandardGraph::Complete(n).build().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(tau(&complete(3)), 1);
        // K4 -> 2 (brute force over 2^6 subsets, see oracle tests)
        assert_eq!(tau(&complete(4)), 2);
        assert_eq!(tau(&StandardGraph::Cycle(5).build().unwrap()), 0);
        assert_eq!(tau(&complete(5)), 4);
        assert_eq!(tau(&Graph::empty(0)), 0);
    }

    #[test]
    fn complete_graphs_follow_mantel() {
        // deleting a maximum triangle-free (bipartite) subgraph's complement
        for n in 3..=10 {
            assert_eq!(
                tau(&complete(n)) as usize,
                n * (n - 1) / 2 - n * n / 4,
                "K{n}"
            );
        }
    }

    #[test]
    fn greedy_cover_is_inclusion_minimal() {
        for seed in 0..30 {
            let g = gnp(14, 0.5, seed).unwrap();
            let cover = greedy_minimal_cover(&g);
            assert!(is_triangle_cover(&g, &cover).is_ok());
            for e in cover.as_slice() {
                let smaller = EdgeSet::new(
                    cover
                        .as_slice()
                        .iter()
                        .copied()
                        .filter(|f| f != e)
                        .collect(),
                );
                assert!(
                    is_triangle_cover(&g, &smaller).is_err(),
                    "seed {seed}: {e:?} redundant"
                );
            }
        }
    }

    #[test]
    fn truncated_runs_stay_sound() {
        let g = complete(9);
        let exact = 36 - 20;
        for nodes in [1, 5, 50] {
            let out = tau_exact(&g, Budget::nodes(nodes));
            assert!(out.lower_int() <= exact && exact <= out.upper_int());
            assert!(out.certificate_is_valid(&g));
        }
    }
}
