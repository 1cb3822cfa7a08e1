//! Maximum independent set, solved as maximum clique in the complement
//! with a greedy-coloring bound (each color class of the complement is a
//! clique of `G`, so it holds at most one vertex of any independent set).
//!
//! Serves `α(G)` directly and `α₁(G)` through the edge-conflict graph.

use super::{Budget, Certificate, Problem, SolveOutcome, Tracker};
use crate::graph::{enumerate_triangles, words_for, EdgeSet, Graph, GraphBuilder, VertexSet, WORD};

type Bits = Vec<u64>;

#[inline]
fn is_empty(b: &[u64]) -> bool {
    b.iter().all(|&w| w == 0)
}

#[inline]
fn first_bit(b: &[u64]) -> Option<usize> {
    b.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * WORD + w.trailing_zeros() as usize)
}

#[inline]
fn clear(b: &mut [u64], v: usize) {
    b[v / WORD] &= !(1 << (v % WORD));
}

struct CliqueSearch {
    /// complement adjacency in search order
    comp: Vec<Bits>,
    current: Vec<usize>,
    best: Vec<usize>,
    tracker: Tracker,
}

impl CliqueSearch {
    /// Greedy sequential coloring of `cand` in the complement. Returns
    /// vertices in nondecreasing color order together with their colors.
    fn color_sort(&self, cand: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = cand.to_vec();
        let mut order = Vec::new();
        let mut colors = Vec::new();
        let mut color = 0;
        while !is_empty(&uncolored) {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = first_bit(&q) {
                clear(&mut uncolored, v);
                clear(&mut q, v);
                for (qw, cw) in q.iter_mut().zip(&self.comp[v]) {
                    *qw &= !cw;
                }
                order.push(v);
                colors.push(color);
            }
        }
        (order, colors)
    }

    /// Returns an upper bound on the largest clique extending `current`
    /// inside `cand`; updates `best` along the way.
    fn expand(&mut self, mut cand: Bits) -> usize {
        let (order, colors) = self.color_sort(&cand);
        let depth = self.current.len();
        if !self.tracker.tick() {
            return depth + colors.last().copied().unwrap_or(0);
        }
        let mut ub = depth;
        for i in (0..order.len()).rev() {
            let bound = depth + colors[i];
            if bound <= self.best.len() || self.tracker.exhausted() {
                return ub.max(bound);
            }
            let v = order[i];
            self.current.push(v);
            let next: Bits = cand.iter().zip(&self.comp[v]).map(|(a, b)| a & b).collect();
            let child = if is_empty(&next) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
                self.current.len()
            } else {
                self.expand(next)
            };
            ub = ub.max(child);
            self.current.pop();
            clear(&mut cand, v);
        }
        ub
    }
}

/// Min-degree greedy independent set (ties by label).
fn greedy_independent(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut out = Vec::new();
    while let Some(v) = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (deg[v], v)) {
        out.push(v);
        let mut dead = vec![v];
        dead.extend(g.neighbors(v).iter().copied().filter(|&u| alive[u]));
        for &u in &dead {
            alive[u] = false;
        }
        for &u in &dead {
            for &w in g.neighbors(u) {
                if alive[w] {
                    deg[w] -= 1;
                }
            }
        }
    }
    out
}

/// Largest independent set of `g` within the budget: `(best set, upper bound, tracker)`.
fn max_independent(g: &Graph, budget: Budget) -> (Vec<usize>, usize, Tracker) {
    let n = g.order();
    // search order: nonincreasing complement degree, i.e. nondecreasing degree in g
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let words = words_for(n);
    let comp: Vec<Bits> = order
        .iter()
        .map(|&v| {
            let mut row = vec![0u64; words];
            for (u, &p) in pos.iter().enumerate() {
                if u != v && !g.has_edge(u, v) {
                    row[p / WORD] |= 1 << (p % WORD);
                }
            }
            row
        })
        .collect();
    let seed: Vec<usize> = greedy_independent(g).iter().map(|&v| pos[v]).collect();
    let mut search = CliqueSearch {
        comp,
        current: Vec::new(),
        best: seed,
        tracker: Tracker::new(budget),
    };
    let mut all = vec![0u64; words];
    for v in 0..n {
        all[v / WORD] |= 1 << (v % WORD);
    }
    let ub = if n == 0 { 0 } else { search.expand(all) };
    let best: Vec<usize> = search.best.iter().map(|&p| order[p]).collect();
    let upper = ub.max(best.len());
    (best, upper, search.tracker)
}

/// `α(G)` with a certified interval.
pub fn alpha_exact(g: &Graph, budget: Budget) -> SolveOutcome {
    let (best, upper, tracker) = max_independent(g, budget);
    SolveOutcome::new(
        Problem::Alpha,
        best.len() as f64,
        upper as f64,
        Certificate::Vertices(VertexSet::new(best)),
        tracker.stats(),
    )
}

/// The graph on the edges of `g` (vertex `i` is `g.edges()[i]`) in which two
/// edges are adjacent iff some triangle contains both.
///
/// Two edges of one triangle always share a vertex, so a set of edges
/// takes at most one edge from every triangle exactly when no two of its
/// members lie in a common triangle: triangle-independent edge sets of `g`
/// are precisely the independent sets of this graph.
pub fn conflict_graph(g: &Graph) -> Graph {
    let mut b = GraphBuilder::new(g.size());
    for tri in enumerate_triangles(g) {
        let [x, y, z] = tri
            .edges()
            .map(|e| g.edge_position(e).expect("triangle edge present"));
        for (p, q) in [(x, y), (x, z), (y, z)] {
            b.add_edge(p, q).expect("distinct edges");
        }
    }
    b.build()
}

/// `α₁(G)` with a certified interval.
pub fn alpha1_exact(g: &Graph, budget: Budget) -> SolveOutcome {
    let conflict = conflict_graph(g);
    let (best, upper, tracker) = max_independent(&conflict, budget);
    let edges = EdgeSet::new(best.iter().map(|&i| g.edges()[i]).collect());
    SolveOutcome::new(
        Problem::Alpha1,
        edges.len() as f64,
        upper as f64,
        Certificate::Edges(edges),
        tracker.stats(),
    )
}
