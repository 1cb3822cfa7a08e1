//! Seeded local search for triangle-free graphs with small independence
//! number.
//!
//! 1. Random triangle-free process: visit all pairs in a random order and
//!    add each one that closes no triangle. One pass already gives a
//!    maximal triangle-free graph (blocked pairs stay blocked).
//! 2. Hill climbing: pick two vertices of the largest independent set the
//!    heuristic currently finds, join them, delete one edge of every
//!    triangle this creates, resaturate, and keep the move unless the
//!    heuristic's independent set grew.
//!
//! The heuristic is the best of several randomized min-degree greedy runs,
//! so it only bounds `α` from below; the returned graph gets an exact `α`
//! from [`alpha_exact`] at the end.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{is_triangle_free, words_for, Graph, GraphBuilder, WORD};
use crate::solvers::{alpha_exact, Budget, SolveOutcome};

pub const DEFAULT_EFFORT: u64 = 2000;
const GREEDY_RESTARTS: usize = 6;

#[derive(Clone, Debug)]
pub struct LowAlphaGraph {
    pub graph: Graph,
    pub alpha: SolveOutcome,
    /// Largest independent set the heuristic found on the final graph.
    pub surrogate: usize,
    pub effort: u64,
    pub accepted_moves: u64,
}

fn saturate(b: &mut GraphBuilder, rng: &mut ChaCha8Rng) {
    let n = b.order();
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !b.has_edge(u, v))
        .collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if !b.has_common_neighbor(u, v) {
            b.add_edge(u, v).expect("in range");
        }
    }
}

/// Randomized min-degree greedy; returns the largest set over all restarts.
fn heuristic_independent(b: &GraphBuilder, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let n = b.order();
    let words = words_for(n);
    let mut best = Vec::new();
    for _ in 0..GREEDY_RESTARTS {
        let mut alive = vec![0u64; words];
        for v in 0..n {
            alive[v / WORD] |= 1 << (v % WORD);
        }
        let mut chosen = Vec::new();
        let mut left = n;
        while left > 0 {
            let live_deg = |v: usize| -> u32 {
                b.row(v)
                    .iter()
                    .zip(&alive)
                    .map(|(r, a)| (r & a).count_ones())
                    .sum()
            };
            let candidates: Vec<usize> = (0..n)
                .filter(|&v| alive[v / WORD] >> (v % WORD) & 1 == 1)
                .collect();
            let min = candidates
                .iter()
                .map(|&v| live_deg(v))
                .min()
                .expect("alive vertex");
            let ties: Vec<usize> = candidates
                .into_iter()
                .filter(|&v| live_deg(v) == min)
                .collect();
            let v = ties[rng.gen_range(0..ties.len())];
            chosen.push(v);
            for (a, r) in alive.iter_mut().zip(b.row(v)) {
                *a &= !r;
            }
            alive[v / WORD] &= !(1 << (v % WORD));
            left = alive.iter().map(|w| w.count_ones() as usize).sum();
        }
        if chosen.len() > best.len() {
            best = chosen;
        }
    }
    best.sort_unstable();
    best
}

/// Triangle-free graph on `n` vertices with small `α`, plus its exact `α`
/// (within `budget`). Deterministic for fixed `(n, effort, seed)` when the
/// budget is not hit.
pub fn low_alpha_trifree(n: usize, effort: u64, seed: u64, budget: Budget) -> LowAlphaGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = GraphBuilder::new(n);
    saturate(&mut current, &mut rng);
    let mut witness = heuristic_independent(&current, &mut rng);
    let mut best = (current.clone(), witness.len());
    let mut accepted = 0;
    for _ in 0..effort {
        if witness.len() < 2 {
            break;
        }
        let i = rng.gen_range(0..witness.len());
        let mut j = rng.gen_range(0..witness.len() - 1);
        if j >= i {
            j += 1;
        }
        let (u, v) = (witness[i], witness[j]);
        let mut next = current.clone();
        for w in next.common_neighbors(u, v) {
            if rng.gen::<bool>() {
                next.remove_edge(u, w);
            } else {
                next.remove_edge(v, w);
            }
        }
        next.add_edge(u, v).expect("distinct vertices");
        saturate(&mut next, &mut rng);
        let found = heuristic_independent(&next, &mut rng);
        if found.len() <= witness.len() {
            accepted += 1;
            current = next;
            witness = found;
            if witness.len() < best.1 {
                best = (current.clone(), witness.len());
            }
        }
    }
    let graph = best.0.build();
    debug_assert!(is_triangle_free(&graph));
    let alpha = alpha_exact(&graph, budget);
    LowAlphaGraph {
        graph,
        alpha,
        surrogate: best.1,
        effort,
        accepted_moves: accepted,
    }
}
