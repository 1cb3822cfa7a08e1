//! Exhaustive reference solvers.
//!
//! These never approximate: if the search space `2^m` (edge problems) or
//! `2^n` (vertex problems) exceeds the caller's limit they refuse. The
//! returned certificate is the lexicographically first optimum.
//!
//! Edge problems and `α` walk subsets by increasing size, each size in
//! lexicographic order. Covers are closed upward, so the first feasible
//! subset found is the lexicographically first minimum cover. Independent
//! families are closed downward, so the walk stops at the first size with
//! no feasible subset. `φ_k` is not monotone and is enumerated in full.

use super::{Certificate, Problem, SolveOutcome, SolveStats, PHI_TOLERANCE};
use crate::error::{Error, Result};
use crate::graph::{enumerate_triangles, EdgeSet, Graph, VertexSet};

pub const DEFAULT_ORACLE_LIMIT: u64 = 1 << 20;

/// Visits the `r`-subsets of `0..n` in lexicographic order until `f` returns true.
fn first_combination(n: usize, r: usize, mut f: impl FnMut(u64) -> bool) -> (Option<u64>, u64) {
    let mut visited = 0;
    if r > n {
        return (None, 0);
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        visited += 1;
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << i);
        if f(mask) {
            return (Some(mask), visited);
        }
        // advance to the next combination
        let Some(i) = (0..r).rev().find(|&i| idx[i] < n - r + i) else {
            return (None, visited);
        };
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Exact value by exhaustive enumeration.
pub fn oracle_bruteforce(problem: Problem, g: &Graph, limit: u64) -> Result<SolveOutcome> {
    let (n, m) = (g.order(), g.size());
    let bits = match problem {
        Problem::Tau | Problem::Alpha1 => m,
        Problem::Alpha | Problem::Phi { .. } => n,
    };
    if bits >= 64 || (1u64 << bits) > limit {
        return Err(Error::OracleOverflow { bits, limit });
    }
    if let Problem::Phi { k } = problem {
        if k.is_nan() || k <= 0.0 || !k.is_finite() {
            return Err(Error::Parameter(format!(
                "φ_k needs a finite k > 0, got {k}"
            )));
        }
    }
    let triangles: Vec<u64> = enumerate_triangles(g)
        .iter()
        .map(|t| {
            t.edges()
                .iter()
                .map(|e| 1u64 << g.edge_position(*e).expect("edge present"))
                .fold(0, |a, b| a | b)
        })
        .collect();
    let adjacency: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |a, &u| a | 1 << u))
        .collect();
    let mut visited = 0u64;

    let (value, certificate) = match problem {
        Problem::Tau => {
            let hits_all = |x: u64| triangles.iter().all(|t| t & x != 0);
            let (size, mask) = (0..=m)
                .find_map(|r| {
                    let (found, seen) = first_combination(m, r, hits_all);
                    visited += seen;
                    found.map(|mask| (r, mask))
                })
                .expect("deleting every edge is a cover");
            (size as f64, edge_cert(g, mask))
        }
        Problem::Alpha1 => {
            let ok = |x: u64| triangles.iter().all(|t| (t & x).count_ones() <= 1);
            let (size, mask) = largest_hereditary(m, ok, &mut visited);
            (size as f64, edge_cert(g, mask))
        }
        Problem::Alpha => {
            let ok = |x: u64| members(x).iter().all(|&v| adjacency[v] & x == 0);
            let (size, mask) = largest_hereditary(n, ok, &mut visited);
            (
                size as f64,
                Certificate::Vertices(VertexSet::new(members(mask))),
            )
        }
        Problem::Phi { k } => {
            let mut best = (0.0, Vec::new());
            for mask in 0u64..1 << n {
                visited += 1;
                let inside: u32 = members(mask)
                    .iter()
                    .map(|&v| (adjacency[v] & mask).count_ones())
                    .sum();
                let value = k * mask.count_ones() as f64 - (inside / 2) as f64;
                let set = members(mask);
                if value > best.0 + PHI_TOLERANCE
                    || (value >= best.0 - PHI_TOLERANCE && set < best.1)
                {
                    best = (value, set);
                }
            }
            (best.0, Certificate::Vertices(VertexSet::new(best.1)))
        }
    };
    Ok(SolveOutcome::new(
        problem,
        value,
        value,
        certificate,
        SolveStats {
            nodes: visited,
            seconds: 0.0,
        },
    ))
}

fn largest_hereditary(width: usize, ok: impl Fn(u64) -> bool, visited: &mut u64) -> (usize, u64) {
    let mut best = (0, 0u64);
    for r in 1..=width {
        let (found, seen) = first_combination(width, r, &ok);
        *visited += seen;
        match found {
            Some(mask) => best = (r, mask),
            None => break,
        }
    }
    best
}

fn edge_cert(g: &Graph, mask: u64) -> Certificate {
    Certificate::Edges(EdgeSet::new(
        members(mask).into_iter().map(|i| g.edges()[i]).collect(),
    ))
}
