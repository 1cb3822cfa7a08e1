use serde::{Deserialize, Serialize};

use super::{Edge, Graph, WordBits, WORD};

/// Vertices `a < b < c`, pairwise adjacent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triangle {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl Triangle {
    pub fn edges(&self) -> [Edge; 3] {
        [
            Edge {
                u: self.a,
                v: self.b,
            },
            Edge {
                u: self.a,
                v: self.c,
            },
            Edge {
                u: self.b,
                v: self.c,
            },
        ]
    }
}

/// Common neighbors `w > v` of the edge `uv`, ascending.
fn apexes_above(g: &Graph, u: usize, v: usize) -> impl Iterator<Item = usize> + '_ {
    let (ru, rv) = (g.row(u), g.row(v));
    let first = (v + 1) / WORD;
    let lowest = (v + 1) % WORD;
    (first..ru.len()).flat_map(move |i| {
        let mut w = ru[i] & rv[i];
        if i == first {
            w &= !0u64 << lowest;
        }
        WordBits(w).map(move |b| b + i * WORD)
    })
}

/// Every triangle of `g`, lexicographically sorted.
pub fn enumerate_triangles(g: &Graph) -> Vec<Triangle> {
    let mut out = Vec::new();
    for e in g.edges() {
        out.extend(apexes_above(g, e.u, e.v).map(|c| Triangle { a: e.u, b: e.v, c }));
    }
    out
}

pub fn count_triangles(g: &Graph) -> usize {
    g.edges()
        .iter()
        .map(|e| apexes_above(g, e.u, e.v).count())
        .sum()
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges()
        .iter()
        .all(|e| apexes_above(g, e.u, e.v).next().is_none())
}

/// Every edge lies in a triangle. Vacuously true for edgeless graphs.
pub fn is_triangular(g: &Graph) -> bool {
    g.edges()
        .iter()
        .all(|e| g.row(e.u).iter().zip(g.row(e.v)).any(|(a, b)| a & b != 0))
}
