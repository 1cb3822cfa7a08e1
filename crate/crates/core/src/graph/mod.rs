//! Simple undirected graphs on vertices `0..n`.
//!
//! Adjacency is stored twice: as one bit row per vertex (constant-time
//! queries and word-parallel intersections) and as sorted neighbor lists.
//! Graphs are immutable once built; use [`GraphBuilder`] to assemble one.

mod generators;
pub mod graph6;
mod triangles;

pub use generators::{disjoint_union, gnp, join, StandardGraph};
pub use triangles::{
    count_triangles, enumerate_triangles, is_triangle_free, is_triangular, Triangle,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// An unordered vertex pair stored with `u < v`. Serializes as `[u, v]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "(usize, usize)", try_from = "(usize, usize)")]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl From<Edge> for (usize, usize) {
    fn from(e: Edge) -> Self {
        (e.u, e.v)
    }
}

impl TryFrom<(usize, usize)> for Edge {
    type Error = String;

    fn try_from((a, b): (usize, usize)) -> std::result::Result<Self, String> {
        if a == b {
            Err(format!("self-loop {a}-{b}"))
        } else {
            Ok(Edge::new(a, b))
        }
    }
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a self-loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "self-loop {a}-{b}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    /// Rank of `(u, v)` among all `n(n-1)/2` pairs in lexicographic order.
    pub fn canonical_index(&self, n: usize) -> usize {
        debug_assert!(self.v < n);
        self.u * n - self.u * (self.u + 1) / 2 + (self.v - self.u - 1)
    }

    /// Inverse of [`Edge::canonical_index`].
    pub fn from_canonical_index(index: usize, n: usize) -> Option<Edge> {
        if n < 2 || index >= n * (n - 1) / 2 {
            return None;
        }
        let mut rest = index;
        for u in 0..n - 1 {
            let row = n - u - 1;
            if rest < row {
                return Some(Edge { u, v: u + 1 + rest });
            }
            rest -= row;
        }
        None
    }
}

/// A sorted, duplicate-free set of vertex labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        VertexSet(vertices)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.0 {
            mask[v] = true;
        }
        mask
    }
}

/// A sorted, duplicate-free set of edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new(mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        EdgeSet(edges)
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.0.binary_search(e).is_ok()
    }

    /// Canonical indices, ascending (the lexicographic edge order makes
    /// them ascending automatically).
    pub fn canonical_indices(&self, n: usize) -> Vec<usize> {
        self.0.iter().map(|e| e.canonical_index(n)).collect()
    }
}

/// Mutable adjacency accumulator. Adding an edge twice is a no-op.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            rows: vec![vec![0; words_for(n)]; n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::Parameter(format!("self-loop at vertex {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::Parameter(format!(
                "edge {u}-{v} out of range for {} vertices",
                self.n
            )));
        }
        self.rows[u][v / WORD] |= 1 << (v % WORD);
        self.rows[v][u / WORD] |= 1 << (u % WORD);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.rows[u][v / WORD] &= !(1 << (v % WORD));
            self.rows[v][u / WORD] &= !(1 << (u % WORD));
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u][v / WORD] >> (v % WORD) & 1 == 1
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v]
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        let common: Vec<u64> = self.rows[u]
            .iter()
            .zip(&self.rows[v])
            .map(|(a, b)| a & b)
            .collect();
        iter_bits(&common).collect()
    }

    pub fn has_common_neighbor(&self, u: usize, v: usize) -> bool {
        self.rows[u]
            .iter()
            .zip(&self.rows[v])
            .any(|(a, b)| a & b != 0)
    }

    pub fn build(self) -> Graph {
        let mut neighbors = Vec::with_capacity(self.n);
        let mut edges = Vec::new();
        for (u, row) in self.rows.iter().enumerate() {
            let list: Vec<usize> = iter_bits(row).collect();
            edges.extend(list.iter().filter(|&&v| v > u).map(|&v| Edge { u, v }));
            neighbors.push(list);
        }
        Graph {
            n: self.n,
            rows: self.rows,
            neighbors,
            edges,
        }
    }
}

/// Set-bit positions of one word, ascending.
pub(crate) struct WordBits(pub u64);

impl Iterator for WordBits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words
        .iter()
        .enumerate()
        .flat_map(|(i, &w)| WordBits(w).map(move |b| i * WORD + b))
}

/// Labeled simple graph with vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<Vec<u64>>,
    neighbors: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u][v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v]
    }

    /// All edges in lexicographic (= canonical index) order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Position of `e` in [`Graph::edges`], if present.
    pub fn edge_position(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder {
            n: self.n,
            rows: self.rows.clone(),
        }
    }

    /// `G - X`.
    pub fn without_edges(&self, removed: &EdgeSet) -> Graph {
        let mut b = self.to_builder();
        for e in removed.as_slice() {
            b.remove_edge(e.u, e.v);
        }
        b.build()
    }

    pub fn complement(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    b.add_edge(u, v).expect("in range");
                }
            }
        }
        b.build()
    }

    /// `|E(G[S])|` for the vertex set given as a membership mask.
    pub fn induced_edge_count(&self, members: &[bool]) -> usize {
        self.edges
            .iter()
            .filter(|e| members[e.u] && members[e.v])
            .count()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| self.neighbors[v].is_empty())
            .collect()
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        let s = set.as_slice();
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}
