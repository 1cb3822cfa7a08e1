use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

/// Erdős–Rényi `G(n, p)`.
///
/// The stream comes from ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`).
/// Pairs are visited in lexicographic order and each consumes exactly one
/// 53-bit uniform variate `x` in `[0, 1)`; the pair becomes an edge iff
/// `x < p`. The output depends only on `(n, p, seed)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameter(format!(
            "edge probability {p} not in [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let x: f64 = rng.gen();
            if x < p {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

/// `G ∨ H`: disjoint union plus every pair between the two vertex sets.
/// `G` keeps its labels, `H` is shifted by `|V(G)|`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let mut b = union_builder(g, h);
    let shift = g.order();
    for u in 0..g.order() {
        for v in 0..h.order() {
            b.add_edge(u, shift + v).expect("in range");
        }
    }
    b.build()
}

/// `G ⊔ H` with `H` shifted by `|V(G)|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    union_builder(g, h).build()
}

fn union_builder(g: &Graph, h: &Graph) -> GraphBuilder {
    let shift = g.order();
    let mut b = GraphBuilder::new(g.order() + h.order());
    for e in g.edges() {
        b.add_edge(e.u, e.v).expect("in range");
    }
    for e in h.edges() {
        b.add_edge(e.u + shift, e.v + shift).expect("in range");
    }
    b
}

/// Named graph families with canonical labelings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StandardGraph {
    Complete(usize),
    Empty(usize),
    /// First part is `0..a`, second part `a..a+b`.
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    DisjointUnion(Box<StandardGraph>, Box<StandardGraph>),
}

impl StandardGraph {
    pub fn build(&self) -> Result<Graph> {
        Ok(match self {
            StandardGraph::Complete(n) => {
                let mut b = GraphBuilder::new(*n);
                for u in 0..*n {
                    for v in u + 1..*n {
                        b.add_edge(u, v)?;
                    }
                }
                b.build()
            }
            StandardGraph::Empty(n) => Graph::empty(*n),
            StandardGraph::CompleteBipartite(a, b) => join(&Graph::empty(*a), &Graph::empty(*b)),
            StandardGraph::Cycle(n) => {
                if *n < 3 {
                    return Err(Error::Parameter(format!("cycle needs n >= 3, got {n}")));
                }
                Graph::from_edges(*n, (0..*n).map(|i| (i, (i + 1) % n)))?
            }
            StandardGraph::Path(n) => Graph::from_edges(*n, (1..*n).map(|i| (i - 1, i)))?,
            StandardGraph::DisjointUnion(g, h) => disjoint_union(&g.build()?, &h.build()?),
        })
    }
}
