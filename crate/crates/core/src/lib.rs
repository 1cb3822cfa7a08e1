//! Exact solvers for triangle edge covers, triangle-independent edge sets,
//! independence number and the subset functional `φ_k(S) = k|S| - |E(G[S])|`,
//! together with the two extremal constructions built on them and a
//! verification harness for the inequalities that relate these quantities.

pub mod constructions;
pub mod error;
pub mod graph;
pub mod report;
pub mod solvers;
pub mod verify;

pub use error::{Error, Result};
