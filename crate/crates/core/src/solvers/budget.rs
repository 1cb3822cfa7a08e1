use std::time::Instant;

use serde::{Deserialize, Serialize};

/// Search limits. Zero means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_seconds: f64,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_nodes: 0,
        max_seconds: 0.0,
    };

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            max_seconds: 0.0,
        }
    }
}

/// Per-solve node counter and clock.
#[derive(Debug)]
pub(crate) struct Tracker {
    budget: Budget,
    start: Instant,
    pub nodes: u64,
    exhausted: bool,
}

impl Tracker {
    pub fn new(budget: Budget) -> Self {
        Tracker {
            budget,
            start: Instant::now(),
            nodes: 0,
            exhausted: false,
        }
    }

    /// Counts one node; returns `false` once the budget is spent.
    pub fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        let over_nodes = self.budget.max_nodes > 0 && self.nodes > self.budget.max_nodes;
        let over_time = self.budget.max_seconds > 0.0
            && self.nodes.is_multiple_of(1024)
            && self.start.elapsed().as_secs_f64() > self.budget.max_seconds;
        self.exhausted = over_nodes || over_time;
        !self.exhausted
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn stats(&self) -> super::SolveStats {
        super::SolveStats {
            nodes: self.nodes,
            seconds: self.start.elapsed().as_secs_f64(),
        }
    }
}
