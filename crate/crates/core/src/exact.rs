//! Exact minimum k-tuple (total) dominating sets by depth-first
//! branch-and-bound. Intended as ground truth for small instances.

use crate::domination::Variant;
use crate::graph::{Graph, Vertex, VertexSet};

/// Default cap on explored search nodes.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactOutcome {
    /// Proven minimum with a witness.
    Optimal { size: usize, witness: VertexSet },
    /// Some vertex has fewer than k candidate dominators.
    Infeasible,
    /// The node budget ran out; `incumbent` is the best set seen (an upper
    /// bound only).
    Unknown { nodes: u64, incumbent: VertexSet },
}

impl ExactOutcome {
    pub fn optimum(&self) -> Option<usize> {
        match self {
            ExactOutcome::Optimal { size, .. } => Some(*size),
            _ => None,
        }
    }
}

/// Minimum `|S|` with `|N(v) ∩ S| >= k` for every `v`.
pub fn exact_gamma_total(g: &Graph, k: usize, budget: u64) -> ExactOutcome {
    solve(g, k, Variant::Total, budget)
}

/// Minimum `|S|` with `|N[v] ∩ S| >= k` for every `v`.
pub fn exact_gamma_closed(g: &Graph, k: usize, budget: u64) -> ExactOutcome {
    solve(g, k, Variant::Closed, budget)
}

pub fn exact_gamma(g: &Graph, k: usize, variant: Variant, budget: u64) -> ExactOutcome {
    solve(g, k, variant, budget)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Undecided,
    In,
    Out,
}

struct Search<'a> {
    /// `dominators[v]`: vertices whose selection counts toward `v`, sorted by
    /// descending degree. The relation is symmetric, so this is also the
    /// list of vertices that `v` counts toward.
    dominators: Vec<Vec<Vertex>>,
    status: Vec<Status>,
    demand: Vec<usize>,
    available: Vec<usize>,
    demand_sum: usize,
    chosen: usize,
    max_cover: usize,
    best: VertexSet,
    nodes: u64,
    budget: u64,
    graph: &'a Graph,
}

fn solve(g: &Graph, k: usize, variant: Variant, budget: u64) -> ExactOutcome {
    let n = g.n();
    let dominators: Vec<Vec<Vertex>> = (0..n)
        .map(|v| {
            let mut list = g.neighbors(v).to_vec();
            if variant == Variant::Closed {
                list.push(v);
            }
            list.sort_by_key(|&u| (std::cmp::Reverse(g.neighbors(u).len()), u));
            list
        })
        .collect();
    if dominators.iter().any(|d| d.len() < k) {
        return ExactOutcome::Infeasible;
    }
    let max_cover = dominators.iter().map(Vec::len).max().unwrap_or(0).max(1);
    let mut search = Search {
        available: dominators.iter().map(Vec::len).collect(),
        dominators,
        status: vec![Status::Undecided; n],
        demand: vec![k; n],
        demand_sum: k * n,
        chosen: 0,
        max_cover,
        best: VertexSet::full(n),
        nodes: 0,
        budget,
        graph: g,
    };
    if k == 0 {
        return ExactOutcome::Optimal {
            size: 0,
            witness: VertexSet::new(n),
        };
    }
    if search.branch() {
        ExactOutcome::Optimal {
            size: search.best.len(),
            witness: search.best,
        }
    } else {
        ExactOutcome::Unknown {
            nodes: search.nodes,
            incumbent: search.best,
        }
    }
}

impl Search<'_> {
    /// Explores the subtree; returns false if the budget ran out.
    fn branch(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        if self.demand_sum == 0 {
            if self.chosen < self.best.len() {
                self.best = VertexSet::from_vertices(
                    self.graph.n(),
                    (0..self.graph.n()).filter(|&v| self.status[v] == Status::In),
                )
                .expect("ids are in range");
            }
            return true;
        }
        let max_demand = self.demand.iter().copied().max().unwrap_or(0);
        let by_volume = self.demand_sum.div_ceil(self.max_cover);
        if self.chosen + max_demand.max(by_volume) >= self.best.len() {
            return true;
        }

        // Most constrained unmet vertex: least slack between undecided
        // dominators and remaining demand.
        let target = (0..self.demand.len())
            .filter(|&v| self.demand[v] > 0)
            .min_by_key(|&v| (self.available[v] - self.demand[v], v))
            .expect("demand_sum > 0");
        let pivot = *self.dominators[target]
            .iter()
            .find(|&&u| self.status[u] == Status::Undecided)
            .expect("feasibility keeps an undecided dominator for every unmet vertex");

        let touched = self.include(pivot);
        let finished = self.branch();
        self.undo_include(pivot, &touched);
        if !finished {
            return false;
        }

        let feasible = self.exclude(pivot);
        let finished = !feasible || self.branch();
        self.undo_exclude(pivot);
        finished
    }

    /// Selects `u`; returns the vertices whose demand dropped.
    fn include(&mut self, u: Vertex) -> Vec<Vertex> {
        self.status[u] = Status::In;
        self.chosen += 1;
        let mut touched = Vec::new();
        for i in 0..self.dominators[u].len() {
            let x = self.dominators[u][i];
            self.available[x] -= 1;
            if self.demand[x] > 0 {
                self.demand[x] -= 1;
                self.demand_sum -= 1;
                touched.push(x);
            }
        }
        touched
    }

    fn undo_include(&mut self, u: Vertex, touched: &[Vertex]) {
        for &x in &self.dominators[u] {
            self.available[x] += 1;
        }
        for &x in touched {
            self.demand[x] += 1;
            self.demand_sum += 1;
        }
        self.chosen -= 1;
        self.status[u] = Status::Undecided;
    }

    /// Forbids `u`; returns false if some vertex can no longer be satisfied.
    fn exclude(&mut self, u: Vertex) -> bool {
        self.status[u] = Status::Out;
        let mut feasible = true;
        for &x in &self.dominators[u] {
            self.available[x] -= 1;
            feasible &= self.demand[x] <= self.available[x];
        }
        feasible
    }

    fn undo_exclude(&mut self, u: Vertex) {
        for &x in &self.dominators[u] {
            self.available[x] += 1;
        }
        self.status[u] = Status::Undecided;
    }
}
