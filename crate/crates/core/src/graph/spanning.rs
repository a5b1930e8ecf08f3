use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{is_k_connected, Graph};
use crate::arith::ceil_div;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningBudget {
    pub max_edges: usize,
    pub max_vertices: usize,
    /// Search-tree nodes expanded before giving up.
    pub max_nodes: u64,
}

impl Default for SpanningBudget {
    fn default() -> Self {
        SpanningBudget { max_edges: 24, max_vertices: 10, max_nodes: 20_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpanningError {
    #[error("graph is not {k}-connected")]
    NotKConnected { k: usize },
    #[error("k must be positive")]
    ZeroK,
    /// `best_found` is k-connected and spanning but not certified minimum.
    #[error("search budget exceeded; best spanning subgraph found has {} edges", best_found.edge_count())]
    BudgetExceeded { best_found: Graph },
}

/// Minimum spanning `k`-connected subgraph; ties go to the lexicographically
/// smallest sorted edge list.
pub fn min_spanning_k_connected(g: &Graph, k: usize, budget: &SpanningBudget) -> Result<Graph, SpanningError> {
    let mut found = None;
    run(g, k, budget, &mut |ids| {
        found = Some(g.spanning_subgraph(ids.iter().copied()));
        false
    })?;
    Ok(found.expect("a k-connected graph has a spanning k-connected subgraph"))
}

/// Every minimum spanning `k`-connected subgraph, in lexicographic order.
pub fn all_min_spanning_k_connected(g: &Graph, k: usize, budget: &SpanningBudget) -> Result<Vec<Graph>, SpanningError> {
    let mut found = Vec::new();
    run(g, k, budget, &mut |ids| {
        found.push(g.spanning_subgraph(ids.iter().copied()));
        true
    })?;
    Ok(found)
}

fn run(g: &Graph, k: usize, budget: &SpanningBudget, visit: &mut dyn FnMut(&[usize]) -> bool) -> Result<(), SpanningError> {
    if k == 0 {
        return Err(SpanningError::ZeroK);
    }
    if !is_k_connected(g, k) {
        return Err(SpanningError::NotKConnected { k });
    }
    if g.edge_count() > budget.max_edges || g.n() > budget.max_vertices {
        return Err(SpanningError::BudgetExceeded { best_found: greedy_minimal(g, k) });
    }
    let lower = ceil_div(k * g.n(), 2);
    let mut search = Search::new(g, k, budget.max_nodes);
    for target in lower..=g.edge_count() {
        search.target = target;
        search.hits = 0;
        let mut chosen = Vec::with_capacity(target);
        if search.dfs(0, &mut chosen, visit).is_err() {
            return Err(SpanningError::BudgetExceeded { best_found: greedy_minimal(g, k) });
        }
        if search.hits > 0 {
            return Ok(());
        }
    }
    unreachable!("g itself is k-connected")
}

/// Deletes edges from the highest id down while `k`-connectivity survives.
fn greedy_minimal(g: &Graph, k: usize) -> Graph {
    let mut keep: Vec<bool> = vec![true; g.edge_count()];
    for id in (0..g.edge_count()).rev() {
        keep[id] = false;
        let sub = g.spanning_subgraph((0..g.edge_count()).filter(|&i| keep[i]));
        if !is_k_connected(&sub, k) {
            keep[id] = true;
        }
    }
    g.spanning_subgraph((0..g.edge_count()).filter(|&i| keep[i]))
}

struct OutOfBudget;

struct Search<'g> {
    g: &'g Graph,
    k: usize,
    target: usize,
    chosen_deg: Vec<usize>,
    /// Degree in the edges not yet decided.
    open_deg: Vec<usize>,
    excluded: Vec<bool>,
    nodes: u64,
    max_nodes: u64,
    hits: usize,
    stop: bool,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, k: usize, max_nodes: u64) -> Self {
        Search {
            g,
            k,
            target: 0,
            chosen_deg: vec![0; g.n()],
            open_deg: (0..g.n()).map(|x| g.degree(x)).collect(),
            excluded: vec![false; g.edge_count()],
            nodes: 0,
            max_nodes,
            hits: 0,
            stop: false,
        }
    }

    fn deficit(&self) -> usize {
        self.chosen_deg.iter().map(|&d| self.k.saturating_sub(d)).sum()
    }

    fn dfs(&mut self, next: usize, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> Result<(), OutOfBudget> {
        if self.stop {
            return Ok(());
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(OutOfBudget);
        }
        let slots = self.target - chosen.len();
        if slots == 0 {
            let sub = self.g.spanning_subgraph(chosen.iter().copied());
            if is_k_connected(&sub, self.k) {
                self.hits += 1;
                if !visit(chosen) {
                    self.stop = true;
                }
            }
            return Ok(());
        }
        if self.g.edge_count() - next < slots || self.deficit() > 2 * slots {
            return Ok(());
        }
        let e = self.g.edge(next);

        self.open_deg[e.u] -= 1;
        self.open_deg[e.v] -= 1;

        self.chosen_deg[e.u] += 1;
        self.chosen_deg[e.v] += 1;
        chosen.push(next);
        let res = self.dfs(next + 1, chosen, visit);
        chosen.pop();
        self.chosen_deg[e.u] -= 1;
        self.chosen_deg[e.v] -= 1;
        res?;

        let degrees_ok = [e.u, e.v]
            .iter()
            .all(|&x| self.chosen_deg[x] + self.open_deg[x] >= self.k);
        if degrees_ok && !self.stop {
            self.excluded[next] = true;
            // everything still available must stay k-connected
            let rest = self.g.spanning_subgraph((0..self.g.edge_count()).filter(|&i| !self.excluded[i]));
            let res = if is_k_connected(&rest, self.k) {
                self.dfs(next + 1, chosen, visit)
            } else {
                Ok(())
            };
            self.excluded[next] = false;
            res?;
        }

        self.open_deg[e.u] += 1;
        self.open_deg[e.v] += 1;
        Ok(())
    }
}
