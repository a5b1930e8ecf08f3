//! Bounds on and exact values of `mc_k(G)` and `h_k(G)`.

mod search;

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::arith::{binomial2, ceil_div, ceil_div_signed};
use crate::colouring::{ColouredEdge, EdgeColouring};
use crate::constructions::lower_bound_colouring;
use crate::graph::{
    all_min_spanning_k_connected, chromatic_number, is_k_connected, min_spanning_k_connected, Graph,
    SpanningBudget, SpanningError,
};
use crate::verify::{VerifyError, DEFAULT_PATH_LIMIT};
use search::{Outcome, PartitionSearch, SearchLimits};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("k must be positive")]
    ZeroK,
    #[error("the edge-count bound needs k >= 2 (use mc1_bounds for k = 1)")]
    KTooSmall,
    #[error("needs more than {k} vertices, graph has {n}")]
    TooFewVertices { k: usize, n: usize },
    #[error("graph is not {k}-connected")]
    NotKConnected { k: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

impl From<SpanningError> for SolverError {
    fn from(e: SpanningError) -> Self {
        match e {
            SpanningError::NotKConnected { k } => SolverError::NotKConnected { k },
            SpanningError::ZeroK => SolverError::ZeroK,
            SpanningError::BudgetExceeded { best_found } => SolverError::BudgetExhausted(format!(
                "minimum spanning subgraph search (best found has {} edges)",
                best_found.edge_count()
            )),
        }
    }
}

/// Resource limits for exact computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest `e(G)` for a full branch-and-bound search.
    pub max_edges: usize,
    /// Largest `e(G)` accepted when the bounds close without search.
    pub max_edges_shortcut: usize,
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
    /// Skip the search when the lower and upper bounds agree.
    pub shortcut_allowed: bool,
    pub path_limit: usize,
    pub spanning: SpanningBudget,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_edges: 12,
            max_edges_shortcut: 20,
            max_nodes: 5_000_000,
            time_limit: None,
            shortcut_allowed: true,
            path_limit: DEFAULT_PATH_LIMIT,
            spanning: SpanningBudget::default(),
        }
    }
}

impl SearchBudget {
    pub fn full_search() -> Self {
        SearchBudget { shortcut_allowed: false, ..Self::default() }
    }
}

/// Where a bound came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// `e(G) - e(H) + 1` from a certified minimum spanning k-connected `H`.
    MinSpanningSubgraph,
    /// Same colouring over an `H` that is k-connected but not certified minimum.
    SpanningSubgraph,
    /// Best colouring found before a search ran out of budget.
    PartialSearch,
    /// `e(G) - ⌈(k·C(n,2) - e(G)) / (n-2)⌉ + 1`.
    EdgeCountFormula,
    /// `e(G) - n + χ(G)` for `k = 1`.
    ChromaticBound,
    /// Every colour on its own.
    EdgeCount,
    /// Exhaustive branch-and-bound.
    Search,
    /// Lower and upper bounds coincide.
    BoundsMeet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: usize,
    pub provenance: Provenance,
}

/// Bounds on `mc_k(G)`, with the exact value and an optimal colouring when
/// the budget allowed computing them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub k: usize,
    pub lower: Bound,
    pub upper: Bound,
    pub exact: Option<Bound>,
    pub witness: Option<EdgeColouring>,
    pub nodes_expanded: u64,
    pub budget_exceeded: bool,
}

/// Serializable view of a [`BoundsReport`] with the witness as rows.
#[derive(Debug, Clone, Serialize)]
pub struct BoundsRecord {
    pub k: usize,
    pub n: usize,
    pub edges: usize,
    pub lower: Bound,
    pub upper: Bound,
    pub exact: Option<Bound>,
    pub witness: Option<Vec<ColouredEdge>>,
    pub nodes_expanded: u64,
    pub budget_exceeded: bool,
}

impl BoundsReport {
    pub fn record(&self, g: &Graph) -> BoundsRecord {
        BoundsRecord {
            k: self.k,
            n: g.n(),
            edges: g.edge_count(),
            lower: self.lower,
            upper: self.upper,
            exact: self.exact,
            witness: self.witness.as_ref().map(|w| w.rows(g)),
            nodes_expanded: self.nodes_expanded,
            budget_exceeded: self.budget_exceeded,
        }
    }

    pub fn exact_value(&self) -> Option<usize> {
        self.exact.map(|b| b.value)
    }
}

/// `e(G) - ⌈(k·C(n,2) - e(G)) / (n - 2)⌉ + 1`, in integers.
pub fn mck_upper_bound(g: &Graph, k: usize) -> Result<usize, SolverError> {
    if k < 2 {
        return Err(SolverError::KTooSmall);
    }
    let n = g.n();
    if n <= k {
        return Err(SolverError::TooFewVertices { k, n });
    }
    let e = g.edge_count() as i64;
    let numerator = (k * binomial2(n)) as i64 - e;
    let value = e - ceil_div_signed(numerator, n as i64 - 2) + 1;
    Ok(value.max(0) as usize)
}

/// `(e - n + 2, e - n + χ(G))` for connected `G`.
pub fn mc1_bounds(g: &Graph) -> Result<(usize, usize), SolverError> {
    if g.n() < 2 {
        return Err(SolverError::TooFewVertices { k: 1, n: g.n() });
    }
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    let chi = chromatic_number(g).map_err(|e| SolverError::BudgetExhausted(e.to_string()))?;
    let base = g.edge_count() + 2 - g.n();
    Ok((base, base + chi - 2))
}

/// The lower bound `e(G) - e(H) + 1` and its witnessing colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBound {
    pub value: usize,
    pub witness: EdgeColouring,
    pub subgraph: Graph,
    /// Whether `subgraph` is certified minimum.
    pub minimum: bool,
}

pub fn mck_lower_bound(g: &Graph, k: usize, budget: &SearchBudget) -> Result<LowerBound, SolverError> {
    check_k_connected(g, k)?;
    let (subgraph, minimum) = match min_spanning_k_connected(g, k, &budget.spanning) {
        Ok(h) => (h, true),
        Err(SpanningError::BudgetExceeded { best_found }) => (best_found, false),
        Err(e) => return Err(e.into()),
    };
    let witness = lower_bound_colouring(g, &subgraph, k).expect("subgraph is spanning and k-connected");
    Ok(LowerBound { value: witness.colour_count(), witness, subgraph, minimum })
}

fn check_k_connected(g: &Graph, k: usize) -> Result<(), SolverError> {
    if k == 0 {
        return Err(SolverError::ZeroK);
    }
    if g.n() <= k {
        return Err(SolverError::TooFewVertices { k, n: g.n() });
    }
    if !is_k_connected(g, k) {
        return Err(SolverError::NotKConnected { k });
    }
    Ok(())
}

fn upper_bound(g: &Graph, k: usize) -> Bound {
    let trivial = Bound { value: g.edge_count(), provenance: Provenance::EdgeCount };
    let candidate = if k >= 2 {
        mck_upper_bound(g, k).ok().map(|value| Bound { value, provenance: Provenance::EdgeCountFormula })
    } else {
        mc1_bounds(g).ok().map(|(_, value)| Bound { value, provenance: Provenance::ChromaticBound })
    };
    match candidate {
        Some(b) if b.value <= trivial.value => b,
        _ => trivial,
    }
}

/// `mc_k(G)` by branch-and-bound over normalized colourings, bracketed by the
/// lower-bound construction and the closed-form upper bound.
///
/// Without the shortcut the search runs from scratch and never consults the
/// upper bound, so its answer is an independent optimality proof. When the
/// budget runs out the report carries bounds only (plus any better colouring
/// the partial search found as the lower bound).
pub fn mck_exact(g: &Graph, k: usize, budget: &SearchBudget) -> Result<BoundsReport, SolverError> {
    check_k_connected(g, k)?;
    let lb = mck_lower_bound(g, k, budget)?;
    let lower = Bound {
        value: lb.value,
        provenance: if lb.minimum { Provenance::MinSpanningSubgraph } else { Provenance::SpanningSubgraph },
    };
    let upper = upper_bound(g, k);
    let mut report = BoundsReport {
        k,
        lower,
        upper,
        exact: None,
        witness: None,
        nodes_expanded: 0,
        budget_exceeded: false,
    };

    if budget.shortcut_allowed && lower.value == upper.value {
        if g.edge_count() > budget.max_edges_shortcut {
            report.budget_exceeded = true;
            return Ok(report);
        }
        report.exact = Some(Bound { value: lower.value, provenance: Provenance::BoundsMeet });
        report.witness = Some(lb.witness);
        return Ok(report);
    }
    if g.edge_count() > budget.max_edges || g.edge_count() > 64 {
        report.budget_exceeded = true;
        return Ok(report);
    }

    let limits = SearchLimits {
        max_nodes: budget.max_nodes,
        deadline: budget.time_limit.map(|t| Instant::now() + t),
        path_limit: budget.path_limit,
    };
    let mut search = PartitionSearch::new(g, k, limits);
    if budget.shortcut_allowed {
        search.seed(&lb.witness);
        search.set_ceiling(upper.value);
    }
    let outcome = search.run()?;
    report.nodes_expanded = search.nodes;
    match outcome {
        Outcome::Complete => {
            let value = search.best_value;
            let mut labels = search.best_labels.take().expect("G itself verifies");
            if budget.shortcut_allowed && value == upper.value {
                // the search may have stopped at the ceiling before seeing
                // every optimum; rerun for the canonical one
                let limits = SearchLimits { max_nodes: budget.max_nodes, deadline: None, path_limit: budget.path_limit };
                let mut ties = PartitionSearch::new(g, k, limits);
                ties.best_value = value;
                if let Ok(Outcome::Complete) = ties.run() {
                    if let Some(canon) = ties.best_labels {
                        labels = canon;
                    }
                }
            }
            report.exact = Some(Bound { value, provenance: Provenance::Search });
            report.witness = Some(EdgeColouring::new(g, labels).expect("canonical labels"));
        }
        Outcome::OutOfBudget => {
            report.budget_exceeded = true;
            if search.best_value > report.lower.value {
                report.lower = Bound { value: search.best_value, provenance: Provenance::PartialSearch };
            }
        }
    }
    Ok(report)
}

/// `h_k(G)`: the largest `mc_k(H)` over all minimum spanning k-connected
/// subgraphs `H` of `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HkValue {
    pub value: usize,
    /// `e(H)` shared by every minimum subgraph.
    pub subgraph_edges: usize,
    pub subgraphs: usize,
}

pub fn h_k_value(g: &Graph, k: usize, budget: &SearchBudget) -> Result<HkValue, SolverError> {
    check_k_connected(g, k)?;
    let all = all_min_spanning_k_connected(g, k, &budget.spanning)?;
    let mut value = 0;
    for h in &all {
        let report = mck_exact(h, k, budget)?;
        let exact = report.exact_value().ok_or_else(|| {
            SolverError::BudgetExhausted(format!("mc_k of a minimum subgraph with {} edges", h.edge_count()))
        })?;
        value = value.max(exact);
    }
    Ok(HkValue { value, subgraph_edges: all[0].edge_count(), subgraphs: all.len() })
}

/// `e(G) - e(H) + h_k(G)`, the conjectured value of `mc_k(G)`.
pub fn conjectured_mck(g: &Graph, hk: &HkValue) -> usize {
    g.edge_count() - hk.subgraph_edges + hk.value
}

/// `C(n,2) - ⌈kn/2⌉ + 1`.
pub fn complete_graph_value(n: usize, k: usize) -> usize {
    binomial2(n) + 1 - ceil_div(k * n, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::harary;
    use crate::verify::is_monochromatic_k_connected;

    fn exact(g: &Graph, k: usize, shortcut: bool) -> BoundsReport {
        let budget = SearchBudget { shortcut_allowed: shortcut, ..SearchBudget::default() };
        let report = mck_exact(g, k, &budget).unwrap();
        let value = report.exact_value().expect("within budget");
        let witness = report.witness.as_ref().unwrap();
        assert_eq!(witness.colour_count(), value);
        assert!(is_monochromatic_k_connected(g, witness, k).unwrap().ok);
        assert!(report.lower.value <= value && value <= report.upper.value);
        report
    }

    #[test]
    fn upper_bound_formula() {
        assert_eq!(mck_upper_bound(&Graph::complete(5), 2), Ok(7));
        assert_eq!(mck_upper_bound(&Graph::cycle(6), 2), Ok(1));
        assert_eq!(mck_upper_bound(&Graph::complete(7), 2), Ok(17));
        assert_eq!(mck_upper_bound(&Graph::cycle(6), 1), Err(SolverError::KTooSmall));
        assert_eq!(mck_upper_bound(&Graph::complete(3), 3), Err(SolverError::TooFewVertices { k: 3, n: 3 }));
    }

    #[test]
    fn complete_graph_specialization() {
        // C(n,2) - ⌈(k-1)n(n-1) / (2(n-2))⌉ + 1
        for n in 3..=14 {
            for k in 2..n {
                let closed = binomial2(n) + 1 - ceil_div((k - 1) * n * (n - 1), 2 * (n - 2));
                assert_eq!(mck_upper_bound(&Graph::complete(n), k), Ok(closed), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn minimum_edge_graphs_have_upper_bound_one() {
        for n in 3..=14 {
            for k in 2..n {
                let h = harary(n, k).unwrap();
                assert_eq!(mck_upper_bound(&h, k), Ok(1), "H({n},{k})");
            }
        }
    }

    #[test]
    fn mc1_examples() {
        assert_eq!(mc1_bounds(&Graph::path(5)), Ok((1, 1)));
        assert_eq!(mc1_bounds(&Graph::complete(5)), Ok((7, 10)));
        assert_eq!(mc1_bounds(&Graph::cycle(5)), Ok((2, 3)));
        assert_eq!(mc1_bounds(&Graph::empty(3)), Err(SolverError::Disconnected));
    }

    #[test]
    fn lower_bounds() {
        let k5 = Graph::complete(5);
        let lb = mck_lower_bound(&k5, 2, &SearchBudget::default()).unwrap();
        assert_eq!(lb.value, 6);
        assert!(is_monochromatic_k_connected(&k5, &lb.witness, 2).unwrap().ok);
        let k33 = Graph::complete_bipartite(3, 3);
        assert_eq!(mck_lower_bound(&k33, 2, &SearchBudget::default()).unwrap().value, 4);
        let c7 = Graph::cycle(7);
        assert_eq!(mck_lower_bound(&c7, 2, &SearchBudget::default()).unwrap().value, 1);
        assert_eq!(
            mck_lower_bound(&c7, 3, &SearchBudget::default()).unwrap_err(),
            SolverError::NotKConnected { k: 3 }
        );
    }

    #[test]
    fn exact_small_values() {
        assert_eq!(exact(&Graph::complete(4), 2, false).exact_value(), Some(3));
        for n in 4..=8 {
            assert_eq!(exact(&Graph::cycle(n), 2, false).exact_value(), Some(1));
        }
        assert_eq!(exact(&Graph::complete_bipartite(2, 3), 2, false).exact_value(), Some(1));
    }

    #[test]
    fn mc1_exact_inside_chromatic_bounds() {
        for g in [Graph::cycle(5), Graph::complete(4), Graph::path(4), Graph::complete_bipartite(2, 3)] {
            let r = exact(&g, 1, false);
            let (lo, hi) = mc1_bounds(&g).unwrap();
            let v = r.exact_value().unwrap();
            assert!(lo <= v && v <= hi, "{g:?}: {lo} <= {v} <= {hi}");
        }
        // mc(C_5) is the lower end: e - n + 2
        assert_eq!(exact(&Graph::cycle(5), 1, false).exact_value(), Some(2));
        // every pair of K_4 is adjacent, so the rainbow colouring works
        assert_eq!(exact(&Graph::complete(4), 1, false).exact_value(), Some(6));
    }

    #[test]
    fn shortcut_and_full_search_agree() {
        for g in [Graph::complete(4), Graph::complete(5), Graph::cycle(5), Graph::complete_bipartite(2, 3)] {
            for k in 1..g.n() {
                if !is_k_connected(&g, k) {
                    continue;
                }
                assert_eq!(exact(&g, k, true).exact_value(), exact(&g, k, false).exact_value(), "{g:?} k={k}");
            }
        }
    }

    #[test]
    fn budget_exhaustion_keeps_bounds() {
        let g = Graph::complete(7);
        let budget = SearchBudget { max_nodes: 5, max_edges: 30, ..SearchBudget::default() };
        let report = mck_exact(&g, 2, &budget).unwrap();
        assert!(report.budget_exceeded);
        assert_eq!(report.exact, None);
        assert_eq!(report.upper.value, 17);
        assert!(report.lower.value >= 15);

        let report = mck_exact(&g, 2, &SearchBudget::default()).unwrap();
        assert!(report.budget_exceeded);
        assert_eq!((report.lower.value, report.upper.value), (15, 17));
    }

    #[test]
    fn h_k_examples() {
        let budget = SearchBudget::default();
        let k33 = Graph::complete_bipartite(3, 3);
        let hk = h_k_value(&k33, 2, &budget).unwrap();
        assert_eq!((hk.value, hk.subgraph_edges), (1, 6));
        let c6 = Graph::cycle(6);
        assert_eq!(h_k_value(&c6, 2, &budget).unwrap().value, exact(&c6, 2, true).exact_value().unwrap());
        let k5 = Graph::complete(5);
        let hk = h_k_value(&k5, 2, &budget).unwrap();
        assert_eq!((hk.value, hk.subgraphs), (1, 12));
        assert_eq!(conjectured_mck(&k5, &hk), 6);
    }
}
