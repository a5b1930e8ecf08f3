//! Counting internally disjoint monochromatic paths and deciding whether a
//! colouring is monochromatic k-connected.
//!
//! Exact counts come from enumerating every monochromatic `u`-`v` path per
//! colour class and packing pairwise internally disjoint ones by
//! branch-and-bound. Two flow bounds cut the work: the best single colour's
//! Menger number is always achievable, and the sum of per-colour Menger
//! numbers together with [`relaxed_upper_bound`] caps what any packing can
//! reach. When they meet, no enumeration happens.

mod packing;
mod relax;
mod superpath;
mod view;

use serde::Serialize;
use thiserror::Error;

use crate::colouring::{Colour, EdgeColouring};
use crate::graph::flow::DisjointPaths;
use crate::graph::{Graph, Vertex};

pub use relax::relaxed_upper_bound;
pub use superpath::{check_superpath_bound, superpath_profile, SuperpathReport};
pub(crate) use view::ColourView;

/// Default ceiling on the number of `u`-`v` paths enumerated in one colour.
pub const DEFAULT_PATH_LIMIT: usize = 100_000;

/// Largest vertex count the path enumerator handles (internal vertex sets are bitmasks).
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("endpoints must differ (both are {0})")]
    SameVertex(Vertex),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("colouring has {found} edges, graph has {expected}")]
    ColouringMismatch { expected: usize, found: usize },
    #[error("needs at least {need} vertices, graph has {n}")]
    TooFewVertices { need: usize, n: usize },
    #[error("graph has {n} vertices; path enumeration supports at most {MAX_VERTICES}")]
    TooLarge { n: usize },
    #[error("colour {colour} has more than {limit} paths between {u} and {v}")]
    PathLimit { colour: Colour, u: Vertex, v: Vertex, limit: usize },
    #[error("k must be positive")]
    ZeroK,
}

/// Internally disjoint monochromatic paths between one pair of vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathSystem {
    pub endpoints: (Vertex, Vertex),
    pub paths: Vec<Vec<Vertex>>,
    pub colours: Vec<Colour>,
}

impl PathSystem {
    fn empty(u: Vertex, v: Vertex) -> Self {
        PathSystem { endpoints: (u, v), paths: Vec::new(), colours: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Checks every structural invariant against the graph and colouring.
    pub fn validate(&self, g: &Graph, phi: &EdgeColouring) -> Result<(), String> {
        let (u, v) = self.endpoints;
        if self.paths.len() != self.colours.len() {
            return Err("one colour per path required".into());
        }
        let mut used = vec![false; g.n()];
        for (path, &c) in self.paths.iter().zip(&self.colours) {
            if path.len() < 2 || path[0] != u || path[path.len() - 1] != v {
                return Err(format!("{path:?} does not run from {u} to {v}"));
            }
            for w in path.windows(2) {
                match g.edge_id(w[0], w[1]) {
                    Some(id) if phi.colour_of(id) == c => {}
                    Some(_) => return Err(format!("edge {}-{} is not colour {c}", w[0], w[1])),
                    None => return Err(format!("{}-{} is not an edge", w[0], w[1])),
                }
            }
            for &x in &path[1..path.len() - 1] {
                if x == u || x == v || std::mem::replace(&mut used[x], true) {
                    return Err(format!("internal vertex {x} reused"));
                }
            }
        }
        let mut sorted = self.paths.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != self.paths.len() {
            return Err("repeated path".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathCount {
    pub count: usize,
    pub witness: PathSystem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountOptions {
    /// Stop once this many paths are found.
    pub cap: usize,
    /// Only paths with at least two edges.
    pub super_only: bool,
    pub path_limit: usize,
    /// Allow answering from the per-colour flow bounds without enumeration.
    pub flow_shortcuts: bool,
}

impl CountOptions {
    pub fn new(cap: usize, super_only: bool) -> Self {
        CountOptions { cap, super_only, path_limit: DEFAULT_PATH_LIMIT, flow_shortcuts: true }
    }
}

/// Maximum number (capped at `cap`) of internally disjoint monochromatic
/// `u`-`v` paths, with a witness realising it.
pub fn count_disjoint_mono_paths(
    g: &Graph,
    phi: &EdgeColouring,
    u: Vertex,
    v: Vertex,
    cap: usize,
    super_only: bool,
) -> Result<PathCount, VerifyError> {
    count_disjoint_mono_paths_with(g, phi, u, v, &CountOptions::new(cap, super_only))
}

pub fn count_disjoint_mono_paths_with(
    g: &Graph,
    phi: &EdgeColouring,
    u: Vertex,
    v: Vertex,
    opts: &CountOptions,
) -> Result<PathCount, VerifyError> {
    check_inputs(g, phi)?;
    check_pair(g, u, v)?;
    ColourView::new(g, phi).count(u, v, opts)
}

fn check_inputs(g: &Graph, phi: &EdgeColouring) -> Result<(), VerifyError> {
    if phi.edge_count() != g.edge_count() {
        return Err(VerifyError::ColouringMismatch { expected: g.edge_count(), found: phi.edge_count() });
    }
    if g.n() > MAX_VERTICES {
        return Err(VerifyError::TooLarge { n: g.n() });
    }
    Ok(())
}

fn check_pair(g: &Graph, u: Vertex, v: Vertex) -> Result<(), VerifyError> {
    for x in [u, v] {
        if x >= g.n() {
            return Err(VerifyError::VertexOutOfRange { vertex: x, n: g.n() });
        }
    }
    if u == v {
        return Err(VerifyError::SameVertex(u));
    }
    Ok(())
}

impl ColourView<'_> {
    pub(crate) fn count(&self, u: Vertex, v: Vertex, opts: &CountOptions) -> Result<PathCount, VerifyError> {
        let cap = opts.cap;
        if cap == 0 {
            return Ok(PathCount { count: 0, witness: PathSystem::empty(u, v) });
        }
        let colours = self.linking_colours(u, v, opts.super_only);
        if colours.is_empty() {
            return Ok(PathCount { count: 0, witness: PathSystem::empty(u, v) });
        }

        if opts.flow_shortcuts {
            let mut best: Option<(usize, Colour, DisjointPaths)> = None;
            let mut sum = 0;
            for &c in &colours {
                let mut dp = self.colour_flow(u, v, c, opts.super_only);
                let got = dp.run(cap as u32) as usize;
                sum += got;
                if best.as_ref().is_none_or(|(b, _, _)| got > *b) {
                    best = Some((got, c, dp));
                }
            }
            let (got, c, dp) = best.expect("at least one linking colour");
            let mut upper = sum.min(cap);
            if got < upper {
                upper = upper.min(relax::layered_bound(self, u, v, !opts.super_only, upper));
            }
            if got >= upper {
                let mut paths = dp.paths();
                paths.truncate(got);
                let witness = PathSystem { endpoints: (u, v), colours: vec![c; paths.len()], paths };
                return Ok(PathCount { count: got, witness });
            }
        }

        packing::exact_count(self, u, v, &colours, opts)
    }

    fn colour_flow(&self, u: Vertex, v: Vertex, c: Colour, super_only: bool) -> DisjointPaths {
        let phi = self.phi;
        DisjointPaths::new(self.g, u, v, |id| phi.colour_of(id) == c, super_only)
    }
}

/// Result of checking every vertex pair for `k` disjoint monochromatic paths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub k: usize,
    pub ok: bool,
    /// One witness per pair in lexicographic pair order, when requested.
    pub witnesses: Vec<PathSystem>,
    pub failing_pair: Option<FailingPair>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FailingPair {
    pub u: Vertex,
    pub v: Vertex,
    /// Most disjoint monochromatic paths the pair admits (less than `k`).
    pub count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub with_witnesses: bool,
    pub path_limit: usize,
    pub flow_shortcuts: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { with_witnesses: true, path_limit: DEFAULT_PATH_LIMIT, flow_shortcuts: true }
    }
}

/// Whether every pair is joined by `k` disjoint monochromatic paths. Pairs
/// are checked in lexicographic order and the first failure is reported.
pub fn is_monochromatic_k_connected(g: &Graph, phi: &EdgeColouring, k: usize) -> Result<VerifyReport, VerifyError> {
    is_monochromatic_k_connected_with(g, phi, k, &VerifyOptions::default())
}

pub fn is_monochromatic_k_connected_with(
    g: &Graph,
    phi: &EdgeColouring,
    k: usize,
    opts: &VerifyOptions,
) -> Result<VerifyReport, VerifyError> {
    if k == 0 {
        return Err(VerifyError::ZeroK);
    }
    check_inputs(g, phi)?;
    if g.n() < k + 1 {
        return Err(VerifyError::TooFewVertices { need: k + 1, n: g.n() });
    }
    let view = ColourView::new(g, phi);
    let count_opts = CountOptions { cap: k, super_only: false, path_limit: opts.path_limit, flow_shortcuts: opts.flow_shortcuts };
    let mut witnesses = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let res = view.count(u, v, &count_opts)?;
            if res.count < k {
                return Ok(VerifyReport {
                    k,
                    ok: false,
                    witnesses: Vec::new(),
                    failing_pair: Some(FailingPair { u, v, count: res.count }),
                });
            }
            if opts.with_witnesses {
                witnesses.push(res.witness);
            }
        }
    }
    Ok(VerifyReport { k, ok: true, witnesses, failing_pair: None })
}

/// Boolean form used inside searches; skips witness assembly.
pub(crate) fn verifies(g: &Graph, phi: &EdgeColouring, k: usize, path_limit: usize) -> Result<bool, VerifyError> {
    let opts = VerifyOptions { with_witnesses: false, path_limit, flow_shortcuts: true };
    is_monochromatic_k_connected_with(g, phi, k, &opts).map(|r| r.ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(g: &Graph, phi: &EdgeColouring, u: Vertex, v: Vertex, cap: usize, super_only: bool) -> usize {
        let res = count_disjoint_mono_paths(g, phi, u, v, cap, super_only).unwrap();
        res.witness.validate(g, phi).unwrap();
        assert_eq!(res.witness.len(), res.count);
        res.count
    }

    #[test]
    fn one_colour_k4() {
        let g = Graph::complete(4);
        let phi = EdgeColouring::single(&g);
        assert_eq!(count(&g, &phi, 0, 1, 10, false), 3);
        assert_eq!(count(&g, &phi, 0, 1, 10, true), 2);
        assert_eq!(count(&g, &phi, 0, 1, 2, false), 2);
    }

    #[test]
    fn rainbow_c4_opposite_pair() {
        let g = Graph::cycle(4);
        let phi = EdgeColouring::rainbow(&g);
        assert_eq!(count(&g, &phi, 0, 2, 10, false), 0);
        assert_eq!(count(&g, &phi, 0, 1, 10, false), 1);
    }

    #[test]
    fn errors() {
        let g = Graph::complete(4);
        let phi = EdgeColouring::single(&g);
        assert_eq!(count_disjoint_mono_paths(&g, &phi, 2, 2, 3, false), Err(VerifyError::SameVertex(2)));
        assert!(matches!(count_disjoint_mono_paths(&g, &phi, 0, 9, 3, false), Err(VerifyError::VertexOutOfRange { .. })));
        assert_eq!(
            is_monochromatic_k_connected(&g, &phi, 4).unwrap_err(),
            VerifyError::TooFewVertices { need: 5, n: 4 }
        );
    }

    #[test]
    fn path_limit_guardrail() {
        let g = Graph::complete(9);
        let mut labels = vec![1; g.edge_count()];
        labels[0] = 2; // keep a second colour so the flow bounds cannot settle it
        let phi = EdgeColouring::new(&g, labels).unwrap();
        let opts = CountOptions { cap: 8, super_only: false, path_limit: 50, flow_shortcuts: false };
        let err = count_disjoint_mono_paths_with(&g, &phi, 0, 1, &opts).unwrap_err();
        assert!(matches!(err, VerifyError::PathLimit { colour: 1, .. }));
    }

    #[test]
    fn verify_examples() {
        let k5 = Graph::complete(5);
        let report = is_monochromatic_k_connected(&k5, &EdgeColouring::single(&k5), 4).unwrap();
        assert!(report.ok);
        assert_eq!(report.witnesses.len(), 10);
        assert!(report.witnesses.iter().all(|w| w.len() == 4));

        let k4 = Graph::complete(4);
        let report = is_monochromatic_k_connected(&k4, &EdgeColouring::rainbow(&k4), 2).unwrap();
        assert!(!report.ok);
        assert_eq!(report.failing_pair, Some(FailingPair { u: 0, v: 1, count: 1 }));
    }

    #[test]
    fn mixed_colours_need_packing() {
        // K_4 with the 2-path 0-2-1 in colour 2 and 0-3-1 in colour 3:
        // pair (0,1) reaches 3 only by mixing colours.
        let g = Graph::complete(4);
        // edges: 01 02 03 12 13 23
        let phi = EdgeColouring::new(&g, vec![1, 2, 3, 2, 3, 4]).unwrap();
        for shortcuts in [true, false] {
            let opts = CountOptions { flow_shortcuts: shortcuts, ..CountOptions::new(10, false) };
            let res = count_disjoint_mono_paths_with(&g, &phi, 0, 1, &opts).unwrap();
            assert_eq!(res.count, 3);
            res.witness.validate(&g, &phi).unwrap();
            assert_eq!(res.witness.colours, vec![1, 2, 3]);
        }
    }
}
