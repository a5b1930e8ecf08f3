//! Seeded instance generators for fuzzing and sweeps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colouring::EdgeColouring;
use crate::graph::{is_k_connected, Graph};

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, pairs.into_iter().filter(|_| rng.gen_bool(p))).expect("pairs are distinct")
}

/// Each edge draws a label uniformly from `1..=labels`; unused labels are
/// then compacted away.
pub fn uniform_colouring(rng: &mut impl Rng, g: &Graph, labels: u64) -> EdgeColouring {
    let raw: Vec<u64> = (0..g.edge_count()).map(|_| rng.gen_range(1..=labels.max(1))).collect();
    EdgeColouring::compacted(g, &raw).expect("one label per edge")
}

/// `base` plus each missing pair independently with probability `p`.
pub fn supergraph(rng: &mut impl Rng, base: &Graph, p: f64) -> Graph {
    let n = base.n();
    let extra: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !base.has_edge(u, v))
        .collect();
    let chosen = extra.into_iter().filter(|_| rng.gen_bool(p));
    Graph::new(n, base.edges().iter().map(|e| (e.u, e.v)).chain(chosen)).expect("no duplicates")
}

/// `base` plus `count` missing pairs accepted by `allowed`, drawn uniformly
/// without replacement (fewer if not enough pairs qualify).
pub fn with_random_edges(
    rng: &mut impl Rng,
    base: &Graph,
    count: usize,
    allowed: impl Fn(usize, usize) -> bool,
) -> Graph {
    let n = base.n();
    let missing: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !base.has_edge(u, v) && allowed(u, v))
        .collect();
    let chosen = missing.choose_multiple(rng, count).copied();
    Graph::new(n, base.edges().iter().map(|e| (e.u, e.v)).chain(chosen)).expect("no duplicates")
}

/// Rejection-samples `G(n, p)` until it is `k`-connected.
pub fn k_connected_gnp(rng: &mut impl Rng, n: usize, p: f64, k: usize, max_tries: usize) -> Option<Graph> {
    (0..max_tries).map(|_| gnp(rng, n, p)).find(|g| is_k_connected(g, k))
}

pub fn permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}
