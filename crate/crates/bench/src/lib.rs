//! Benchmark fixtures shared by the criterion targets.

use monok_core::random::{gnp, rng, uniform_colouring};
use monok_core::{EdgeColouring, Graph};

/// A seeded `G(n, p)` with a uniform colouring over `labels` colours.
pub fn coloured_gnp(seed: u64, n: usize, p: f64, labels: u64) -> (Graph, EdgeColouring) {
    let mut r = rng(seed);
    let g = gnp(&mut r, n, p);
    let phi = uniform_colouring(&mut r, &g, labels);
    (g, phi)
}
