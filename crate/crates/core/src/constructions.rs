//! Extremal graphs and colourings: Harary graphs, circulant k-regular
//! bipartite graphs, their unbalanced extension, and the colouring that
//! realises the generic lower bound on `mc_k`.
//!
//! Vertex numbering is canonical: the first class (`A`/`X`) comes first,
//! then the second (`B`/`Y`), each in index order.

use thiserror::Error;

use crate::colouring::{Colour, EdgeColouring};
use crate::graph::{is_k_connected, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error("H is not a spanning subgraph of G")]
    NotSpanningSubgraph,
    #[error("H is not {k}-connected")]
    NotKConnected { k: usize },
}

fn params(ok: bool, msg: impl FnOnce() -> String) -> Result<(), ConstructionError> {
    if ok {
        Ok(())
    } else {
        Err(ConstructionError::Parameters(msg()))
    }
}

/// The Harary graph `H_{n,k}`: `k`-connected on `n` vertices with exactly
/// `⌈kn/2⌉` edges.
///
/// Circulant on `Z_n` joining `i` to `i ± 1, …, i ± ⌊k/2⌋`. For odd `k` and
/// even `n`, each `i` also joins `i + n/2`; for odd `k` and odd `n`, each
/// `0 ≤ i ≤ (n-1)/2` joins `i + (n+1)/2`, so vertex 0 ends with degree `k+1`.
pub fn harary(n: usize, k: usize) -> Result<Graph, ConstructionError> {
    params(k >= 2 && n > k, || format!("harary needs n > k >= 2, got n={n}, k={k}"))?;
    let mut pairs = Vec::new();
    for i in 0..n {
        for d in 1..=k / 2 {
            pairs.push((i, (i + d) % n));
        }
    }
    if k % 2 == 1 {
        if n.is_multiple_of(2) {
            pairs.extend((0..n / 2).map(|i| (i, i + n / 2)));
        } else {
            pairs.extend((0..=(n - 1) / 2).map(|i| (i, (i + n.div_ceil(2)) % n)));
        }
    }
    Ok(Graph::new(n, pairs).expect("offsets are distinct for n > k"))
}

/// The `k`-regular bipartite circulant on `A = {a_0..a_{s-1}}` (vertices
/// `0..s`) and `B = {b_0..b_{s-1}}` (vertices `s..2s`): `a_i` joins
/// `b_i, b_{i+1}, …, b_{i+k-1}`, indices mod `s`.
pub fn regular_bipartite(s: usize, k: usize) -> Result<Graph, ConstructionError> {
    params(k >= 2 && s >= k, || format!("regular_bipartite needs s >= k >= 2, got s={s}, k={k}"))?;
    let pairs = (0..s).flat_map(|i| (0..k).map(move |j| (i, s + (i + j) % s)));
    Ok(Graph::new(2 * s, pairs).expect("window offsets are distinct"))
}

/// `H_{s,t,k}`: the regular core on `X` and the first `s` vertices of `Y`,
/// plus each further `y_j` of `Y` (counting from 0) joined to the cyclic
/// window `a_{j mod s}, …, a_{(j+k-1) mod s}`. `X` is `0..s`, `Y` is `s..s+t`.
pub fn bipartite_harary(s: usize, t: usize, k: usize) -> Result<Graph, ConstructionError> {
    params(k >= 2 && s >= k && t >= s, || {
        format!("bipartite_harary needs t >= s >= k >= 2, got s={s}, t={t}, k={k}")
    })?;
    let core = (0..s).flat_map(|i| (0..k).map(move |j| (i, s + (i + j) % s)));
    let extra = (0..t - s).flat_map(|j| (0..k).map(move |d| ((j + d) % s, 2 * s + j)));
    Ok(Graph::new(s + t, core.chain(extra)).expect("windows are distinct"))
}

/// Colour 1 on every edge of `h`, a fresh colour on every other edge of
/// `g` (in edge order). Uses `e(G) - e(H) + 1` colours.
pub fn lower_bound_colouring(g: &Graph, h: &Graph, k: usize) -> Result<EdgeColouring, ConstructionError> {
    if !g.is_spanning_supergraph_of(h) {
        return Err(ConstructionError::NotSpanningSubgraph);
    }
    if !is_k_connected(h, k) {
        return Err(ConstructionError::NotKConnected { k });
    }
    let mut next: Colour = 1;
    let labels = g
        .edges()
        .iter()
        .map(|e| {
            if h.has_edge(e.u, e.v) {
                1
            } else {
                next += 1;
                next
            }
        })
        .collect();
    Ok(EdgeColouring::new(g, labels).expect("labels 1..=r without gaps"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ceil_div;
    use crate::graph::vertex_connectivity;
    use crate::verify::is_monochromatic_k_connected;

    #[test]
    fn harary_examples() {
        assert_eq!(harary(5, 2).unwrap(), Graph::cycle(5));
        let h = harary(6, 3).unwrap();
        assert_eq!((h.edge_count(), vertex_connectivity(&h)), (9, Ok(3)));
        let h = harary(5, 3).unwrap();
        assert_eq!((h.edge_count(), vertex_connectivity(&h)), (8, Ok(3)));
        assert_eq!(harary(5, 4).unwrap(), Graph::complete(5));
        assert!(harary(3, 3).is_err());
        assert!(harary(5, 1).is_err());
    }

    #[test]
    fn harary_family() {
        for n in 3..=12 {
            for k in 2..n {
                let h = harary(n, k).unwrap();
                assert_eq!(h.edge_count(), ceil_div(k * n, 2), "H({n},{k})");
                assert_eq!(vertex_connectivity(&h), Ok(k), "H({n},{k})");
            }
        }
    }

    #[test]
    fn regular_bipartite_examples() {
        let c6 = regular_bipartite(3, 2).unwrap();
        assert!((0..6).all(|x| c6.degree(x) == 2) && c6.is_connected());
        assert_eq!(c6.edge_count(), 6);
        let g = regular_bipartite(4, 3).unwrap();
        assert_eq!((g.edge_count(), vertex_connectivity(&g)), (12, Ok(3)));
        assert!((0..8).all(|x| g.degree(x) == 3));
        for k in 2..6 {
            assert_eq!(regular_bipartite(k, k).unwrap(), Graph::complete_bipartite(k, k));
        }
        assert!(regular_bipartite(2, 3).is_err());
    }

    #[test]
    fn bipartite_harary_examples() {
        for s in 2..6 {
            for k in 2..=s {
                assert_eq!(bipartite_harary(s, s, k).unwrap(), regular_bipartite(s, k).unwrap());
            }
        }
        let g = bipartite_harary(3, 5, 2).unwrap();
        assert_eq!((g.edge_count(), vertex_connectivity(&g)), (10, Ok(2)));
        assert_eq!(bipartite_harary(3, 4, 3).unwrap(), Graph::complete_bipartite(3, 4));
        assert!(bipartite_harary(4, 3, 2).is_err());
    }

    #[test]
    fn lower_bound_colourings() {
        let k5 = Graph::complete(5);
        let phi = lower_bound_colouring(&k5, &Graph::cycle(5), 2).unwrap();
        assert_eq!(phi.colour_count(), 6);
        assert!(is_monochromatic_k_connected(&k5, &phi, 2).unwrap().ok);

        let k33 = Graph::complete_bipartite(3, 3);
        let c6 = regular_bipartite(3, 2).unwrap();
        let phi = lower_bound_colouring(&k33, &c6, 2).unwrap();
        assert_eq!(phi.colour_count(), 4);
        assert!(is_monochromatic_k_connected(&k33, &phi, 2).unwrap().ok);

        let same = lower_bound_colouring(&k5, &k5, 4).unwrap();
        assert_eq!(same.colour_count(), 1);
    }

    #[test]
    fn lower_bound_colouring_rejections() {
        let c5 = Graph::cycle(5);
        assert_eq!(lower_bound_colouring(&c5, &Graph::complete(5), 2), Err(ConstructionError::NotSpanningSubgraph));
        assert_eq!(lower_bound_colouring(&Graph::complete(5), &Graph::path(5), 2), Err(ConstructionError::NotKConnected { k: 2 }));
        assert_eq!(lower_bound_colouring(&Graph::complete(5), &Graph::complete(4), 2), Err(ConstructionError::NotSpanningSubgraph));
    }
}
