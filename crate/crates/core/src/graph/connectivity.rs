use super::flow::disjoint_path_count;
use super::{Graph, GraphError, Vertex};

/// Largest `k` such that `g` is `k`-connected, or 0 when disconnected.
///
/// Fixes a minimum-degree vertex `v` and takes the minimum local connectivity
/// over `v` against each non-neighbour and over non-adjacent pairs of
/// neighbours of `v`. Any minimum separator either avoids `v`, separating it
/// from some non-neighbour, or contains `v`, in which case `v` has neighbours
/// in two different components.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, GraphError> {
    let n = g.n();
    if n < 2 {
        return Err(GraphError::TooFewVertices { need: 2, n });
    }
    let v = (0..n).min_by_key(|&x| g.degree(x)).expect("n >= 2");
    let mut best = n - 1;
    let mut non_adjacent = vec![true; n];
    non_adjacent[v] = false;
    for &x in g.neighbours(v) {
        non_adjacent[x] = false;
    }
    for w in (0..n).filter(|&w| non_adjacent[w]) {
        best = best.min(local_connectivity(g, v, w, best));
        if best == 0 {
            return Ok(0);
        }
    }
    let nbrs = g.neighbours(v);
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !g.has_edge(x, y) {
                best = best.min(local_connectivity(g, x, y, best));
            }
        }
    }
    Ok(best)
}

/// Number of internally disjoint `s`-`t` paths, counting the edge `st` when
/// present, stopping once `limit` are found.
pub fn local_connectivity(g: &Graph, s: Vertex, t: Vertex, limit: usize) -> usize {
    disjoint_path_count(g, s, t, limit.min(u32::MAX as usize) as u32) as usize
}

/// `|V| >= k + 1` and no separator with fewer than `k` vertices.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if g.n() < k + 1 {
        return false;
    }
    if k == 0 {
        return true;
    }
    if g.min_degree() < k {
        return false;
    }
    vertex_connectivity(g).is_ok_and(|kappa| kappa >= k)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Smallest vertex set whose removal disconnects `g` (or leaves one
    /// vertex), found by trying every subset in increasing size.
    fn brute_force_connectivity(g: &Graph) -> usize {
        let n = g.n();
        for size in 0..n - 1 {
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != size {
                    continue;
                }
                let keep: Vec<usize> = (0..n).filter(|x| mask >> x & 1 == 0).collect();
                let mut seen = vec![false; n];
                let mut stack = vec![keep[0]];
                seen[keep[0]] = true;
                while let Some(x) = stack.pop() {
                    for &y in g.neighbours(x) {
                        if mask >> y & 1 == 0 && !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
                if keep.iter().any(|&x| !seen[x]) {
                    return size;
                }
            }
        }
        n - 1
    }

    #[test]
    fn classical_values() {
        assert_eq!(vertex_connectivity(&Graph::complete(5)), Ok(4));
        assert_eq!(vertex_connectivity(&Graph::cycle(6)), Ok(2));
        assert_eq!(vertex_connectivity(&Graph::petersen()), Ok(3));
        assert_eq!(brute_force_connectivity(&Graph::petersen()), 3);
        assert_eq!(vertex_connectivity(&Graph::path(4)), Ok(1));
        assert_eq!(vertex_connectivity(&Graph::empty(3)), Ok(0));
        assert!(vertex_connectivity(&Graph::empty(1)).is_err());
    }

    #[test]
    fn k_connected_predicate() {
        assert!(is_k_connected(&Graph::complete(4), 3));
        assert!(!is_k_connected(&Graph::complete(4), 4));
        assert!(!is_k_connected(&Graph::cycle(5), 3));
        assert!(is_k_connected(&Graph::cycle(5), 2));
        assert!(!is_k_connected(&Graph::empty(1), 1));
    }

    #[test]
    fn matches_brute_force_on_all_graphs_up_to_six_vertices() {
        for n in 2..=6usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let g = Graph::new(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p)).unwrap();
                let kappa = vertex_connectivity(&g).unwrap();
                assert_eq!(kappa, brute_force_connectivity(&g), "{g:?}");
                assert!(kappa <= g.min_degree());
            }
        }
    }
}
