use serde::Serialize;

use super::{check_inputs, ColourView, CountOptions, VerifyError, DEFAULT_PATH_LIMIT};
use crate::arith::ceil_div_signed;
use crate::colouring::{m_of, weight, EdgeColouring, PairFunction};
use crate::graph::Graph;

/// Exact number of disjoint monochromatic super-paths for every pair, each
/// pair capped at `m_of(G, u, v)`.
pub fn superpath_profile(g: &Graph, phi: &EdgeColouring) -> Result<PairFunction, VerifyError> {
    superpath_profile_with(g, phi, DEFAULT_PATH_LIMIT)
}

pub fn superpath_profile_with(g: &Graph, phi: &EdgeColouring, path_limit: usize) -> Result<PairFunction, VerifyError> {
    check_inputs(g, phi)?;
    if g.n() < 3 {
        return Err(VerifyError::TooFewVertices { need: 3, n: g.n() });
    }
    let view = ColourView::new(g, phi);
    let mut f = PairFunction::zero(g.n());
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let cap = m_of(g, u, v).expect("valid pair") as usize;
            let opts = CountOptions { cap, super_only: true, path_limit, flow_shortcuts: true };
            f.set(u, v, view.count(u, v, &opts)?.count as u32);
        }
    }
    Ok(f)
}

/// Both sides of `e(G) >= ⌈w(f) / (n - 2)⌉ + r - 1` for the exact
/// super-path profile `f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuperpathReport {
    pub holds: bool,
    pub lhs: i64,
    pub rhs: i64,
    pub weight: u64,
    pub colours: usize,
    pub profile: PairFunction,
}

pub fn check_superpath_bound(g: &Graph, phi: &EdgeColouring) -> Result<SuperpathReport, VerifyError> {
    let profile = superpath_profile(g, phi)?;
    let w = weight(&profile);
    let r = phi.colour_count() as i64;
    let lhs = g.edge_count() as i64;
    let rhs = ceil_div_signed(w as i64, g.n() as i64 - 2) + r - 1;
    Ok(SuperpathReport { holds: lhs >= rhs, lhs, rhs, weight: w, colours: phi.colour_count(), profile })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_colour_k4_is_tight() {
        let g = Graph::complete(4);
        let rep = check_superpath_bound(&g, &EdgeColouring::single(&g)).unwrap();
        assert!(rep.profile.iter().all(|(_, _, x)| x == 2));
        assert_eq!((rep.lhs, rep.rhs, rep.weight), (6, 6, 12));
        assert!(rep.holds);
    }

    #[test]
    fn rainbow_c4() {
        let g = Graph::cycle(4);
        let rep = check_superpath_bound(&g, &EdgeColouring::rainbow(&g)).unwrap();
        assert_eq!((rep.lhs, rep.rhs, rep.weight), (4, 3, 0));
        assert!(rep.holds);
    }

    #[test]
    fn one_colour_c5() {
        let g = Graph::cycle(5);
        let rep = check_superpath_bound(&g, &EdgeColouring::single(&g)).unwrap();
        // adjacent pairs only have the long way round; non-adjacent pairs
        // have both arcs of the cycle
        for (u, v, x) in rep.profile.iter() {
            assert_eq!(x, if g.has_edge(u, v) { 1 } else { 2 });
        }
        assert_eq!((rep.lhs, rep.rhs, rep.weight), (5, 5, 15));
    }

    #[test]
    fn one_colour_cycle_adjacent_pair_goes_the_long_way() {
        for n in 3..9 {
            let g = Graph::cycle(n);
            let f = superpath_profile(&g, &EdgeColouring::single(&g)).unwrap();
            assert_eq!(f.get(0, 1), 1);
        }
    }

    #[test]
    fn rainbow_profile_vanishes() {
        let g = Graph::petersen();
        let f = superpath_profile(&g, &EdgeColouring::rainbow(&g)).unwrap();
        assert_eq!(weight(&f), 0);
    }

    #[test]
    fn needs_three_vertices() {
        let g = Graph::path(2);
        assert!(matches!(superpath_profile(&g, &EdgeColouring::single(&g)), Err(VerifyError::TooFewVertices { .. })));
    }
}
