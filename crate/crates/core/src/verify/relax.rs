use std::collections::HashMap;

use super::{check_inputs, check_pair, ColourView, VerifyError};
use crate::colouring::{Colour, EdgeColouring};
use crate::graph::flow::FlowNetwork;
use crate::graph::{Graph, Vertex};

/// Upper bound on the number of disjoint monochromatic `u`-`v` paths.
///
/// Integral max flow on a colour-layered network: one copy of each vertex
/// per colour, layers meeting only at `u`, `v`, and a unit-capacity gate per
/// internal vertex shared by all its copies. Every family of disjoint
/// monochromatic paths is a feasible flow. The bound is not tight, since a
/// unit of flow may change layer while passing through a gate.
pub fn relaxed_upper_bound(g: &Graph, phi: &EdgeColouring, u: Vertex, v: Vertex) -> Result<usize, VerifyError> {
    check_inputs(g, phi)?;
    check_pair(g, u, v)?;
    let view = ColourView::new(g, phi);
    Ok(layered_bound(&view, u, v, true, g.n()))
}

pub(super) fn layered_bound(view: &ColourView<'_>, u: Vertex, v: Vertex, include_direct: bool, limit: usize) -> usize {
    let g = view.g;
    let mut net = FlowNetwork::with_nodes(2);
    let (source, sink) = (0, 1);
    let mut gates: HashMap<Vertex, (usize, usize)> = HashMap::new();
    let mut layers: HashMap<(Vertex, Colour), (usize, usize)> = HashMap::new();

    let mut layer = |net: &mut FlowNetwork, x: Vertex, c: Colour| -> (usize, usize) {
        if let Some(&pair) = layers.get(&(x, c)) {
            return pair;
        }
        let &mut (gate_in, gate_out) = gates.entry(x).or_insert_with(|| {
            let (a, b) = (net.add_node(), net.add_node());
            net.add_arc(a, b, 1);
            (a, b)
        });
        let (lin, lout) = (net.add_node(), net.add_node());
        net.add_arc(lin, gate_in, 1);
        net.add_arc(gate_out, lout, 1);
        layers.insert((x, c), (lin, lout));
        (lin, lout)
    };

    for (id, e) in g.edges().iter().enumerate() {
        let c = view.phi.colour_of(id);
        for (a, b) in [(e.u, e.v), (e.v, e.u)] {
            if a == v || b == u {
                continue;
            }
            if a == u && b == v {
                if include_direct {
                    net.add_arc(source, sink, 1);
                }
                continue;
            }
            let from = if a == u { source } else { layer(&mut net, a, c).1 };
            let to = if b == v { sink } else { layer(&mut net, b, c).0 };
            net.add_arc(from, to, 1);
        }
    }
    let limit = limit.min(g.degree(u).min(g.degree(v)));
    net.max_flow(source, sink, limit as u32) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::local_connectivity;

    #[test]
    fn one_colour_matches_plain_menger() {
        for g in [Graph::complete(5), Graph::petersen(), Graph::cycle(6)] {
            let phi = EdgeColouring::single(&g);
            for v in 1..g.n() {
                assert_eq!(
                    relaxed_upper_bound(&g, &phi, 0, v).unwrap(),
                    local_connectivity(&g, 0, v, usize::MAX)
                );
            }
        }
    }

    #[test]
    fn rainbow_c4_is_over_approximated() {
        let g = Graph::cycle(4);
        assert_eq!(relaxed_upper_bound(&g, &EdgeColouring::rainbow(&g), 0, 2), Ok(2));
    }

    #[test]
    fn bounded_by_degrees() {
        let g = Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let phi = EdgeColouring::rainbow(&g);
        for u in 0..5 {
            for v in u + 1..5 {
                let b = relaxed_upper_bound(&g, &phi, u, v).unwrap();
                assert!(b <= g.degree(u).min(g.degree(v)));
            }
        }
    }
}
