use crate::colouring::{Colour, EdgeColouring};
use crate::graph::{Graph, Vertex};

const NONE: u32 = u32::MAX;

/// Per-colour adjacency and component labels for one coloured graph.
pub(crate) struct ColourView<'a> {
    pub g: &'a Graph,
    pub phi: &'a EdgeColouring,
    /// `nbrs[c - 1][x]`: neighbours of `x` along colour-`c` edges, ascending.
    nbrs: Vec<Vec<Vec<Vertex>>>,
    /// `comp[c - 1][x]`: component of `x` in colour `c`, `NONE` when isolated.
    comp: Vec<Vec<u32>>,
}

impl<'a> ColourView<'a> {
    pub fn new(g: &'a Graph, phi: &'a EdgeColouring) -> Self {
        let r = phi.colour_count();
        let mut nbrs = vec![vec![Vec::new(); g.n()]; r];
        for (id, e) in g.edges().iter().enumerate() {
            let c = phi.colour_of(id) as usize - 1;
            nbrs[c][e.u].push(e.v);
            nbrs[c][e.v].push(e.u);
        }
        for per_vertex in &mut nbrs {
            for list in per_vertex.iter_mut() {
                list.sort_unstable();
            }
        }
        let comp = nbrs
            .iter()
            .map(|adj| {
                let mut label = vec![NONE; g.n()];
                let mut next = 0;
                for s in 0..g.n() {
                    if label[s] != NONE || adj[s].is_empty() {
                        continue;
                    }
                    label[s] = next;
                    let mut stack = vec![s];
                    while let Some(x) = stack.pop() {
                        for &y in &adj[x] {
                            if label[y] == NONE {
                                label[y] = next;
                                stack.push(y);
                            }
                        }
                    }
                    next += 1;
                }
                label
            })
            .collect();
        ColourView { g, phi, nbrs, comp }
    }

    pub fn colour_count(&self) -> usize {
        self.nbrs.len()
    }

    pub fn neighbours(&self, c: Colour, x: Vertex) -> &[Vertex] {
        &self.nbrs[c as usize - 1][x]
    }

    /// Colours in which `u` and `v` share a component, ascending. With
    /// `super_only`, both ends also need a colour-`c` neighbour besides each other.
    pub fn linking_colours(&self, u: Vertex, v: Vertex, super_only: bool) -> Vec<Colour> {
        (1..=self.colour_count() as Colour)
            .filter(|&c| {
                let comp = &self.comp[c as usize - 1];
                let linked = comp[u] != NONE && comp[u] == comp[v];
                let escapes = |a: Vertex, b: Vertex| self.neighbours(c, a).iter().any(|&y| y != b);
                linked && (!super_only || (escapes(u, v) && escapes(v, u)))
            })
            .collect()
    }
}
