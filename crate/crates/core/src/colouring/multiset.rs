use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{Colour, ColouringError, EdgeColouring};
use crate::graph::{Graph, Vertex};

/// Colours on the edges at a vertex, with multiplicity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ColourMultiset(BTreeMap<Colour, usize>);

impl ColourMultiset {
    pub fn multiplicity(&self, c: Colour) -> usize {
        self.0.get(&c).copied().unwrap_or(0)
    }

    /// Number of distinct colours, i.e. the colour degree.
    pub fn support(&self) -> usize {
        self.0.len()
    }

    /// Total multiplicity, i.e. the degree.
    pub fn len(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Colour, usize)> + '_ {
        self.0.iter().map(|(&c, &m)| (c, m))
    }

    /// `self ⊆ other` counting multiplicity.
    pub fn is_subset(&self, other: &ColourMultiset) -> bool {
        self.iter().all(|(c, m)| other.multiplicity(c) >= m)
    }

    pub fn intersection(&self, other: &ColourMultiset) -> ColourMultiset {
        ColourMultiset(
            self.iter()
                .filter_map(|(c, m)| {
                    let k = m.min(other.multiplicity(c));
                    (k > 0).then_some((c, k))
                })
                .collect(),
        )
    }
}

/// Superscript-style text, `1^2 2^3`; multiplicity one is left bare.
impl fmt::Display for ColourMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, m)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if m == 1 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}^{m}")?;
            }
        }
        Ok(())
    }
}

pub fn colour_multiset(g: &Graph, phi: &EdgeColouring, v: Vertex) -> Result<ColourMultiset, ColouringError> {
    if v >= g.n() {
        return Err(ColouringError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let mut counts = BTreeMap::new();
    for &w in g.neighbours(v) {
        let id = g.edge_id(v, w).expect("neighbour edge exists");
        *counts.entry(phi.colour_of(id)).or_insert(0) += 1;
    }
    Ok(ColourMultiset(counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_with_two_colours() {
        // star K_{1,5}: centre 0, edges 01..05 sorted in that order
        let g = Graph::new(6, (1..6).map(|x| (0, x))).unwrap();
        let phi = EdgeColouring::new(&g, vec![1, 1, 2, 2, 2]).unwrap();
        let c = colour_multiset(&g, &phi, 0).unwrap();
        assert_eq!(c.to_string(), "1^2 2^3");
        assert_eq!((c.multiplicity(1), c.multiplicity(2), c.support(), c.len()), (2, 3, 2, 5));
    }

    #[test]
    fn isolated_and_rainbow() {
        let g = Graph::new(6, (1..5).map(|x| (0, x))).unwrap();
        let rainbow = EdgeColouring::rainbow(&g);
        assert!(colour_multiset(&g, &rainbow, 5).unwrap().is_empty());
        let centre = colour_multiset(&g, &rainbow, 0).unwrap();
        assert_eq!(centre.support(), 4);
        assert!(centre.iter().all(|(_, m)| m == 1));
        assert!(colour_multiset(&g, &rainbow, 6).is_err());
    }

    #[test]
    fn containment_and_intersection() {
        let g = Graph::complete(4);
        let phi = EdgeColouring::new(&g, vec![1, 1, 2, 2, 1, 3]).unwrap();
        let a = colour_multiset(&g, &phi, 0).unwrap(); // 01:1 02:1 03:2
        let b = colour_multiset(&g, &phi, 1).unwrap(); // 01:1 12:2 13:1
        assert_eq!(a.to_string(), "1^2 2");
        assert!(a.is_subset(&b));
        assert_eq!(a.intersection(&b).to_string(), "1^2 2");
    }
}
