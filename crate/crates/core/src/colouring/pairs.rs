use serde::Serialize;

use crate::graph::{Graph, GraphError, Vertex};

/// A nonnegative integer on each unordered vertex pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairFunction {
    n: usize,
    values: Vec<u32>,
}

impl PairFunction {
    pub fn zero(n: usize) -> Self {
        PairFunction { n, values: vec![0; n * n.saturating_sub(1) / 2] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(Vertex, Vertex) -> u32) -> Self {
        let mut out = Self::zero(n);
        for u in 0..n {
            for v in u + 1..n {
                out.set(u, v, f(u, v));
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn index(&self, a: Vertex, b: Vertex) -> usize {
        assert!(a != b && a < self.n && b < self.n, "pair ({a}, {b}) invalid for n = {}", self.n);
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        // pairs (0,1),(0,2),..,(0,n-1),(1,2),..
        u * (2 * self.n - u - 1) / 2 + (v - u - 1)
    }

    pub fn get(&self, a: Vertex, b: Vertex) -> u32 {
        self.values[self.index(a, b)]
    }

    pub fn set(&mut self, a: Vertex, b: Vertex, value: u32) {
        let i = self.index(a, b);
        self.values[i] = value;
    }

    /// `(u, v, f(u, v))` for `u < v`, in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Vertex, u32)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).map(move |v| (u, v, self.get(u, v))))
    }
}

/// Sum of `f` over all unordered pairs.
pub fn weight(f: &PairFunction) -> u64 {
    f.values.iter().map(|&x| u64::from(x)).sum()
}

/// `min(deg u, deg v)`, less one when `uv` is an edge: the most disjoint
/// super-paths any colouring can give the pair.
pub fn m_of(g: &Graph, u: Vertex, v: Vertex) -> Result<u32, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(GraphError::SelfLoop(u));
    }
    let m = g.degree(u).min(g.degree(v)) as u32;
    Ok(if g.has_edge(u, v) { m - 1 } else { m })
}
