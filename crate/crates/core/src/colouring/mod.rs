//! Edge-colourings and the per-colour views the rest of the crate needs.

mod multiset;
mod pairs;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, Vertex};

pub use multiset::{colour_multiset, ColourMultiset};
pub use pairs::{m_of, weight, PairFunction};

/// A colour label; labels in use are always `1..=r`.
pub type Colour = u32;

pub const CSV_HEADER: &str = "u,v,colour";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("colouring has {found} labels but the graph has {expected} edges")]
    LengthMismatch { expected: usize, found: usize },
    #[error("colour labels must be positive")]
    ZeroLabel,
    #[error("colour labels skip {missing}; labels must be exactly 1..={r}")]
    LabelGap { missing: Colour, r: Colour },
    #[error("colour {colour} out of range 1..={r}")]
    ColourOutOfRange { colour: Colour, r: Colour },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("line {line}: {reason}")]
    Csv { line: usize, reason: String },
    #[error("line {line}: {edge} is not an edge of the graph")]
    UnknownEdge { line: usize, edge: Edge },
    #[error("line {line}: edge {edge} coloured twice")]
    DuplicateEdge { line: usize, edge: Edge },
    #[error("edge {0} has no colour")]
    MissingEdge(Edge),
}

/// A total map from edge ids of a graph to colours `1..=r`.
///
/// The colouring does not own its graph; every operation takes the graph it
/// was built for, and construction checks the edge count matches.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColouring {
    labels: Vec<Colour>,
    r: Colour,
}

impl EdgeColouring {
    /// Validates that labels cover exactly `1..=r` for some `r`.
    pub fn new(g: &Graph, labels: Vec<Colour>) -> Result<Self, ColouringError> {
        if labels.len() != g.edge_count() {
            return Err(ColouringError::LengthMismatch { expected: g.edge_count(), found: labels.len() });
        }
        if labels.contains(&0) {
            return Err(ColouringError::ZeroLabel);
        }
        let r = labels.iter().copied().max().unwrap_or(0);
        let mut present = vec![false; r as usize + 1];
        for &c in &labels {
            present[c as usize] = true;
        }
        if let Some(missing) = (1..=r).find(|&c| !present[c as usize]) {
            return Err(ColouringError::LabelGap { missing, r });
        }
        Ok(EdgeColouring { labels, r })
    }

    /// Accepts arbitrary labels (any values) and relabels canonically.
    pub fn compacted(g: &Graph, labels: &[u64]) -> Result<Self, ColouringError> {
        if labels.len() != g.edge_count() {
            return Err(ColouringError::LengthMismatch { expected: g.edge_count(), found: labels.len() });
        }
        let mut map = HashMap::new();
        let canon = labels
            .iter()
            .map(|&l| {
                let next = map.len() as Colour + 1;
                *map.entry(l).or_insert(next)
            })
            .collect();
        Ok(Self::from_canonical(canon))
    }

    /// Labels produced by a caller that already numbers classes in
    /// first-appearance order.
    pub(crate) fn from_canonical(labels: Vec<Colour>) -> Self {
        let r = labels.iter().copied().max().unwrap_or(0);
        debug_assert!(is_canonical(&labels));
        EdgeColouring { labels, r }
    }

    pub fn single(g: &Graph) -> Self {
        EdgeColouring { labels: vec![1; g.edge_count()], r: u32::from(g.edge_count() > 0) }
    }

    pub fn rainbow(g: &Graph) -> Self {
        EdgeColouring { labels: (1..=g.edge_count() as Colour).collect(), r: g.edge_count() as Colour }
    }

    /// Number of colours in use.
    pub fn colour_count(&self) -> usize {
        self.r as usize
    }

    pub fn labels(&self) -> &[Colour] {
        &self.labels
    }

    pub fn colour_of(&self, edge_id: usize) -> Colour {
        self.labels[edge_id]
    }

    pub fn edge_count(&self) -> usize {
        self.labels.len()
    }

    /// Edge ids per colour; index `i` holds colour `i + 1`.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.r as usize];
        for (id, &c) in self.labels.iter().enumerate() {
            out[c as usize - 1].push(id);
        }
        out
    }

    /// Relabels colours `1..=r` by each class's smallest edge.
    pub fn canonical(&self) -> Self {
        let mut map = vec![0; self.r as usize + 1];
        let mut next = 0;
        let labels = self
            .labels
            .iter()
            .map(|&c| {
                if map[c as usize] == 0 {
                    next += 1;
                    map[c as usize] = next;
                }
                map[c as usize]
            })
            .collect();
        EdgeColouring { labels, r: self.r }
    }

    pub fn is_canonical(&self) -> bool {
        is_canonical(&self.labels)
    }

    /// Adds an edge's colour for a graph extended by one edge with id `at`.
    pub fn with_inserted(&self, at: usize, colour: Colour) -> Self {
        let mut labels = self.labels.clone();
        labels.insert(at, colour);
        let r = self.r.max(colour);
        EdgeColouring { labels, r }
    }

    pub fn to_csv(&self, g: &Graph) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for (e, c) in g.edges().iter().zip(&self.labels) {
            out.push_str(&format!("{},{},{}\n", e.u, e.v, c));
        }
        out
    }

    /// Parses `u,v,colour` rows. Labels may be any positive integers and are
    /// canonicalized; every edge of `g` must appear exactly once.
    pub fn from_csv(g: &Graph, text: &str) -> Result<Self, ColouringError> {
        let mut raw: Vec<Option<u64>> = vec![None; g.edge_count()];
        let mut rows = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        match rows.next() {
            Some((_, hdr)) if hdr.replace(' ', "") == CSV_HEADER => {}
            Some((line, _)) => return Err(ColouringError::Csv { line, reason: format!("expected header `{CSV_HEADER}`") }),
            None => {
                if g.edge_count() == 0 {
                    return Ok(Self::single(g));
                }
                return Err(ColouringError::Csv { line: 1, reason: "empty colouring file".into() });
            }
        }
        for (line, row) in rows {
            let fields: Vec<&str> = row.split(',').map(str::trim).collect();
            if fields.len() != 3 {
                return Err(ColouringError::Csv { line, reason: format!("expected 3 fields, found {}", fields.len()) });
            }
            let num = |s: &str| {
                s.parse::<u64>().map_err(|_| ColouringError::Csv { line, reason: format!("`{s}` is not a nonnegative integer") })
            };
            let (a, b, c) = (num(fields[0])?, num(fields[1])?, num(fields[2])?);
            for x in [a, b] {
                if x as usize >= g.n() {
                    return Err(ColouringError::VertexOutOfRange { vertex: x as usize, n: g.n() });
                }
            }
            if a == b {
                return Err(ColouringError::Csv { line, reason: format!("self-loop at {a}") });
            }
            if c == 0 {
                return Err(ColouringError::ZeroLabel);
            }
            let edge = Edge::new(a as usize, b as usize);
            let id = g.edge_id(edge.u, edge.v).ok_or(ColouringError::UnknownEdge { line, edge })?;
            if raw[id].replace(c).is_some() {
                return Err(ColouringError::DuplicateEdge { line, edge });
            }
        }
        let labels = raw
            .iter()
            .enumerate()
            .map(|(id, c)| c.ok_or(ColouringError::MissingEdge(g.edge(id))))
            .collect::<Result<Vec<_>, _>>()?;
        Self::compacted(g, &labels)
    }

    /// Row form used inside JSON reports.
    pub fn rows(&self, g: &Graph) -> Vec<ColouredEdge> {
        g.edges()
            .iter()
            .zip(&self.labels)
            .map(|(e, &colour)| ColouredEdge { u: e.u, v: e.v, colour })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouredEdge {
    pub u: Vertex,
    pub v: Vertex,
    pub colour: Colour,
}

fn is_canonical(labels: &[Colour]) -> bool {
    let mut max = 0;
    for &c in labels {
        if c > max + 1 || c == 0 {
            return false;
        }
        max = max.max(c);
    }
    true
}

/// The spanning subgraph `G_i` of colour-`i` edges.
pub fn colour_class(g: &Graph, phi: &EdgeColouring, colour: Colour) -> Result<Graph, ColouringError> {
    if colour == 0 || colour > phi.r {
        return Err(ColouringError::ColourOutOfRange { colour, r: phi.r });
    }
    Ok(g.spanning_subgraph((0..g.edge_count()).filter(|&id| phi.labels[id] == colour)))
}

/// Splits every colour class into its connected components, each becoming a
/// colour of its own, then relabels canonically.
pub fn normalize(g: &Graph, phi: &EdgeColouring) -> EdgeColouring {
    // union-find over (colour, vertex) via per-colour parent tables
    let mut comp_of_edge = vec![0u64; g.edge_count()];
    for class in phi.classes() {
        let mut parent: HashMap<Vertex, Vertex> = HashMap::new();
        fn find(parent: &mut HashMap<Vertex, Vertex>, x: Vertex) -> Vertex {
            let p = *parent.entry(x).or_insert(x);
            if p == x {
                return x;
            }
            let root = find(parent, p);
            parent.insert(x, root);
            root
        }
        for &id in &class {
            let e = g.edge(id);
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a != b {
                parent.insert(a.max(b), a.min(b));
            }
        }
        for &id in &class {
            let root = find(&mut parent, g.edge(id).u);
            comp_of_edge[id] = (u64::from(phi.labels[id]) << 32) | root as u64;
        }
    }
    EdgeColouring::compacted(g, &comp_of_edge).expect("lengths agree")
}
