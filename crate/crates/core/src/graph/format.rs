use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Edge, Graph};

/// Largest vertex count representable with a one-byte graph6 header.
const GRAPH6_MAX_N: usize = 62;
const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "g6" | "graph6" => Ok(GraphFormat::Graph6),
            "edges" | "edge-list" | "edgelist" => Ok(GraphFormat::EdgeList),
            other => Err(format!("unknown graph format `{other}` (expected g6 or edges)")),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::Graph6 => "g6",
            GraphFormat::EdgeList => "edges",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("byte {offset}: malformed header: {reason}")]
    MalformedHeader { offset: usize, reason: String },
    #[error("byte {offset}: malformed line: {reason}")]
    MalformedLine { offset: usize, reason: String },
    #[error("byte {offset}: vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { offset: usize, vertex: usize, n: usize },
    #[error("byte {offset}: duplicate edge {edge}")]
    DuplicateEdge { offset: usize, edge: Edge },
    #[error("byte {offset}: self-loop at vertex {vertex}")]
    SelfLoop { offset: usize, vertex: usize },
    #[error("byte {offset}: invalid graph6 character {byte:#04x}")]
    BadCharacter { offset: usize, byte: u8 },
    #[error("byte {offset}: graph6 body has {found} bytes, expected {expected}")]
    BadLength { offset: usize, found: usize, expected: usize },
    #[error("byte {offset}: graph6 padding bits are not zero")]
    NonZeroPadding { offset: usize },
    #[error("byte {offset}: graphs with more than {GRAPH6_MAX_N} vertices are not supported in graph6")]
    TooLarge { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match *self {
            ParseError::MalformedHeader { offset, .. }
            | ParseError::MalformedLine { offset, .. }
            | ParseError::VertexOutOfRange { offset, .. }
            | ParseError::DuplicateEdge { offset, .. }
            | ParseError::SelfLoop { offset, .. }
            | ParseError::BadCharacter { offset, .. }
            | ParseError::BadLength { offset, .. }
            | ParseError::NonZeroPadding { offset }
            | ParseError::TooLarge { offset } => offset,
        }
    }
}

pub fn parse_graph(text: &str, fmt: GraphFormat) -> Result<Graph, ParseError> {
    match fmt {
        GraphFormat::Graph6 => parse_graph6(text),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

/// Canonical serialization. Edge lists end with a newline; graph6 does not.
pub fn serialize_graph(g: &Graph, fmt: GraphFormat) -> String {
    match fmt {
        GraphFormat::Graph6 => to_graph6(g),
        GraphFormat::EdgeList => to_edge_list(g),
    }
}

fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

/// Splits `text` into lines, yielding each line with its starting byte offset.
fn lines_with_offsets(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut offset = 0;
    text.split_inclusive('\n').map(move |raw| {
        let start = offset;
        offset += raw.len();
        (start, raw.trim_end_matches(['\n', '\r']))
    })
}

fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = lines_with_offsets(text).filter(|(_, l)| !l.trim().is_empty());
    let (hdr_off, header) = lines.next().ok_or_else(|| ParseError::MalformedHeader {
        offset: 0,
        reason: "missing vertex count".into(),
    })?;
    let lead = header.len() - header.trim_start().len();
    let n: usize = header.trim().parse().map_err(|_| ParseError::MalformedHeader {
        offset: hdr_off + lead,
        reason: format!("expected a vertex count, found `{}`", header.trim()),
    })?;
    if n == 0 {
        return Err(ParseError::MalformedHeader {
            offset: hdr_off + lead,
            reason: "vertex count must be at least 1".into(),
        });
    }

    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (line_off, line) in lines {
        let mut tokens = Vec::with_capacity(2);
        let mut pos = 0;
        for tok in line.split_whitespace() {
            let at = pos + line[pos..].find(tok).expect("token comes from line");
            pos = at + tok.len();
            tokens.push((line_off + at, tok));
        }
        if tokens.len() != 2 {
            return Err(ParseError::MalformedLine {
                offset: line_off,
                reason: format!("expected two vertex indices, found {} tokens", tokens.len()),
            });
        }
        let mut ends = [0usize; 2];
        for (slot, &(off, tok)) in ends.iter_mut().zip(&tokens) {
            *slot = tok.parse().map_err(|_| ParseError::MalformedLine {
                offset: off,
                reason: format!("`{tok}` is not a vertex index"),
            })?;
            if *slot >= n {
                return Err(ParseError::VertexOutOfRange { offset: off, vertex: *slot, n });
            }
        }
        let [a, b] = ends;
        if a == b {
            return Err(ParseError::SelfLoop { offset: tokens[0].0, vertex: a });
        }
        let edge = Edge::new(a, b);
        if !seen.insert(edge) {
            return Err(ParseError::DuplicateEdge { offset: tokens[0].0, edge });
        }
        edges.push(edge);
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

fn to_graph6(g: &Graph) -> String {
    assert!(g.n() <= GRAPH6_MAX_N, "graph6 output supports at most {GRAPH6_MAX_N} vertices");
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    out
}

fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let trimmed = text.trim_end_matches(['\n', '\r', ' ', '\t']);
    let (base, body) = match trimmed.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    let Some(&first) = body.first() else {
        return Err(ParseError::MalformedHeader { offset: base, reason: "empty input".into() });
    };
    if first == b'~' {
        return Err(ParseError::TooLarge { offset: base });
    }
    if !(63..=126).contains(&first) {
        return Err(ParseError::BadCharacter { offset: base, byte: first });
    }
    let n = usize::from(first - 63);
    if n == 0 {
        return Err(ParseError::MalformedHeader {
            offset: base,
            reason: "graph6 encodes zero vertices".into(),
        });
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[1..];
    if data.len() != expected {
        return Err(ParseError::BadLength { offset: base + 1, found: data.len(), expected });
    }
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::BadCharacter { offset: base + 1 + i, byte: b });
        }
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let pad = expected * 6 - bits;
    if pad > 0 && (bits..bits + pad).any(bit) {
        return Err(ParseError::NonZeroPadding { offset: base + data.len() });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push(Edge { u: i, v: j });
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}
