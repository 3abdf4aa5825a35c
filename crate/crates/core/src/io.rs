//! graph6 (short form) and JSON edge-list encodings.
//!
//! graph6: one byte `n + 63`, then the upper triangle in column order
//! `(0,1), (0,2), (1,2), (0,3), ...` packed six bits per byte, most
//! significant first, zero padded, each byte offset by 63.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators;
use crate::graph::{Graph, MAX_ORDER};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + OFFSET) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + OFFSET) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + OFFSET) as char);
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&head, body) = bytes.split_first().ok_or_else(|| Error::Graph6("empty string".into()))?;
    if head == 126 {
        return Err(Error::Graph6("long-form order header unsupported (n > 62)".into()));
    }
    if !(OFFSET..126).contains(&head) {
        return Err(Error::Graph6(format!("invalid order byte {head}")));
    }
    let n = (head - OFFSET) as usize;
    debug_assert!(n <= MAX_ORDER);
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!("expected {expected} data bytes for n = {n}, got {}", body.len())));
    }
    let mut values = Vec::with_capacity(body.len());
    for &b in body {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::Graph6(format!("invalid data byte {b}")));
        }
        values.push(b - OFFSET);
    }
    let bit = |k: usize| (values[k / 6] >> (5 - k % 6)) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// `{"n": int, "edges": [[u, v], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for EdgeList {
    fn from(g: &Graph) -> Self {
        EdgeList { n: g.n(), edges: g.edges().map(|(u, v)| [u, v]).collect() }
    }
}

impl TryFrom<EdgeList> for Graph {
    type Error = Error;

    fn try_from(e: EdgeList) -> Result<Graph> {
        Graph::new(e.n, e.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

/// Either form, as accepted wherever a graph is read from JSON.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphSource {
    Graph6(String),
    EdgeList(EdgeList),
}

impl GraphSource {
    pub fn to_graph(&self) -> Result<Graph> {
        match self {
            GraphSource::Graph6(s) => parse_graph_text(s),
            GraphSource::EdgeList(e) => e.clone().try_into(),
        }
    }
}

/// Parses a graph given as graph6, JSON edge list, or a family name (`P3`, `C7`, `W8`, ...).
///
/// The forms cannot collide: JSON contains `"`, names contain digits, and
/// neither byte is legal in graph6.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let t = text.trim();
    if t.starts_with('{') && t.contains('"') {
        let e: EdgeList = serde_json::from_str(t).map_err(|e| Error::Parse(format!("edge-list JSON: {e}")))?;
        return e.try_into();
    }
    if let Some(g) = generators::by_name(t) {
        return g;
    }
    parse_graph6(t)
}
