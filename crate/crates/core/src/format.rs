//! Text encodings of graphs: graph6 lines, a JSON object form and the
//! inline edge-list syntax `0-1,0-2,...`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable with the single-byte graph6 size prefix.
pub const GRAPH6_MAX_ORDER: usize = 62;

/// Encodes `g` as a graph6 line (without trailing newline).
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::param(format!("graph6 short form supports n <= 62, got {n}")));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Decodes one graph6 line. An optional `>>graph6<<` header is accepted.
pub fn from_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Parse("empty graph6 line".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::Parse(format!("invalid graph6 size byte {first}")));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Error::Parse("graph6 line encodes an empty graph".into()));
    }
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::Parse("graph6 long size form is not supported".into()));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(Error::Parse(format!(
            "graph6 body for n={n} needs {} bytes, found {}",
            pairs.div_ceil(6),
            body.len()
        )));
    }
    let mut bits = Vec::with_capacity(body.len() * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse(format!("invalid graph6 byte {b}")));
        }
        let v = b - 63;
        bits.extend((0..6).rev().map(|k| v >> k & 1 == 1));
    }
    if bits[pairs..].iter().any(|&b| b) {
        return Err(Error::Parse("graph6 padding bits must be zero".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// JSON object form `{"n": 4, "edges": [[0,1],[1,2]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.order(),
            edges: g.edges().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(value: GraphJson) -> Result<Graph> {
        let edges: Vec<_> = value.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(value.n, &edges)
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph json is always serializable")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let parsed: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Graph::try_from(parsed)
}

/// Parses `"0-1,0-2,1-2"`. The order is `n` when given, otherwise one more
/// than the largest endpoint.
pub fn parse_edge_list(text: &str, n: Option<usize>) -> Result<Graph> {
    let mut edges = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (a, b) = item
            .split_once('-')
            .ok_or_else(|| Error::Parse(format!("expected a-b, found {item:?}")))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad vertex {s:?}: {e}")))
        };
        edges.push((parse(a)?, parse(b)?));
    }
    let inferred = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(1);
    Graph::from_edges(n.unwrap_or(inferred), &edges)
}
