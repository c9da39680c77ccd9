//! Text encodings: graph6, a plain edge list, and Graphviz DOT.
//!
//! graph6 follows the format used by nauty: the order is packed into one
//! byte `n + 63` (or `~` plus three bytes for larger orders), then the upper
//! triangle of the adjacency matrix is written column by column, pair `(i, j)`
//! for `j = 1..n`, `i = 0..j`, six bits per printable byte, zero padded.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 alphabet")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("malformed graph6 header")]
    BadHeader,
    #[error("graph6 bit section truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after graph6 bit section: expected {expected} bytes, found {found}")]
    TrailingData { expected: usize, found: usize },
    #[error("non-zero padding bits in final graph6 byte")]
    NonZeroPadding,
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl ParseError {
    /// True when the input was well formed but describes a graph larger than
    /// the library supports.
    pub fn is_envelope(&self) -> bool {
        matches!(self, ParseError::Graph(GraphError::TooManyVertices(_)))
    }
}

const GRAPH6_HEADER: &str = ">>graph6<<";

fn header_len(n: usize) -> usize {
    if n <= 62 {
        1
    } else {
        4
    }
}

/// Encodes `g` under its own labeling.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(header_len(n) + (n * (n - 1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` prefix are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    if let Some(offset) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(ParseError::InvalidByte {
            offset,
            byte: bytes[offset],
        });
    }
    let six = |k: usize| (bytes[k] - 63) as usize;
    let (n, body_start) = if bytes[0] != b'~' {
        (six(0), 1)
    } else if bytes.len() >= 2 && bytes[1] == b'~' {
        if bytes.len() < 8 {
            return Err(ParseError::BadHeader);
        }
        ((2..8).fold(0, |acc, k| acc << 6 | six(k)), 8)
    } else {
        if bytes.len() < 4 {
            return Err(ParseError::BadHeader);
        }
        ((1..4).fold(0, |acc, k| acc << 6 | six(k)), 4)
    };
    if n == 0 {
        return Err(ParseError::Graph(GraphError::Empty));
    }
    if n > MAX_VERTICES {
        return Err(ParseError::Graph(GraphError::TooManyVertices(n)));
    }
    if body_start != header_len(n) {
        // long header used for a small order: legal elsewhere, not canonical here
        return Err(ParseError::BadHeader);
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < expected {
        return Err(ParseError::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(ParseError::TrailingData {
            expected,
            found: body.len(),
        });
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let bit = (body[k / 6] - 63) >> (5 - k % 6) & 1;
            if bit == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let pad = 6 - nbits % 6;
        if (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(ParseError::NonZeroPadding);
        }
    }
    Ok(Graph::from_rows(rows)?)
}

/// `"n m"` followed by one `"u v"` line per edge, `u < v`, sorted.
pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let err = |line: usize, message: &str| ParseError::EdgeList {
        line,
        message: message.to_string(),
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or(ParseError::Empty)?;
    let pair = |lineno: usize, l: &str| -> Result<(usize, usize), ParseError> {
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(err(lineno, "expected two non-negative integers")),
        }
    };
    let (n, m) = pair(hl, header)?;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let mut edges = Vec::with_capacity(m);
    let mut last = hl;
    for (lineno, l) in lines {
        if edges.len() == m {
            return Err(err(lineno, "more edges than declared in header"));
        }
        let (u, v) = pair(lineno, l)?;
        if u >= n || v >= n {
            return Err(err(lineno, "vertex out of range"));
        }
        if u == v {
            return Err(err(lineno, "self-loop"));
        }
        edges.push((u.min(v), u.max(v)));
        last = lineno;
    }
    if edges.len() < m {
        return Err(err(last, "fewer edges than declared in header"));
    }
    let mut sorted = edges.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(err(hl, "duplicate edge"));
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// Reads either a graph6 line or an edge list, deciding by the first line.
pub fn parse_any(text: &str) -> Result<Graph, ParseError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        None => Err(ParseError::Empty),
        Some(l) if l.split_whitespace().count() == 2 => parse_edge_list(text),
        Some(l) => parse_graph6(l),
    }
}

/// Undirected DOT, nodes in index order then edges sorted by endpoints.
/// `labels`, when given, names vertex `v` as `labels[v]`.
pub fn to_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let name = |v: usize| match labels {
        Some(l) => l[v].clone(),
        None => v.to_string(),
    };
    let mut s = String::from("graph {\n");
    for v in 0..g.order() {
        writeln!(s, "  {};", name(v)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(s, "  {} -- {};", name(u), name(v)).unwrap();
    }
    s.push_str("}\n");
    s
}
