//! Graph ingestion and emission: edge lists and graph6.

use std::collections::HashMap;
use std::fmt::Write as _;

use edgesquare_core::graph::MAX_VERTICES;
use edgesquare_core::Graph;

/// A parse failure with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

/// Parses an edge list: one edge per line as two whitespace-separated
/// vertex names, `#` starts a comment, blank lines are skipped. Vertex ids
/// follow the order of first appearance. Repeated edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        last_line = line_no;
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<(usize, &str)> = tokens_with_columns(body);
        match tokens.len() {
            0 => continue,
            2 => {}
            1 => return Err(parse_error(line_no, tokens[0].0 + tokens[0].1.len() + 1, "expected a second vertex name")),
            _ => return Err(parse_error(line_no, tokens[2].0 + 1, "expected exactly two vertex names")),
        }
        let (ca, a) = tokens[0];
        let (cb, b) = tokens[1];
        if a == b {
            return Err(parse_error(line_no, cb + 1, format!("loop at vertex {a}")));
        }
        let mut id = |col: usize, name: &str| -> Result<usize, ParseError> {
            if let Some(&i) = index.get(name) {
                return Ok(i);
            }
            if names.len() == MAX_VERTICES {
                return Err(parse_error(line_no, col + 1, format!("more than {MAX_VERTICES} vertices")));
            }
            names.push(name.to_string());
            index.insert(name.to_string(), names.len() - 1);
            Ok(names.len() - 1)
        };
        let u = id(ca, a)?;
        let v = id(cb, b)?;
        edges.push((u, v));
    }
    if names.is_empty() {
        return Err(parse_error(last_line.max(1), 1, "no edges"));
    }
    Graph::new(names, &edges).map_err(|e| parse_error(last_line, 1, e.to_string()))
}

/// Tokens with their 0-based character column.
fn tokens_with_columns(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (byte, ch)) in s.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((col, byte)),
            (true, Some((c, b))) => {
                out.push((c, &s[b..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((c, b)) = start {
        out.push((c, &s[b..]));
    }
    out
}

/// Edge-list text for `g`, one `u v` line per edge (ids ascending).
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", g.name(u), g.name(v));
    }
    out
}

/// graph6 encoding of `g` with its vertices compacted to `0..order`.
pub fn to_graph6(g: &Graph) -> String {
    let (g, _) = g.compact();
    let n = g.order();
    let mut out = String::new();
    // orders up to 62 use a single byte; the graph cap is 64
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                x |= 1 << (5 - k);
            }
        }
        out.push((x + 63) as char);
    }
    out
}

/// Decodes one graph6 string; vertices are named `v0, v1, ...`.
pub fn from_graph6(s: &str) -> Result<Graph, ParseError> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let err = |col: usize, msg: &str| parse_error(1, col + 1, msg);
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(pos, "character outside the graph6 range"));
    }
    let (n, body) = match bytes.first() {
        None => return Err(err(0, "empty graph6 string")),
        Some(126) => {
            if bytes.len() < 4 || bytes[1] == 126 {
                return Err(err(1, "unsupported graph6 order"));
            }
            let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &bytes[4..])
        }
        Some(&b) => ((b - 63) as usize, &bytes[1..]),
    };
    if n > MAX_VERTICES {
        return Err(err(0, "graph6 order exceeds the 64-vertex cap"));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if body.len() != needed {
        return Err(err(
            bytes.len(),
            &format!("expected {needed} data bytes for {n} vertices, found {}", body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::unnamed(n, &edges).map_err(|e| err(0, &e.to_string()))
}
