//! Text formats: the `n m` edge list and graph6.
//!
//! Both readers normalise vertex labels to `0..n`.

use super::{Graph, Vertex};
use crate::error::GraphError;

/// Edge list: a header line `n m`, then `m` lines `u v` with 0-based
/// endpoints. Lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut graphs = parse_edge_lists(text)?;
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        0 => Err(GraphError::parse(1, "no graph in input")),
        k => Err(GraphError::parse(
            1,
            format!("expected one graph, found {k}"),
        )),
    }
}

/// Several edge lists separated by blank lines.
pub fn parse_edge_lists(text: &str) -> Result<Vec<Graph>, GraphError> {
    let mut out = Vec::new();
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.starts_with('#'))
        .peekable();
    loop {
        while lines.peek().is_some_and(|(_, l)| l.is_empty()) {
            lines.next();
        }
        let Some((lineno, header)) = lines.next() else {
            return Ok(out);
        };
        let [n, m] = parse_pair(lineno, header)?;
        let mut g = Graph::empty(n);
        for k in 0..m {
            let Some((lineno, line)) = lines.next() else {
                return Err(GraphError::parse(
                    lineno,
                    format!("expected {m} edges, got {k}"),
                ));
            };
            let [u, v] = parse_pair(lineno, line)?;
            if u >= n || v >= n {
                return Err(GraphError::parse(
                    lineno,
                    format!("endpoint out of range 0..{n}"),
                ));
            }
            if u == v {
                return Err(GraphError::parse(lineno, format!("self-loop at {u}")));
            }
            if !g.add_edge(u, v)? {
                return Err(GraphError::parse(lineno, format!("duplicate edge {u} {v}")));
            }
        }
        if let Some((lineno, l)) = lines.peek() {
            if !l.is_empty() {
                return Err(GraphError::parse(*lineno, "trailing data after edge list"));
            }
        }
        out.push(g);
    }
}

fn parse_pair(lineno: usize, line: &str) -> Result<[usize; 2], GraphError> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = it
            .next()
            .ok_or_else(|| GraphError::parse(lineno, "expected two integers"))?;
        tok.parse()
            .map_err(|_| GraphError::parse(lineno, format!("not an integer: {tok:?}")))
    };
    let pair = [next()?, next()?];
    if it.next().is_some() {
        return Err(GraphError::parse(lineno, "expected two integers"));
    }
    Ok(pair)
}

/// Edge list text for `g`, after normalising labels.
pub fn to_edge_list(g: &Graph) -> String {
    let (g, _) = g.normalized();
    let mut s = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        s.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    s
}

/// graph6 encoding of `g` (labels normalised first).
pub fn to_graph6(g: &Graph) -> String {
    let (g, _) = g.normalized();
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut word = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | u8::from(g.has_edge(i, j));
            used += 1;
            if used == 6 {
                out.push(word + 63);
                word = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((word << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    parse_graph6_at(1, line)
}

fn parse_graph6_at(lineno: usize, line: &str) -> Result<Graph, GraphError> {
    let s = line.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::parse(lineno, "empty graph6 string"));
    }
    if let Some(b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(GraphError::parse(
            lineno,
            format!("invalid graph6 byte {b:#04x}"),
        ));
    }
    let (n, body) = if bytes[0] != 126 {
        (usize::from(bytes[0] - 63), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(GraphError::parse(lineno, "truncated graph6 size"));
        }
        (decode_size(&bytes[1..4]), &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(GraphError::parse(lineno, "truncated graph6 size"));
        }
        (decode_size(&bytes[2..8]), &bytes[8..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(GraphError::parse(
            lineno,
            format!(
                "graph6 body has {} bytes, expected {}",
                body.len(),
                bits.div_ceil(6)
            ),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

fn decode_size(bytes: &[u8]) -> usize {
    bytes
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63))
}

/// One graph6 string per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, GraphError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| parse_graph6_at(i + 1, l))
        .collect()
}

/// Per-vertex neighbour lists in the order given, one vertex per line:
/// `v: w1 w2 ...`.
pub fn format_adjacency(rows: &[(Vertex, Vec<Vertex>)]) -> String {
    let mut s = String::new();
    for (v, nbrs) in rows {
        s.push_str(&v.to_string());
        s.push(':');
        for w in nbrs {
            s.push(' ');
            s.push_str(&w.to_string());
        }
        s.push('\n');
    }
    s
}

pub fn parse_adjacency(text: &str) -> Result<Vec<(Vertex, Vec<Vertex>)>, GraphError> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| GraphError::parse(i + 1, "expected `v: neighbours`"))?;
        let v = head
            .trim()
            .parse()
            .map_err(|_| GraphError::parse(i + 1, format!("bad vertex {head:?}")))?;
        let nbrs = tail
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| GraphError::parse(i + 1, format!("bad vertex {t:?}")))
            })
            .collect::<Result<Vec<Vertex>, _>>()?;
        rows.push((v, nbrs));
    }
    Ok(rows)
}
