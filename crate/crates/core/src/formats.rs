//! Edge-list and graph6 readers and writers.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
}

fn at(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::EdgeList { line, message: message.into() }
}

/// Reads `u v` lines. `#` starts a comment; the first non-comment line may
/// be `n <count>` to fix the order (otherwise the largest id plus one).
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_content = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if !seen_content && tokens.len() == 2 && tokens[0] == "n" {
            let n = tokens[1].parse().map_err(|_| at(line_no, format!("bad vertex count `{}`", tokens[1])))?;
            declared = Some(n);
            seen_content = true;
            continue;
        }
        seen_content = true;
        if tokens.len() != 2 {
            return Err(at(line_no, format!("expected `u v`, got `{line}`")));
        }
        let id = |t: &str| t.parse::<usize>().map_err(|_| at(line_no, format!("`{t}` is not a vertex id")));
        let (u, v) = (id(tokens[0])?, id(tokens[1])?);
        if u == v {
            return Err(at(line_no, format!("self-loop at vertex {u}")));
        }
        if let Some(n) = declared {
            if u.max(v) >= n {
                return Err(at(line_no, format!("vertex {} out of range for n = {n}", u.max(v))));
            }
        }
        edges.push((u, v));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::new(n, &edges).map_err(|e: GraphError| at(0, e.to_string()))
}

/// `n <order>` followed by one `u v` line per edge, `u < v`, sorted.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const G6_HEADER: &str = ">>graph6<<";

fn g6_err(msg: impl Into<String>) -> FormatError {
    FormatError::Graph6(msg.into())
}

/// Encodes `g` in graph6, without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 string; an optional `>>graph6<<` header and
/// surrounding whitespace are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let s = text.trim();
    let s = s.strip_prefix(G6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(g6_err(format!("byte {b} outside 63..=126")));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = match bytes {
        [] => return Err(g6_err("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(g6_err("truncated size field"));
            }
            (rest[..6].iter().fold(0, |acc, &b| acc << 6 | six(b)), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(g6_err("truncated size field"));
            }
            (rest[..3].iter().fold(0, |acc, &b| acc << 6 | six(b)), &rest[3..])
        }
        [first, rest @ ..] => (six(*first), rest),
    };
    let total_bits = n * n.saturating_sub(1) / 2;
    let need = total_bits.div_ceil(6);
    if body.len() < need {
        return Err(g6_err(format!("truncated: {n} vertices need {need} data bytes, got {}", body.len())));
    }
    if body.len() > need {
        return Err(g6_err(format!("{} trailing bytes", body.len() - need)));
    }
    let bit = |k: usize| (six(body[k / 6]) >> (5 - k % 6)) & 1 == 1;
    if (total_bits..need * 6).any(bit) {
        return Err(g6_err("nonzero padding bits"));
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
    Graph::new(n, &edges).map_err(|e| g6_err(e.to_string()))
}
