//! The graph6 format: size prefix then the upper triangle of the adjacency
//! matrix column by column, six bits per printable byte (offset 63).

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;

pub const HEADER: &str = ">>graph6<<";

pub fn encode(g: &UndirectedGraph) -> String {
    let n = g.order();
    let mut out = Vec::new();
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn decode(s: &str) -> Result<UndirectedGraph> {
    let s = s.trim();
    let (body, offset) = match s.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (s, 0),
    };
    let bytes = body.as_bytes();
    let col = |i: usize| offset + i + 1;
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(1, col(i), format!("byte {b} outside the graph6 range 63..=126")));
        }
    }
    let value = |range: std::ops::Range<usize>| -> Result<usize> {
        if bytes.len() < range.end {
            return Err(Error::parse(1, col(bytes.len()), "truncated size prefix"));
        }
        Ok(bytes[range].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    let (n, start) = match bytes.first() {
        None => return Err(Error::parse(1, col(0), "empty graph6 string")),
        Some(&126) if bytes.get(1) == Some(&126) => (value(2..8)?, 8),
        Some(&126) => (value(1..4)?, 4),
        Some(&b) => ((b - 63) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if bytes.len() - start != needed {
        return Err(Error::parse(
            1,
            col(start),
            format!("expected {needed} data bytes for n = {n}, found {}", bytes.len() - start),
        ));
    }
    let data = &bytes[start..];
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in bits..needed * 6 {
        if bit(k) {
            return Err(Error::parse(1, col(start + k / 6), "nonzero padding bit"));
        }
    }
    let mut g = UndirectedGraph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.set(i, j, true);
            }
            k += 1;
        }
    }
    Ok(g)
}
