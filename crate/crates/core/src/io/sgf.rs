//! Signed-graph files.
//!
//! ```text
//! n m k
//! u v s      (m lines, 1-based, s = 1 means the arc u → v, s = -1 means v → u)
//! ```
//!
//! The writer emits edges with `u < v` in lexicographic order and signs as
//! `1` / `-1`. The reader also accepts `+1`, arcs listed with `u > v`, and
//! any edge order, so only files already in that normal form round-trip
//! byte for byte.

use super::{parse_usize, tokens};
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::oriented::Orientation;

/// An orientation together with the degree it is meant to be checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    pub orientation: Orientation,
    pub k: usize,
}

pub fn write(o: &Orientation, k: usize) -> String {
    let edges = o.signed_edges();
    let mut out = format!("{} {} {}\n", o.order(), edges.len(), k);
    for (u, v, s) in edges {
        out.push_str(&format!("{} {} {}\n", u + 1, v + 1, s));
    }
    out
}

/// Serializes with `k` taken as the maximum degree.
pub fn write_default(o: &Orientation) -> String {
    write(o, o.graph().max_degree())
}

pub fn parse(text: &str) -> Result<SignedGraph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, 1, "missing `n m k` header"))?;
    let ht = tokens(header);
    if ht.len() != 3 {
        return Err(Error::parse(hl + 1, 1, "header must be `n m k`"));
    }
    let n = parse_usize(ht[0].1, hl + 1, ht[0].0, "vertex count")?;
    let m = parse_usize(ht[1].1, hl + 1, ht[1].0, "edge count")?;
    let k = parse_usize(ht[2].1, hl + 1, ht[2].0, "degree")?;

    let mut graph = UndirectedGraph::empty(n);
    let mut arcs = Vec::with_capacity(m);
    for (i, line) in lines {
        let line_no = i + 1;
        let t = tokens(line);
        if t.len() != 3 {
            return Err(Error::parse(line_no, 1, "edge lines must be `u v s`"));
        }
        let mut ends = [0; 2];
        for (slot, &(c, tok)) in ends.iter_mut().zip(&t[..2]) {
            let x = parse_usize(tok, line_no, c, "vertex label")?;
            if x == 0 || x > n {
                return Err(Error::parse(line_no, c, format!("vertex {x} outside 1..={n}")));
            }
            *slot = x - 1;
        }
        let (c, tok) = t[2];
        let sign = match tok {
            "1" | "+1" => 1,
            "-1" => -1,
            _ => return Err(Error::parse(line_no, c, format!("invalid sign `{tok}`, expected 1 or -1"))),
        };
        graph
            .try_add_edge(ends[0], ends[1])
            .map_err(|e| Error::parse(line_no, 1, e.to_string()))?;
        arcs.push(if sign > 0 { (ends[0], ends[1]) } else { (ends[1], ends[0]) });
    }
    if arcs.len() != m {
        return Err(Error::parse(
            hl + 1,
            ht[1].0,
            format!("header announces {m} edges, found {}", arcs.len()),
        ));
    }
    let delta = graph.max_degree();
    if m > 0 && delta != k {
        return Err(Error::parse(
            hl + 1,
            ht[2].0,
            format!("header degree k = {k} but the maximum degree is {delta}"),
        ));
    }
    let mut orientation = Orientation::ascending(graph);
    for (a, b) in arcs {
        orientation.set_arc(a, b);
    }
    Ok(SignedGraph { orientation, k })
}
