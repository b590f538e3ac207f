//! Plain edge lists: a line `n m`, then `m` lines `u v` with 1-based vertices.

use super::{parse_usize, tokens};
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;

pub fn write(g: &UndirectedGraph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

pub fn parse(text: &str) -> Result<UndirectedGraph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, 1, "missing `n m` header"))?;
    let ht = tokens(header);
    if ht.len() != 2 {
        return Err(Error::parse(hl + 1, 1, "header must be `n m`"));
    }
    let n = parse_usize(ht[0].1, hl + 1, ht[0].0, "vertex count")?;
    let m = parse_usize(ht[1].1, hl + 1, ht[1].0, "edge count")?;
    let mut g = UndirectedGraph::empty(n);
    let mut seen = 0;
    for (i, line) in lines {
        let t = tokens(line);
        if t.len() != 2 {
            return Err(Error::parse(i + 1, 1, "edge lines must be `u v`"));
        }
        let mut ends = [0; 2];
        for (slot, &(c, tok)) in ends.iter_mut().zip(&t) {
            let x = parse_usize(tok, i + 1, c, "vertex label")?;
            if x == 0 || x > n {
                return Err(Error::parse(i + 1, c, format!("vertex {x} outside 1..={n}")));
            }
            *slot = x - 1;
        }
        g.try_add_edge(ends[0], ends[1]).map_err(|e| Error::parse(i + 1, 1, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(hl + 1, ht[1].0, format!("header announces {m} edges, found {seen}")));
    }
    Ok(g)
}
