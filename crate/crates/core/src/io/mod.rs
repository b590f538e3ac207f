//! Text formats: graph6, plain edge lists and signed-graph files.
//!
//! All line-oriented formats use 1-based vertex labels on disk.

pub mod edgelist;
pub mod graph6;
pub mod sgf;

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;

/// Parses either graph6 or an edge list, deciding by content: an edge list
/// starts with two decimal integers.
pub fn parse_graph(text: &str) -> Result<UndirectedGraph> {
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let looks_numeric = first.split_whitespace().count() == 2
        && first.split_whitespace().all(|t| t.chars().all(|c| c.is_ascii_digit()));
    if looks_numeric {
        edgelist::parse(text)
    } else {
        graph6::decode(first.trim())
    }
}

pub(crate) fn parse_usize(token: &str, line: usize, column: usize, what: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::parse(line, column, format!("expected {what}, found `{token}`")))
}

/// Splits a line into whitespace-separated tokens with 1-based columns.
pub(crate) fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}
