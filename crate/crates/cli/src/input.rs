//! Reading inputs from files or stdin and recognising their format.

use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{Context, Result};
use skewopt::io::{edgelist, graph6, parse_graph, sgf};
use skewopt::UndirectedGraph;

/// Reads `path`, or stdin for `-`.
pub fn read(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Sgf,
    Graph6,
    EdgeList,
}

/// Decides by the first non-blank line: three integers for sgf, two for an
/// edge list, otherwise graph6.
pub fn detect(text: &str) -> Format {
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let numeric: Vec<&str> = first.split_whitespace().collect();
    let all_digits = numeric.iter().all(|t| t.chars().all(|c| c.is_ascii_digit()));
    match numeric.len() {
        3 if all_digits => Format::Sgf,
        2 if all_digits => Format::EdgeList,
        _ => Format::Graph6,
    }
}

pub fn read_graph(path: &Path) -> Result<UndirectedGraph> {
    let text = read(path)?;
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let g = match ext {
        "g6" | "graph6" => graph6::decode(text.lines().next().unwrap_or("")),
        "edges" | "el" => edgelist::parse(&text),
        "sgf" => sgf::parse(&text).map(|s| s.orientation.graph().clone()),
        _ => match detect(&text) {
            Format::Sgf => sgf::parse(&text).map(|s| s.orientation.graph().clone()),
            _ => parse_graph(&text),
        },
    };
    g.with_context(|| format!("parsing {}", path.display()))
}

pub fn read_sgf(path: &Path) -> Result<sgf::SignedGraph> {
    let text = read(path)?;
    sgf::parse(&text).with_context(|| format!("parsing {}", path.display()))
}
