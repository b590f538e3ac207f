//! Inputs shared by the benchmarks.

use skewopt::constructions::{g12_family, g26_family, PaperMatrix};
use skewopt::UndirectedGraph;

/// Underlying graphs of the explicit 5-regular optimum orientations,
/// labelled by name.
pub fn five_regular_instances() -> Vec<(String, UndirectedGraph)> {
    let mut out: Vec<(String, UndirectedGraph)> = PaperMatrix::ALL
        .iter()
        .map(|pm| (pm.name().to_string(), pm.orientation().graph().clone()))
        .collect();
    for n in [24, 32] {
        out.push((format!("g12_{n}"), g12_family(n).expect("valid order").graph().clone()));
        out.push((format!("g26_{n}"), g26_family(n).expect("valid order").graph().clone()));
    }
    out
}

/// `g` with its vertices shuffled by a fixed multiplicative permutation.
pub fn scrambled(g: &UndirectedGraph) -> UndirectedGraph {
    let n = g.order();
    let step = (1..n).rev().find(|s| gcd(*s, n) == 1).unwrap_or(1);
    let perm: Vec<usize> = (0..n).map(|v| (v * step + 3) % n.max(1)).collect();
    g.relabel(&perm)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
