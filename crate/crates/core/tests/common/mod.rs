//! Reference implementations kept deliberately naive: they share no code
//! with the library beyond reading adjacency and arc signs.

#![allow(dead_code)]

use rand::Rng;
use skewopt::{Orientation, UndirectedGraph};

pub fn dense(o: &Orientation) -> Vec<Vec<i64>> {
    let n = o.order();
    (0..n).map(|u| (0..n).map(|v| o.s(u, v) as i64).collect()).collect()
}

/// `SᵀS` by the textbook triple loop.
pub fn naive_gram(s: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = s.len();
    let mut g = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            for r in 0..n {
                g[i][j] += s[r][i] * s[r][j];
            }
        }
    }
    g
}

pub fn is_scalar(g: &[Vec<i64>], k: i64) -> bool {
    g.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == if i == j { k } else { 0 }))
}

pub fn naive_optimum(o: &Orientation, k: usize) -> bool {
    is_scalar(&naive_gram(&dense(o)), k as i64)
}

fn edge_list(g: &UndirectedGraph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Visits all `2^m` orientations; returns the number that are optimum and
/// up to `keep` of them.
pub fn brute_force_oracle(g: &UndirectedGraph, k: usize, keep: usize) -> (u64, Vec<Orientation>) {
    let n = g.order();
    let edges = edge_list(g);
    let m = edges.len();
    assert!(m <= 30, "oracle limited to 2^30 orientations");
    let regular = (0..n).all(|v| g.degree(v) == k);
    let mut count = 0;
    let mut kept = Vec::new();
    if !regular {
        return (0, kept);
    }
    let mut s = vec![vec![0i64; n]; n];
    for mask in 0u64..1 << m {
        for (i, &(u, v)) in edges.iter().enumerate() {
            let x = if mask >> i & 1 == 0 { 1 } else { -1 };
            s[u][v] = x;
            s[v][u] = -x;
        }
        let ok = (0..n).all(|i| {
            (i + 1..n).all(|j| (0..n).map(|r| s[r][i] * s[r][j]).sum::<i64>() == 0)
        });
        if ok {
            count += 1;
            if kept.len() < keep {
                let arcs: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| if s[u][v] > 0 { (u, v) } else { (v, u) }).collect();
                kept.push(Orientation::from_arcs(n, &arcs).unwrap());
            }
        }
    }
    (count, kept)
}

/// Every pair with an even number of common neighbours, counted naively.
pub fn naive_even_neighborhoods(g: &UndirectedGraph) -> bool {
    let n = g.order();
    (0..n).all(|u| (u + 1..n).all(|v| (0..n).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count() % 2 == 0))
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> UndirectedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    UndirectedGraph::from_edges(n, &edges).unwrap()
}

pub fn random_orientation(rng: &mut impl Rng, g: &UndirectedGraph) -> Orientation {
    Orientation::from_edge_signs(g.clone(), |_, _| if rng.gen_bool(0.5) { 1 } else { -1 })
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

/// Eigenvalue-free energy check: the singular values of `S` are the
/// square roots of the eigenvalues of `SᵀS`, so for an optimum `S` the
/// energy is exactly `n·√k`.
pub fn bound(g: &UndirectedGraph) -> f64 {
    let delta = (0..g.order()).map(|v| g.degree(v)).max().unwrap_or(0);
    g.order() as f64 * (delta as f64).sqrt()
}
