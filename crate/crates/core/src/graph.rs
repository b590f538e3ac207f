//! Simple undirected graphs stored as adjacency bitsets.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

/// A simple undirected graph on vertices `0..n`.
///
/// Each row of the adjacency matrix is a run of 64-bit words, so common
/// neighbourhoods are a popcount of an AND.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

/// A pair of distinct vertices sharing an odd number of neighbours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PairParityViolation {
    pub u: usize,
    pub v: usize,
    pub common: usize,
}

/// Which of the three clique regimes a graph falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CliqueLevel {
    HasK4,
    HasK3NoK4,
    TriangleFree,
}

impl CliqueLevel {
    pub fn as_str(self) -> &'static str {
        match self {
            CliqueLevel::HasK4 => "HAS_K4",
            CliqueLevel::HasK3NoK4 => "HAS_K3_NO_K4",
            CliqueLevel::TriangleFree => "TRIANGLE_FREE",
        }
    }
}

impl std::str::FromStr for CliqueLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().replace('-', "_").as_str() {
            "HAS_K4" | "K4" => Ok(CliqueLevel::HasK4),
            "HAS_K3_NO_K4" | "K3" => Ok(CliqueLevel::HasK3NoK4),
            "TRIANGLE_FREE" => Ok(CliqueLevel::TriangleFree),
            other => Err(Error::InvalidParameter(format!("unknown clique level `{other}`"))),
        }
    }
}

impl fmt::Display for CliqueLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl UndirectedGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        UndirectedGraph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates (in
    /// either orientation) and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.set(u, v, true);
        Ok(())
    }

    pub(crate) fn set(&mut self, u: usize, v: usize, on: bool) {
        let (wu, bu) = (v / WORD, 1u64 << (v % WORD));
        let (wv, bv) = (u / WORD, 1u64 << (u % WORD));
        if on {
            self.bits[u * self.words + wu] |= bu;
            self.bits[v * self.words + wv] |= bv;
        } else {
            self.bits[u * self.words + wu] &= !bu;
            self.bits[v * self.words + wv] &= !bv;
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &w)| BitIter(w).map(move |b| i * WORD + b))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// `|N(u) ∩ N(v)|`.
    #[inline]
    pub fn common_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, (a, b)) in self.row(u).iter().zip(self.row(v)).enumerate() {
            out.extend(BitIter(a & b).map(|x| i * WORD + x));
        }
        out
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut g = Self::empty(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v], true);
        }
        g
    }

    /// Induced subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.set(i, j, true);
                }
            }
        }
        g
    }

    /// Complement graph.
    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set(u, v, true);
                }
            }
        }
        g
    }

    /// Vertices grouped by connected component, each sorted, components
    /// ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_regular(&self, k: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == k)
    }

    /// Every unordered pair sharing an odd number of neighbours, sorted.
    pub fn even_neighborhood_check(&self) -> Vec<PairParityViolation> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let common = self.common_count(u, v);
                if common % 2 == 1 {
                    out.push(PairParityViolation { u, v, common });
                }
            }
        }
        out
    }

    pub fn has_even_neighborhoods(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.common_count(u, v) % 2 == 0))
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().any(|(u, v)| self.common_count(u, v) > 0)
    }

    pub fn has_k4(&self) -> bool {
        for (u, v) in self.edges() {
            let common = self.common_neighbors(u, v);
            for (i, &a) in common.iter().enumerate() {
                if common[i + 1..].iter().any(|&b| self.has_edge(a, b)) {
                    return true;
                }
            }
        }
        false
    }

    pub fn classify_clique_level(&self) -> CliqueLevel {
        if self.has_k4() {
            CliqueLevel::HasK4
        } else if self.has_triangle() {
            CliqueLevel::HasK3NoK4
        } else {
            CliqueLevel::TriangleFree
        }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let mut g = Self::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set(u + self.n, v + self.n, true);
        }
        g
    }

    /// Cartesian product; vertex `(i, j)` is `i * other.order() + j`.
    pub fn cartesian_product(&self, other: &Self) -> Self {
        let m = other.n;
        let mut g = Self::empty(self.n * m);
        for i in 0..self.n {
            for (a, b) in other.edges() {
                g.set(i * m + a, i * m + b, true);
            }
        }
        for (a, b) in self.edges() {
            for j in 0..m {
                g.set(a * m + j, b * m + j, true);
            }
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set(u, v, true);
            }
        }
        g
    }

    /// The cycle `0-1-…-(n-1)-0`, `n ≥ 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    /// The path on `n` vertices.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 1..n {
            g.set(i - 1, i, true);
        }
        g
    }

    /// The `d`-dimensional hypercube, built as `P2 □ Q_{d-1}`.
    pub fn hypercube(d: usize) -> Self {
        let p2 = Self::path(2);
        let mut q = Self::empty(1);
        for _ in 0..d {
            q = p2.cartesian_product(&q);
        }
        q
    }

    /// `U_n`: cycle `v_0..v_{n-1}` on vertices `0..n`, a copy `u_0..u_{n-1}`
    /// on `n..2n`, and edges `v_i u_{i-1}`, `v_i u_{i+1}` (indices mod `n`).
    pub fn u_graph(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("U_n needs n >= 3, got {n}")));
        }
        let mut edges = Vec::with_capacity(4 * n);
        for i in 0..n {
            let next = (i + 1) % n;
            let prev = (i + n - 1) % n;
            edges.push((i, next));
            edges.push((n + i, n + next));
            edges.push((i, n + prev));
            edges.push((i, n + next));
        }
        Self::from_edges(2 * n, &edges)
    }
}

impl fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UndirectedGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Iterator over the set bit positions of a word.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}
