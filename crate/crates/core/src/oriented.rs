//! Orientations, skew-adjacency matrices and the optimality test.
//!
//! An orientation of `G` is optimum for degree `k` exactly when its
//! skew-adjacency matrix `S` satisfies `SᵀS = kI`. That test is done in
//! exact integer arithmetic; only [`skew_energy`] touches floating point.

use std::collections::VecDeque;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::matrix::IntMatrix;

/// An assignment of a direction to every edge of an undirected graph.
///
/// Stored as the dense skew-adjacency matrix: `s[u][v] = 1` for an arc
/// `u → v`, `-1` for `v → u`, `0` for non-edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    graph: UndirectedGraph,
    s: Vec<i8>,
}

impl Orientation {
    /// Orients every edge from its smaller to its larger endpoint.
    pub fn ascending(graph: UndirectedGraph) -> Self {
        Self::from_edge_signs(graph, |_, _| 1)
    }

    /// `sign(u, v)` with `u < v` gives `+1` for `u → v` and `-1` for `v → u`.
    pub fn from_edge_signs(graph: UndirectedGraph, mut sign: impl FnMut(usize, usize) -> i8) -> Self {
        let n = graph.order();
        let mut s = vec![0i8; n * n];
        for (u, v) in graph.edges() {
            let x = if sign(u, v) >= 0 { 1 } else { -1 };
            s[u * n + v] = x;
            s[v * n + u] = -x;
        }
        Orientation { graph, s }
    }

    /// Builds an orientation from arcs `(tail, head)`; the underlying graph
    /// is read off from the arcs.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let edges: Vec<_> = arcs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        let graph = UndirectedGraph::from_edges(n, &edges)?;
        let mut o = Self::ascending(graph);
        for &(a, b) in arcs {
            o.set_arc(a, b);
        }
        Ok(o)
    }

    /// Reads an orientation off a skew-symmetric `{0, ±1}` matrix.
    pub fn from_skew_matrix(m: &IntMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::BadSkewMatrix(format!("{}x{} is not square", m.rows(), m.cols())));
        }
        let n = m.rows();
        let mut graph = UndirectedGraph::empty(n);
        for i in 0..n {
            for j in 0..n {
                let x = m[(i, j)];
                if !(-1..=1).contains(&x) {
                    return Err(Error::BadSkewMatrix(format!("entry ({i}, {j}) = {x}")));
                }
                if x != -m[(j, i)] {
                    return Err(Error::BadSkewMatrix(format!("entries ({i}, {j}) and ({j}, {i}) not opposite")));
                }
                if i < j && x != 0 {
                    graph.set(i, j, true);
                }
            }
        }
        Ok(Self::from_edge_signs(graph, |u, v| m[(u, v)] as i8))
    }

    pub(crate) fn set_arc(&mut self, tail: usize, head: usize) {
        let n = self.order();
        debug_assert!(self.graph.has_edge(tail, head));
        self.s[tail * n + head] = 1;
        self.s[head * n + tail] = -1;
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn graph(&self) -> &UndirectedGraph {
        &self.graph
    }

    /// The entry `s_uv` of the skew-adjacency matrix.
    #[inline]
    pub fn s(&self, u: usize, v: usize) -> i8 {
        self.s[u * self.order() + v]
    }

    /// Arcs `(tail, head)` listed by ascending `(min, max)` endpoint pair.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .map(|(u, v)| if self.s(u, v) > 0 { (u, v) } else { (v, u) })
            .collect()
    }

    /// Edges `(u, v)`, `u < v`, with sign `s_uv`.
    pub fn signed_edges(&self) -> Vec<(usize, usize, i8)> {
        self.graph.edges().map(|(u, v)| (u, v, self.s(u, v))).collect()
    }

    pub fn skew_matrix(&self) -> IntMatrix {
        let n = self.order();
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.s(i, j) as i64;
            }
        }
        m
    }

    /// Exact `SᵀS` compared against `k·I`.
    pub fn gram(&self, k: usize) -> GramReport {
        let n = self.order();
        let mut gram = IntMatrix::zeros(n, n);
        for u in 0..n {
            for v in u..n {
                let x: i64 = (0..n).map(|w| self.s(w, u) as i64 * self.s(w, v) as i64).sum();
                gram[(u, v)] = x;
                gram[(v, u)] = x;
            }
        }
        GramReport::new(gram, k)
    }

    pub fn is_optimum(&self, k: usize) -> bool {
        let n = self.order();
        self.graph.is_regular(k)
            && (0..n).all(|u| (u + 1..n).all(|v| self.two_walk_sum(u, v) == 0))
    }

    #[inline]
    fn two_walk_sum(&self, u: usize, v: usize) -> i64 {
        self.graph
            .common_neighbors(u, v)
            .into_iter()
            .map(|w| self.s(u, w) as i64 * self.s(w, v) as i64)
            .sum()
    }

    /// `w⁺_uv(2) − w⁻_uv(2)`: positive minus negative walks of length two.
    pub fn two_walk_balance(&self, u: usize, v: usize) -> Result<i64> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::InvalidParameter("two-walk balance needs distinct vertices".into()));
        }
        Ok(self.two_walk_sum(u, v))
    }

    /// Sum of singular values of `S`, via eigenvalues of `SᵀS`.
    pub fn skew_energy(&self) -> f64 {
        skew_energy(self)
    }

    /// Flips every arc incident to `v`.
    pub fn reverse_at(&self, v: usize) -> Result<Self> {
        self.reverse_set(&[v])
    }

    /// Conjugation by the `±1` diagonal that is `-1` on `vertices`. Arcs
    /// with exactly one endpoint in the set flip; listing a vertex twice
    /// cancels.
    pub fn reverse_set(&self, vertices: &[usize]) -> Result<Self> {
        let n = self.order();
        let mut flip = vec![false; n];
        for &v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            flip[v] = !flip[v];
        }
        let mut out = self.clone();
        for u in 0..n {
            for v in 0..n {
                if flip[u] != flip[v] {
                    out.s[u * n + v] = -self.s[u * n + v];
                }
            }
        }
        Ok(out)
    }

    /// The representative of the reversal class whose BFS tree arcs all
    /// point from parent to child (tree of [`SpanningTree::bfs`]).
    pub fn normalize_switching(&self) -> Result<Self> {
        if !self.graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let tree = SpanningTree::bfs(&self.graph);
        let mut flip = vec![false; self.order()];
        for &v in &tree.order[1..] {
            let p = tree.parent[v].expect("non-root vertex has a parent");
            let sign = self.s(p, v) * if flip[p] { -1 } else { 1 };
            flip[v] = sign < 0;
        }
        let set: Vec<usize> = (0..self.order()).filter(|&v| flip[v]).collect();
        self.reverse_set(&set)
    }

    /// Block-diagonal combination: `other`'s vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.order();
        let graph = self.graph.disjoint_union(&other.graph);
        Self::from_edge_signs(graph, |u, v| {
            if v < shift {
                self.s(u, v)
            } else {
                other.s(u - shift, v - shift)
            }
        })
    }

    /// Restriction to the induced subgraph on `vertices` (renumbered in order).
    pub fn restrict(&self, vertices: &[usize]) -> Self {
        let graph = self.graph.induced(vertices);
        Self::from_edge_signs(graph, |i, j| self.s(vertices[i], vertices[j]))
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut inv = vec![0; perm.len()];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        let graph = self.graph.relabel(perm);
        Self::from_edge_signs(graph, |a, b| self.s(inv[a], inv[b]))
    }
}

impl std::fmt::Debug for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Orientation")
            .field("n", &self.order())
            .field("arcs", &self.arcs())
            .finish()
    }
}

/// Exact `SᵀS` and how it differs from `k·I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramReport {
    pub gram: IntMatrix,
    pub target_k: usize,
    /// `(u, v, value)` with `u < v` and a nonzero value.
    pub off_diagonal_violations: Vec<(usize, usize, i64)>,
    /// `(u, value)` where the diagonal differs from `k`.
    pub diagonal_violations: Vec<(usize, i64)>,
    pub is_optimum: bool,
}

impl GramReport {
    fn new(gram: IntMatrix, k: usize) -> Self {
        let n = gram.rows();
        let mut off = Vec::new();
        let mut diag = Vec::new();
        for u in 0..n {
            if gram[(u, u)] != k as i64 {
                diag.push((u, gram[(u, u)]));
            }
            for v in u + 1..n {
                if gram[(u, v)] != 0 {
                    off.push((u, v, gram[(u, v)]));
                }
            }
        }
        let is_optimum = off.is_empty() && diag.is_empty();
        GramReport {
            gram,
            target_k: k,
            off_diagonal_violations: off,
            diagonal_violations: diag,
            is_optimum,
        }
    }
}

/// Sum of singular values of the skew-adjacency matrix.
///
/// Taken from an SVD of `S` itself; square roots of the eigenvalues of
/// `SᵀS` would turn round-off near zero into errors of order `1e-8`.
pub fn skew_energy(o: &Orientation) -> f64 {
    let n = o.order();
    if n == 0 {
        return 0.0;
    }
    let m = DMatrix::from_fn(n, n, |i, j| o.s(i, j) as f64);
    m.singular_values().iter().sum()
}

/// The upper bound `n·√Δ` attained exactly by optimum orientations.
pub fn energy_bound(g: &UndirectedGraph) -> f64 {
    g.order() as f64 * (g.max_degree() as f64).sqrt()
}

/// Breadth-first spanning tree rooted at 0, neighbours visited in
/// ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningTree {
    /// Vertices in BFS order; `order[0] == 0`.
    pub order: Vec<usize>,
    pub parent: Vec<Option<usize>>,
    pub depth: Vec<usize>,
}

impl SpanningTree {
    /// Spans the component of vertex 0 only.
    pub fn bfs(g: &UndirectedGraph) -> Self {
        let n = g.order();
        let mut parent = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        if n > 0 {
            depth[0] = 0;
            order.push(0);
            let mut queue = VecDeque::from([0]);
            while let Some(u) = queue.pop_front() {
                for w in g.neighbors(u) {
                    if depth[w] == usize::MAX {
                        depth[w] = depth[u] + 1;
                        parent[w] = Some(u);
                        order.push(w);
                        queue.push_back(w);
                    }
                }
            }
        }
        SpanningTree { order, parent, depth }
    }

    pub fn is_tree_edge(&self, u: usize, v: usize) -> bool {
        self.parent[v] == Some(u) || self.parent[u] == Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2(arc: (usize, usize)) -> Orientation {
        Orientation::from_arcs(2, &[arc]).unwrap()
    }

    /// All 2^m orientations of a graph.
    fn all_orientations(g: &UndirectedGraph) -> Vec<Orientation> {
        let edges: Vec<_> = g.edges().collect();
        (0u32..1 << edges.len())
            .map(|mask| {
                let mut i = 0;
                Orientation::from_edge_signs(g.clone(), |_, _| {
                    let s = if mask >> i & 1 == 1 { -1 } else { 1 };
                    i += 1;
                    s
                })
            })
            .collect()
    }

    #[test]
    fn skew_matrix_of_k2() {
        assert_eq!(k2((0, 1)).skew_matrix(), IntMatrix::from_rows(&[[0, 1], [-1, 0]]));
        assert_eq!(k2((1, 0)).skew_matrix(), IntMatrix::from_rows(&[[0, -1], [1, 0]]));
    }

    #[test]
    fn gram_of_k2_is_identity() {
        let r = k2((0, 1)).gram(1);
        assert!(r.is_optimum);
        assert_eq!(r.gram, IntMatrix::identity(2));
    }

    #[test]
    fn triangle_never_optimum() {
        let c3 = UndirectedGraph::cycle(3).unwrap();
        for o in all_orientations(&c3) {
            let r = o.gram(2);
            assert!(!r.is_optimum);
            assert_eq!(r.off_diagonal_violations.len(), 3);
            assert!(r.off_diagonal_violations.iter().all(|&(_, _, x)| x.abs() == 1));
        }
    }

    #[test]
    fn energies() {
        assert!((k2((0, 1)).skew_energy() - 2.0).abs() < 1e-12);
        // characteristic polynomial of a 3x3 skew matrix with entries ±1
        // is λ³ + 3λ, so the eigenvalues are 0 and ±i√3
        let c3 = UndirectedGraph::cycle(3).unwrap();
        for o in all_orientations(&c3) {
            assert!((o.skew_energy() - 2.0 * 3f64.sqrt()).abs() < 1e-9);
        }
    }

    #[test]
    fn two_walk_balance_on_cyclic_triangle() {
        let o = Orientation::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        // single 2-path 0-2-1: s_02 * s_21 = (-1) * (-1)
        assert_eq!(o.two_walk_balance(0, 1).unwrap(), 1);
        assert_eq!(o.gram(2).gram[(0, 1)], -1);
        assert!(o.two_walk_balance(1, 1).is_err());
        assert_eq!(k2((0, 1)).two_walk_balance(0, 1).unwrap(), 0);
    }

    #[test]
    fn reversal() {
        let o = k2((0, 1));
        assert_eq!(o.reverse_at(1).unwrap(), k2((1, 0)));
        assert_eq!(o.reverse_at(0).unwrap().reverse_at(0).unwrap(), o);
        assert!(o.reverse_at(2).is_err());
    }

    #[test]
    fn normalization() {
        assert_eq!(k2((1, 0)).normalize_switching().unwrap(), k2((0, 1)));
        let o = k2((0, 1));
        assert_eq!(o.normalize_switching().unwrap(), o);
        let c4 = UndirectedGraph::cycle(4).unwrap();
        let two = c4.disjoint_union(&c4);
        assert_eq!(Orientation::ascending(two).normalize_switching(), Err(Error::Disconnected));
    }

    #[test]
    fn bfs_tree_of_c4() {
        let t = SpanningTree::bfs(&UndirectedGraph::cycle(4).unwrap());
        assert_eq!(t.order, vec![0, 1, 3, 2]);
        assert_eq!(t.parent, vec![None, Some(0), Some(1), Some(0)]);
        assert!(!t.is_tree_edge(2, 3));
    }

    #[test]
    fn from_skew_matrix_rejects_bad_input() {
        assert!(Orientation::from_skew_matrix(&IntMatrix::from_rows(&[[0, 1], [1, 0]])).is_err());
        assert!(Orientation::from_skew_matrix(&IntMatrix::from_rows(&[[0, 2], [-2, 0]])).is_err());
        assert!(Orientation::from_skew_matrix(&IntMatrix::zeros(2, 3)).is_err());
    }
}
