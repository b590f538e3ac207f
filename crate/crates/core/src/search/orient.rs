//! Backtracking search for optimum orientations modulo vertex reversals.
//!
//! Reversing at a vertex flips every arc at that vertex and preserves
//! optimality, so the arcs of a spanning tree can be pinned to point from
//! parent to child. The remaining `m - n + 1` edge signs are branched on.
//! Each pair of vertices with common neighbours carries a running sum of
//! its decided 2-path signs and a count of undecided 2-paths; the pair is
//! infeasible once the sum exceeds the number of undecided paths in
//! absolute value, and when the two are equal every remaining path is
//! forced to cancel the sum.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::oriented::{Orientation, SpanningTree};

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    /// Stop after this many branching decisions.
    pub max_nodes: Option<u64>,
    /// Keep going after the first witness and collect one orientation per
    /// optimum reversal class.
    pub find_all: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Orientation),
    NotFound,
    /// The node budget ran out before the search finished.
    LimitReached,
}

impl SearchOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "FOUND",
            SearchOutcome::NotFound => "NONE",
            SearchOutcome::LimitReached => "LIMIT",
        }
    }

    pub fn witness(&self) -> Option<&Orientation> {
        match self {
            SearchOutcome::Found(o) => Some(o),
            _ => None,
        }
    }
}

/// Result of a search, with enough bookkeeping to audit exhaustiveness.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchCertificate {
    pub outcome: SearchOutcome,
    /// Branching decisions taken.
    pub nodes_explored: u64,
    /// Sign assignments of the non-tree edges ruled out or accepted so far;
    /// equals `2^cycle_space_dim` once the search is exhaustive.
    pub classes_covered: u128,
    /// `m - n + 1`.
    pub cycle_space_dim: usize,
    /// Every optimum reversal class, in search order (only with `find_all`).
    pub solutions: Vec<Orientation>,
    pub wall_time: f64,
}

impl SearchCertificate {
    pub fn total_classes(&self) -> u128 {
        1u128 << self.cycle_space_dim
    }

    pub fn is_exhaustive(&self) -> bool {
        self.classes_covered == self.total_classes()
    }
}

#[derive(Debug, Clone, Copy)]
struct Term {
    /// `s_uw · s_wv = coef · x[e1] · x[e2]`.
    e1: usize,
    e2: usize,
    coef: i8,
}

struct Pair {
    terms: Vec<Term>,
    sum: i32,
    undecided: u32,
}

struct Solver {
    /// Sign of each edge `(u, v)`, `u < v`: `+1` is `u → v`, 0 unassigned.
    x: Vec<i8>,
    pairs: Vec<Pair>,
    /// `(pair, term)` incidences of every edge.
    incidence: Vec<Vec<(u32, u32)>>,
    trail: Vec<usize>,
    queue: Vec<u32>,
    in_queue: Vec<bool>,
    free_unassigned: usize,
    is_free: Vec<bool>,
}

impl Solver {
    fn new(g: &UndirectedGraph, free: &[usize]) -> Self {
        let n = g.order();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let mut id = vec![usize::MAX; n * n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            id[u * n + v] = i;
            id[v * n + u] = i;
        }
        let mut pairs = Vec::new();
        let mut incidence = vec![Vec::new(); edges.len()];
        for u in 0..n {
            for v in u + 1..n {
                let common = g.common_neighbors(u, v);
                if common.is_empty() {
                    continue;
                }
                let p = pairs.len() as u32;
                let mut terms = Vec::with_capacity(common.len());
                for w in common {
                    let c1: i8 = if u < w { 1 } else { -1 };
                    let c2: i8 = if w < v { 1 } else { -1 };
                    let t = Term {
                        e1: id[u * n + w],
                        e2: id[w * n + v],
                        coef: c1 * c2,
                    };
                    incidence[t.e1].push((p, terms.len() as u32));
                    incidence[t.e2].push((p, terms.len() as u32));
                    terms.push(t);
                }
                let undecided = terms.len() as u32;
                pairs.push(Pair {
                    terms,
                    sum: 0,
                    undecided,
                });
            }
        }
        let mut is_free = vec![false; edges.len()];
        for &e in free {
            is_free[e] = true;
        }
        let m = edges.len();
        Solver {
            x: vec![0; m],
            in_queue: vec![false; pairs.len()],
            pairs,
            incidence,
            trail: Vec::new(),
            queue: Vec::new(),
            free_unassigned: free.len(),
            is_free,
        }
    }

    fn assign(&mut self, e: usize, val: i8) {
        debug_assert_eq!(self.x[e], 0);
        self.x[e] = val;
        self.trail.push(e);
        if self.is_free[e] {
            self.free_unassigned -= 1;
        }
        for &(p, t) in &self.incidence[e] {
            let pair = &mut self.pairs[p as usize];
            let term = pair.terms[t as usize];
            let other = if term.e1 == e { term.e2 } else { term.e1 };
            if self.x[other] != 0 {
                pair.sum += (term.coef * self.x[term.e1] * self.x[term.e2]) as i32;
                pair.undecided -= 1;
                if !self.in_queue[p as usize] {
                    self.in_queue[p as usize] = true;
                    self.queue.push(p);
                }
            }
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().expect("trail longer than mark");
            for &(p, t) in &self.incidence[e] {
                let pair = &mut self.pairs[p as usize];
                let term = pair.terms[t as usize];
                let other = if term.e1 == e { term.e2 } else { term.e1 };
                if self.x[other] != 0 {
                    pair.sum -= (term.coef * self.x[term.e1] * self.x[term.e2]) as i32;
                    pair.undecided += 1;
                }
            }
            self.x[e] = 0;
            if self.is_free[e] {
                self.free_unassigned += 1;
            }
        }
    }

    /// Runs pair checks and forced assignments to a fixpoint. Returns
    /// `false` on a contradiction; the queue is cleared either way.
    fn propagate(&mut self) -> bool {
        let mut ok = true;
        while let Some(p) = self.queue.pop() {
            self.in_queue[p as usize] = false;
            if !ok {
                continue;
            }
            let (sum, undecided) = {
                let pair = &self.pairs[p as usize];
                (pair.sum, pair.undecided as i32)
            };
            if sum.abs() > undecided {
                ok = false;
                continue;
            }
            if sum == 0 || sum.abs() != undecided {
                continue;
            }
            // every undecided path must contribute -sign(sum)
            let want: i8 = if sum > 0 { -1 } else { 1 };
            let n_terms = self.pairs[p as usize].terms.len();
            for t in 0..n_terms {
                let term = self.pairs[p as usize].terms[t];
                let (a, b) = (self.x[term.e1], self.x[term.e2]);
                let forced = match (a, b) {
                    (0, 0) => None,
                    (0, b) => Some((term.e1, want * term.coef * b)),
                    (a, 0) => Some((term.e2, want * term.coef * a)),
                    _ => None,
                };
                if let Some((e, val)) = forced {
                    if self.x[e] == 0 {
                        self.assign(e, val);
                    }
                }
            }
        }
        self.queue.clear();
        ok
    }

    fn orientation(&self, g: &UndirectedGraph) -> Orientation {
        let mut i = 0;
        let x = &self.x;
        Orientation::from_edge_signs(g.clone(), |_, _| {
            let s = x[i];
            i += 1;
            s
        })
    }
}

fn pow2(d: usize) -> u128 {
    1u128 << d
}

fn check_input(g: &UndirectedGraph, k: usize) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.is_regular(k) {
        return Err(Error::NotRegular(k));
    }
    let dim = (g.edge_count() + 1).saturating_sub(g.order());
    if dim >= 127 {
        return Err(Error::Infeasible(format!("cycle space of dimension {dim} is out of reach")));
    }
    Ok(dim)
}

/// Searches for an orientation of `g` with `SᵀS = kI`.
///
/// Witnesses are normalised: every arc of the BFS tree of
/// [`SpanningTree::bfs`] points from parent to child. Branching tries `+1`
/// (arc from the smaller endpoint) before `-1`, over non-tree edges sorted
/// by the smaller BFS depth of their endpoints, then by endpoints.
pub fn find_optimum_orientation(g: &UndirectedGraph, k: usize, opts: &SearchOptions) -> Result<SearchCertificate> {
    let start = Instant::now();
    let dim = check_input(g, k)?;
    let mut cert = SearchCertificate {
        outcome: SearchOutcome::NotFound,
        nodes_explored: 0,
        classes_covered: 0,
        cycle_space_dim: dim,
        solutions: Vec::new(),
        wall_time: 0.0,
    };
    if !g.has_even_neighborhoods() {
        cert.classes_covered = pow2(dim);
        cert.wall_time = start.elapsed().as_secs_f64();
        return Ok(cert);
    }

    let tree = SpanningTree::bfs(g);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut free: Vec<usize> = (0..edges.len())
        .filter(|&e| !tree.is_tree_edge(edges[e].0, edges[e].1))
        .collect();
    free.sort_by_key(|&e| {
        let (u, v) = edges[e];
        (tree.depth[u].min(tree.depth[v]), u, v)
    });
    debug_assert_eq!(free.len(), dim);

    let mut solver = Solver::new(g, &free);
    for (e, &(u, v)) in edges.iter().enumerate() {
        if tree.parent[v] == Some(u) {
            solver.assign(e, 1);
        } else if tree.parent[u] == Some(v) {
            solver.assign(e, -1);
        }
    }
    if solver.propagate() {
        cert.classes_covered += pow2(dim) - pow2(solver.free_unassigned);
        let mut dfs = Dfs {
            g,
            free: &free,
            opts,
            cert: &mut cert,
            aborted: false,
        };
        dfs.run(&mut solver);
    } else {
        cert.classes_covered = pow2(dim);
    }
    if let Some(first) = cert.solutions.first().cloned() {
        cert.outcome = SearchOutcome::Found(first);
        if !opts.find_all {
            cert.solutions.clear();
        }
    } else if cert.classes_covered != pow2(dim) {
        cert.outcome = SearchOutcome::LimitReached;
    }
    cert.wall_time = start.elapsed().as_secs_f64();
    Ok(cert)
}

struct Dfs<'a> {
    g: &'a UndirectedGraph,
    free: &'a [usize],
    opts: &'a SearchOptions,
    cert: &'a mut SearchCertificate,
    aborted: bool,
}

impl Dfs<'_> {
    /// Returns `true` when the search should stop.
    fn run(&mut self, solver: &mut Solver) -> bool {
        let Some(&e) = self.free.iter().find(|&&e| solver.x[e] == 0) else {
            // every pair is fully decided and balanced
            debug_assert!(solver.pairs.iter().all(|p| p.undecided == 0 && p.sum == 0));
            self.cert.classes_covered += 1;
            self.cert.solutions.push(solver.orientation(self.g));
            return !self.opts.find_all;
        };
        for val in [1i8, -1] {
            if let Some(limit) = self.opts.max_nodes {
                if self.cert.nodes_explored >= limit {
                    self.aborted = true;
                    return true;
                }
            }
            self.cert.nodes_explored += 1;
            let mark = solver.trail.len();
            solver.assign(e, val);
            let before = solver.free_unassigned;
            if solver.propagate() {
                self.cert.classes_covered += pow2(before) - pow2(solver.free_unassigned);
                if self.run(solver) {
                    solver.undo_to(mark);
                    return true;
                }
            } else {
                self.cert.classes_covered += pow2(before);
            }
            solver.undo_to(mark);
        }
        false
    }
}

/// Result of exhaustive enumeration of all `2^m` orientations.
#[derive(Debug, Clone, PartialEq)]
pub struct BruteForceResult {
    /// First optimum orientation in Gray-code order.
    pub first: Option<Orientation>,
    /// Number of optimum orientations among all `2^m`.
    pub optimum_count: u64,
    pub orientations_checked: u64,
}

/// Walks all `2^m` orientations in Gray-code order, maintaining `SᵀS`
/// incrementally. No reversal quotient, no pruning.
pub fn brute_force(g: &UndirectedGraph, k: usize, stop_at_first: bool) -> Result<BruteForceResult> {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    if m > 40 {
        return Err(Error::Infeasible(format!("2^{m} orientations is beyond brute force")));
    }
    let mut s = vec![0i32; n * n];
    for &(u, v) in &edges {
        s[u * n + v] = 1;
        s[v * n + u] = -1;
    }
    // off-diagonal entries of SᵀS for u < v
    let mut gram = vec![0i32; n * n];
    let mut nonzero = 0usize;
    for u in 0..n {
        for v in u + 1..n {
            let x: i32 = (0..n).map(|w| s[w * n + u] * s[w * n + v]).sum();
            gram[u * n + v] = x;
            nonzero += (x != 0) as usize;
        }
    }
    let diagonal_ok = g.is_regular(k);
    let mut result = BruteForceResult {
        first: None,
        optimum_count: 0,
        orientations_checked: 0,
    };
    let total: u64 = 1 << m;
    for step in 0..total {
        if step > 0 {
            let e = step.trailing_zeros() as usize;
            let (a, b) = edges[e];
            // flipping s_ab changes the entries (b, x) for x ∈ N(a) and (a, x) for x ∈ N(b)
            for (p, q) in [(a, b), (b, a)] {
                let spq = s[p * n + q];
                for x in g.neighbors(p) {
                    if x == q {
                        continue;
                    }
                    let (lo, hi) = (q.min(x), q.max(x));
                    let old = gram[lo * n + hi];
                    let new = old - 2 * spq * s[p * n + x];
                    gram[lo * n + hi] = new;
                    nonzero = nonzero + (new != 0) as usize - (old != 0) as usize;
                }
            }
            s[a * n + b] = -s[a * n + b];
            s[b * n + a] = -s[b * n + a];
        }
        result.orientations_checked += 1;
        if diagonal_ok && nonzero == 0 {
            result.optimum_count += 1;
            if result.first.is_none() {
                let o = Orientation::from_edge_signs(g.clone(), |u, v| s[u * n + v] as i8);
                result.first = Some(o);
            }
            if stop_at_first {
                break;
            }
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn search(g: &UndirectedGraph, k: usize) -> SearchCertificate {
        find_optimum_orientation(g, k, &SearchOptions::default()).unwrap()
    }

    #[test]
    fn k6_has_no_optimum_orientation() {
        let c = search(&UndirectedGraph::complete(6), 5);
        assert_eq!(c.outcome, SearchOutcome::NotFound);
        assert_eq!(c.cycle_space_dim, 10);
        assert_eq!(c.classes_covered, 1024);
    }

    #[test]
    fn small_positive_cases() {
        for (g, k) in [
            (UndirectedGraph::complete(4), 3),
            (UndirectedGraph::cycle(4).unwrap(), 2),
            (UndirectedGraph::hypercube(3), 3),
            (UndirectedGraph::path(2), 1),
        ] {
            let c = search(&g, k);
            let w = c.outcome.witness().expect("witness");
            assert!(w.gram(k).is_optimum);
            assert_eq!(&w.normalize_switching().unwrap(), w);
        }
    }

    #[test]
    fn parity_short_circuit() {
        let c = search(&UndirectedGraph::cycle(5).unwrap(), 2);
        assert_eq!(c.outcome, SearchOutcome::NotFound);
        assert_eq!(c.nodes_explored, 0);
        assert_eq!(c.classes_covered, 2);
    }

    #[test]
    fn rejects_bad_input() {
        let c4 = UndirectedGraph::cycle(4).unwrap();
        assert_eq!(find_optimum_orientation(&c4.disjoint_union(&c4), 2, &Default::default()), Err(Error::Disconnected));
        assert_eq!(find_optimum_orientation(&UndirectedGraph::path(3), 2, &Default::default()), Err(Error::NotRegular(2)));
    }

    #[test]
    fn find_all_counts_classes() {
        // C4: 2^4 orientations, 8 optimum (odd number of "backward" arcs), quotient by 2^3
        let g = UndirectedGraph::cycle(4).unwrap();
        let bf = brute_force(&g, 2, false).unwrap();
        assert_eq!(bf.optimum_count, 8);
        let opts = SearchOptions {
            find_all: true,
            ..Default::default()
        };
        let c = find_optimum_orientation(&g, 2, &opts).unwrap();
        assert_eq!(c.solutions.len() as u64, bf.optimum_count >> (g.order() - 1));
        assert!(c.is_exhaustive());
    }

    #[test]
    fn node_limit() {
        let opts = SearchOptions {
            max_nodes: Some(1),
            ..Default::default()
        };
        let g = UndirectedGraph::path(2).cartesian_product(&UndirectedGraph::complete(4));
        let c = find_optimum_orientation(&g, 4, &opts).unwrap();
        assert!(matches!(c.outcome, SearchOutcome::LimitReached | SearchOutcome::Found(_)));
        assert!(c.nodes_explored <= 1);
    }

    #[test]
    fn brute_force_k6() {
        let r = brute_force(&UndirectedGraph::complete(6), 5, false).unwrap();
        assert_eq!(r.orientations_checked, 1 << 15);
        assert_eq!(r.optimum_count, 0);
    }
}
