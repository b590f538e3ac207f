//! Generation of connected `k`-regular graphs, optionally restricted to
//! the even neighbourhood property.
//!
//! Vertices are completed one at a time in index order. While vertex `c`
//! is being completed every later vertex has neighbours only below `c`, so
//! two later vertices with the same neighbourhood are interchangeable and
//! only a prefix of each such twin class is ever joined to `c`. Once `c`
//! is full, every pair whose common neighbourhood can no longer change is
//! checked for parity. Survivors are deduplicated by canonical form.

use std::collections::BTreeMap;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{CliqueLevel, UndirectedGraph};

#[derive(Debug, Clone)]
pub struct EnumerateOptions {
    pub connected: bool,
    /// Keep only graphs in which every pair has an even number of common
    /// neighbours, pruning partial graphs as soon as a pair is settled odd.
    pub even_neighborhoods: bool,
    pub clique_level: Option<CliqueLevel>,
    /// Run even when `n` exceeds [`feasibility_bound`].
    pub force: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            connected: true,
            even_neighborhoods: true,
            clique_level: None,
            force: false,
        }
    }
}

/// Largest order enumerated without `force`. Measured single-core times at
/// the bound: k ≤ 4 well under a second at n = 64, k = 5 about 0.5 s at
/// n = 32, k = 6 about 8 s at n = 20, k = 7..10 a few seconds at n = 16.
pub fn feasibility_bound(k: usize) -> usize {
    match k {
        0..=4 => MAX_ORDER,
        5 => 32,
        6 => 20,
        _ => 16,
    }
}

/// Order of the largest graph the generator accepts at all.
pub const MAX_ORDER: usize = 64;

/// One enumerated isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumeratedGraph {
    /// Canonically labelled representative.
    pub graph: UndirectedGraph,
    /// graph6 of `graph`.
    pub certificate: String,
}

/// Statistics of one generator run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumerateStats {
    /// Partial graphs visited.
    pub nodes: u64,
    /// Complete labelled graphs that reached the canonical dedup.
    pub labelled_leaves: u64,
}

/// All classes, sorted by certificate.
pub fn enumerate_graphs(k: usize, n: usize, opts: &EnumerateOptions) -> Result<Vec<EnumeratedGraph>> {
    Ok(enumerate_streaming(k, n, opts, |_| {})?.0)
}

/// Like [`enumerate_graphs`], calling `on_new` for each class the first
/// time it is generated.
pub fn enumerate_streaming(
    k: usize,
    n: usize,
    opts: &EnumerateOptions,
    on_new: impl FnMut(&EnumeratedGraph),
) -> Result<(Vec<EnumeratedGraph>, EnumerateStats)> {
    if n > MAX_ORDER {
        return Err(Error::Infeasible(format!("order {n} exceeds the generator limit of {MAX_ORDER}")));
    }
    if n > feasibility_bound(k) && !opts.force {
        return Err(Error::Infeasible(format!(
            "order {n} is above the measured bound {} for k = {k}; use force to run anyway",
            feasibility_bound(k)
        )));
    }
    let mut gen = Generator {
        n,
        k,
        adj: vec![0; n],
        deg: vec![0; n],
        opts,
        found: BTreeMap::new(),
        stats: EnumerateStats::default(),
        on_new,
    };
    if n > 0 && k < n && (k * n) % 2 == 0 {
        gen.extend(0);
    }
    let stats = gen.stats;
    Ok((gen.found.into_values().collect(), stats))
}

struct Generator<'a, F> {
    n: usize,
    k: usize,
    adj: Vec<u64>,
    deg: Vec<usize>,
    opts: &'a EnumerateOptions,
    found: BTreeMap<String, EnumeratedGraph>,
    stats: EnumerateStats,
    on_new: F,
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

fn above(c: usize) -> u64 {
    if c >= 63 {
        0
    } else {
        !0u64 << (c + 1)
    }
}

impl<F: FnMut(&EnumeratedGraph)> Generator<'_, F> {
    fn connect(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        self.deg[u] += 1;
        self.deg[v] += 1;
    }

    fn disconnect(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        self.deg[u] -= 1;
        self.deg[v] -= 1;
    }

    fn extend(&mut self, c: usize) {
        self.stats.nodes += 1;
        if c == self.n {
            self.leaf();
            return;
        }
        // an untouched current vertex means [0, c) is already closed off
        if self.opts.connected && c > 0 && self.deg[c] == 0 {
            return;
        }
        let need = self.k - self.deg[c];
        let mut classes: Vec<(u64, Vec<usize>)> = Vec::new();
        for v in c + 1..self.n {
            if self.deg[v] == self.k {
                continue;
            }
            match classes.iter_mut().find(|(mask, _)| *mask == self.adj[v]) {
                Some((_, members)) => members.push(v),
                None => classes.push((self.adj[v], vec![v])),
            }
        }
        let available: usize = classes.iter().map(|(_, m)| m.len()).sum();
        if available < need {
            return;
        }
        let classes: Vec<Vec<usize>> = classes.into_iter().map(|(_, m)| m).collect();
        self.choose(c, &classes, 0, need);
    }

    fn choose(&mut self, c: usize, classes: &[Vec<usize>], i: usize, need: usize) {
        if need == 0 {
            if self.closes_cleanly(c) {
                self.extend(c + 1);
            }
            return;
        }
        if i == classes.len() {
            return;
        }
        let rest: usize = classes[i + 1..].iter().map(Vec::len).sum();
        let members = &classes[i];
        let lo = need.saturating_sub(rest);
        let hi = need.min(members.len());
        for take in (lo..=hi).rev() {
            for &v in &members[..take] {
                self.connect(c, v);
            }
            self.choose(c, classes, i + 1, need - take);
            for &v in &members[..take] {
                self.disconnect(c, v);
            }
        }
    }

    /// Checks made once vertex `c` is full.
    fn closes_cleanly(&self, c: usize) -> bool {
        let n = self.n;
        let k = self.k;
        let later = above(c) & if n == 64 { !0 } else { bit(n) - 1 };
        let mut open = 0u64;
        for v in c + 1..n {
            if self.deg[v] < k {
                open |= bit(v);
            }
        }
        if self.opts.even_neighborhoods {
            for u in 0..=c {
                for v in u + 1..n {
                    let common = (self.adj[u] & self.adj[v]).count_ones();
                    if common % 2 == 0 {
                        continue;
                    }
                    if v <= c {
                        return false;
                    }
                    // common neighbours of (u, v) can only be added at an open later w ∈ N(u)
                    let reachable = if self.deg[v] == k {
                        0
                    } else {
                        self.adj[u] & !self.adj[v] & later & open & !bit(v)
                    };
                    if reachable == 0 {
                        return false;
                    }
                }
            }
        }
        // every open later vertex must be able to fill up inside the later block
        for v in c + 1..n {
            let deficit = k - self.deg[v];
            if deficit > 0 {
                let room = (open & !self.adj[v] & !bit(v)).count_ones() as usize;
                if room < deficit {
                    return false;
                }
            }
        }
        true
    }

    fn leaf(&mut self) {
        self.stats.labelled_leaves += 1;
        let mut g = UndirectedGraph::empty(self.n);
        for u in 0..self.n {
            let mut row = self.adj[u] & above(u);
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                g.set(u, v, true);
            }
        }
        if self.opts.connected && !g.is_connected() {
            return;
        }
        if self.opts.even_neighborhoods && !g.has_even_neighborhoods() {
            return;
        }
        if let Some(level) = self.opts.clique_level {
            if g.classify_clique_level() != level {
                return;
            }
        }
        let cf = canonical_form(&g);
        if self.found.contains_key(&cf.certificate) {
            return;
        }
        let entry = EnumeratedGraph {
            graph: cf.graph(&g),
            certificate: cf.certificate.clone(),
        };
        (self.on_new)(&entry);
        self.found.insert(cf.certificate, entry);
    }
}
