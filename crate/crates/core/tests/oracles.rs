mod common;

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use skewopt::canon::certificate;
use skewopt::constructions::{g12_family, g26_family, hypercube, p2_lift};
use skewopt::search::{enumerate_graphs, find_optimum_orientation, EnumerateOptions, SearchOptions, SearchOutcome};
use skewopt::UndirectedGraph;

use common::*;

/// Every labelled `k`-regular graph on `n` vertices with `N(0) = {1..k}`
/// (each isomorphism class has such a labelling), pair by pair.
fn naive_regular(k: usize, n: usize, keep: &mut dyn FnMut(&UndirectedGraph)) {
    fn go(
        pairs: &[(usize, usize)],
        i: usize,
        deg: &mut Vec<usize>,
        chosen: &mut Vec<(usize, usize)>,
        k: usize,
        n: usize,
        keep: &mut dyn FnMut(&UndirectedGraph),
    ) {
        if i == pairs.len() {
            if deg.iter().all(|&d| d == k) {
                keep(&UndirectedGraph::from_edges(n, chosen).unwrap());
            }
            return;
        }
        let (u, v) = pairs[i];
        // u's last chance to reach degree k passes once its row is exhausted
        let remaining_u = pairs[i..].iter().filter(|&&(a, _)| a == u).count();
        if deg[u] + remaining_u < k {
            return;
        }
        if deg[u] < k && deg[v] < k {
            deg[u] += 1;
            deg[v] += 1;
            chosen.push((u, v));
            go(pairs, i + 1, deg, chosen, k, n, keep);
            chosen.pop();
            deg[u] -= 1;
            deg[v] -= 1;
        }
        go(pairs, i + 1, deg, chosen, k, n, keep);
    }
    if k >= n || (k * n) % 2 == 1 {
        return;
    }
    let mut deg = vec![0; n];
    let mut chosen: Vec<(usize, usize)> = (1..=k).map(|v| (0, v)).collect();
    deg[0] = k;
    for d in deg.iter_mut().skip(1).take(k) {
        *d = 1;
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    go(&pairs, 0, &mut deg, &mut chosen, k, n, keep);
}

fn oracle_classes(k: usize, n: usize, parity: bool) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    naive_regular(k, n, &mut |g| {
        if g.is_connected() && (!parity || naive_even_neighborhoods(g)) {
            out.insert(certificate(g));
        }
    });
    out
}

fn generated(k: usize, n: usize, parity: bool) -> BTreeSet<String> {
    let opts = EnumerateOptions {
        even_neighborhoods: parity,
        ..Default::default()
    };
    enumerate_graphs(k, n, &opts).unwrap().into_iter().map(|e| e.certificate).collect()
}

#[test]
fn enumeration_matches_naive_oracle() {
    for k in 1..=3 {
        for n in k + 1..=10 {
            assert_eq!(generated(k, n, true), oracle_classes(k, n, true), "k={k} n={n} even");
            assert_eq!(generated(k, n, false), oracle_classes(k, n, false), "k={k} n={n} all");
        }
    }
}

#[test]
fn enumeration_matches_naive_oracle_k4() {
    for n in 5..=9 {
        assert_eq!(generated(4, n, true), oracle_classes(4, n, true), "n={n}");
        assert_eq!(generated(4, n, false), oracle_classes(4, n, false), "n={n}");
    }
}

#[test]
fn explicit_families_are_enumerated() {
    for n in [16, 20] {
        let found = generated(5, n, true);
        for o in [g12_family(n).unwrap(), g26_family(n).unwrap()] {
            assert!(found.contains(&certificate(o.graph())), "n={n}");
        }
    }
    assert!(generated(5, 32, true).contains(&certificate(hypercube(5).graph())));
    let p2k4 = UndirectedGraph::path(2).cartesian_product(&UndirectedGraph::complete(4));
    assert!(generated(5, 16, true).contains(&certificate(&UndirectedGraph::path(2).cartesian_product(&p2k4))));
    let lifted_u = p2_lift(
        find_optimum_orientation(&UndirectedGraph::u_graph(5).unwrap(), 4, &SearchOptions::default())
            .unwrap()
            .outcome
            .witness()
            .unwrap(),
    )
    .unwrap();
    assert!(generated(5, 20, true).contains(&certificate(lifted_u.graph())));
}

#[test]
fn parity_failures_are_refuted_like_brute_force() {
    let opts = EnumerateOptions {
        even_neighborhoods: false,
        ..Default::default()
    };
    for (k, n) in [(3, 8), (4, 8), (2, 7)] {
        for e in enumerate_graphs(k, n, &opts).unwrap() {
            if e.graph.has_even_neighborhoods() {
                continue;
            }
            let c = find_optimum_orientation(&e.graph, k, &SearchOptions::default()).unwrap();
            assert_eq!(c.outcome, SearchOutcome::NotFound);
            assert_eq!(c.nodes_explored, 0);
            assert!(c.is_exhaustive());
            assert_eq!(brute_force_oracle(&e.graph, k, 0).0, 0);
        }
    }
}

#[test]
fn results_are_deterministic() {
    let g = UndirectedGraph::u_graph(7).unwrap();
    let run = || {
        let mut c = find_optimum_orientation(&g, 4, &SearchOptions { find_all: true, max_nodes: None }).unwrap();
        c.wall_time = 0.0;
        c
    };
    assert_eq!(run(), run());
    let a = enumerate_graphs(5, 12, &EnumerateOptions::default()).unwrap();
    let b = enumerate_graphs(5, 12, &EnumerateOptions::default()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn relabelled_inputs_get_the_same_verdict() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for e in enumerate_graphs(5, 12, &EnumerateOptions::default()).unwrap() {
        let base = find_optimum_orientation(&e.graph, 5, &SearchOptions::default()).unwrap();
        for _ in 0..5 {
            let p = random_permutation(&mut rng, 12);
            let h = e.graph.relabel(&p);
            let c = find_optimum_orientation(&h, 5, &SearchOptions::default()).unwrap();
            assert_eq!(c.outcome.witness().is_some(), base.outcome.witness().is_some());
            if let Some(w) = c.outcome.witness() {
                assert!(naive_optimum(w, 5));
            }
        }
    }
}
