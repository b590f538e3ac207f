use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use skewopt::search::{brute_force, find_optimum_orientation, SearchOptions};
use skewopt::UndirectedGraph;
use skewopt_bench::five_regular_instances;

fn orientation_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_optimum_orientation");
    for (name, g) in five_regular_instances() {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &g, |b, g| {
            b.iter(|| find_optimum_orientation(g, 5, &SearchOptions::default()).unwrap())
        });
    }
    let k6 = UndirectedGraph::complete(6);
    group.bench_function("k6_refutation", |b| {
        b.iter(|| find_optimum_orientation(&k6, 5, &SearchOptions::default()).unwrap())
    });
    group.finish();

    c.bench_function("brute_force/k6", |b| b.iter(|| brute_force(&k6, 5, false).unwrap()));
}

criterion_group!(benches, orientation_search);
criterion_main!(benches);
