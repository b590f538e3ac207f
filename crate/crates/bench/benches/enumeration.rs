use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use skewopt::search::{build_catalog_with, enumerate_graphs, EnumerateOptions};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_even_neighborhood");
    group.sample_size(20);
    for (k, n) in [(4, 16), (5, 12), (5, 16), (6, 12)] {
        group.bench_with_input(BenchmarkId::new(format!("k{k}"), n), &(k, n), |b, &(k, n)| {
            b.iter(|| enumerate_graphs(k, n, &EnumerateOptions::default()).unwrap())
        });
    }
    group.finish();

    let all_regular = EnumerateOptions {
        even_neighborhoods: false,
        ..Default::default()
    };
    c.bench_function("enumerate_regular/k4_n9", |b| b.iter(|| enumerate_graphs(4, 9, &all_regular).unwrap()));

    let mut catalog = c.benchmark_group("build_catalog");
    catalog.sample_size(10);
    catalog.bench_function("k5_n6_to_12", |b| {
        b.iter(|| build_catalog_with(5, &[6, 8, 10, 12], &EnumerateOptions::default(), Some(1)).unwrap())
    });
    catalog.finish();
}

criterion_group!(benches, enumeration);
criterion_main!(benches);
