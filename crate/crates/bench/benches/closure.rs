use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use perclab::closure::{close_k2t, closure};
use perclab::experiments::sample_gnp;

/// Near-critical G(n, p) for t = 4, where closures do the most work.
fn near_critical(n: usize) -> perclab::Graph {
    let p = 1.2 * (n as f64).powf(-10.0 / 13.0);
    sample_gnp(n, p, 11).unwrap()
}

fn engines(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure");
    group.sample_size(20);
    for n in [100, 200, 400] {
        let g = near_critical(n);
        group.bench_with_input(BenchmarkId::new("twins", n), &g, |b, g| {
            b.iter(|| closure(g, 4).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("traced", n), &g, |b, g| {
            b.iter(|| close_k2t(g, 4).unwrap())
        });
    }
    let g = near_critical(1600);
    group.bench_function(BenchmarkId::new("twins", 1600), |b| b.iter(|| closure(&g, 4).unwrap()));
    group.finish();
}

criterion_group!(benches, engines);
criterion_main!(benches);
