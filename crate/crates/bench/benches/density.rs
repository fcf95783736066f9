use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use perclab::experiments::sample_gnp;
use perclab::{max_density_bruteforce, max_density_flow};

fn densest(c: &mut Criterion) {
    let mut group = c.benchmark_group("density");
    group.sample_size(20);
    for n in [12, 18] {
        let g = sample_gnp(n, 0.3, 5).unwrap();
        group.bench_with_input(BenchmarkId::new("brute", n), &g, |b, g| {
            b.iter(|| max_density_bruteforce(g).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("flow", n), &g, |b, g| {
            b.iter(|| max_density_flow(g).unwrap())
        });
    }
    for n in [100, 400] {
        let g = sample_gnp(n, 4.0 / n as f64, 5).unwrap();
        group.bench_with_input(BenchmarkId::new("flow", n), &g, |b, g| {
            b.iter(|| max_density_flow(g).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, densest);
criterion_main!(benches);
