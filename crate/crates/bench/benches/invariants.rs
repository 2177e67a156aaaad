use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hitsym_bench::bench_graphs;
use hitsym_core::{
    hitting_matrix_solve, kemeny, resistance_matrix, walk_regularity, walk_spectrum,
};

fn spectra(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectra");
    for (name, g) in bench_graphs() {
        group.bench_with_input(BenchmarkId::new("walk_spectrum", &name), &g, |b, g| {
            b.iter(|| walk_spectrum(g).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("resistance_matrix", &name), &g, |b, g| {
            b.iter(|| resistance_matrix(g).unwrap())
        });
    }
    group.finish();
}

fn hitting(c: &mut Criterion) {
    let mut group = c.benchmark_group("hitting");
    group.sample_size(10);
    for (name, g) in bench_graphs().into_iter().filter(|(_, g)| g.n() <= 64) {
        group.bench_with_input(BenchmarkId::new("solve", &name), &g, |b, g| {
            b.iter(|| hitting_matrix_solve(g).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("kemeny", &name), &g, |b, g| {
            b.iter(|| kemeny(g).unwrap())
        });
    }
    group.finish();
}

fn walks(c: &mut Criterion) {
    let mut group = c.benchmark_group("walk_regularity");
    group.sample_size(10);
    for (name, g) in bench_graphs().into_iter().filter(|(_, g)| g.n() <= 64) {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &g, |b, g| {
            b.iter(|| walk_regularity(g).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, spectra, hitting, walks);
criterion_main!(benches);
