use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use grig_bench::BENCH_PARAMS;
use grig_core::group::schreier_graph;
use grig_core::language::complexity_profile;
use grig_core::spectra::{eigenvalues, schreier_laplacian, DEFAULT_TOL};
use grig_core::substitution::eta_prefix;

fn words(c: &mut Criterion) {
    c.bench_function("eta_prefix 2^20", |b| b.iter(|| eta_prefix(black_box(1 << 20))));
    c.bench_function("complexity_profile 1024 / 2^15", |b| {
        b.iter(|| complexity_profile(black_box(1024), 1 << 15))
    });
}

fn graphs(c: &mut Criterion) {
    let mut group = c.benchmark_group("schreier_graph");
    for n in [8, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| schreier_graph(n))
        });
    }
    group.finish();
}

fn spectra(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigenvalues");
    group.sample_size(10);
    for n in [8, 10] {
        let op = schreier_laplacian(n, &BENCH_PARAMS).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &op, |b, op| {
            b.iter(|| eigenvalues(op, DEFAULT_TOL))
        });
    }
    group.finish();
}

criterion_group!(benches, words, graphs, spectra);
criterion_main!(benches);
