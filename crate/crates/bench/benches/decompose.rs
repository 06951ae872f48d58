use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use cubmatch::constructions::generate_all_cubic;
use cubmatch::{invariants, lambda_profile, tight_cut_decomposition, two_cut_decomposition};
use cubmatch_bench::fixtures;

fn decompositions(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose");
    for (name, g) in fixtures() {
        group.bench_with_input(BenchmarkId::new("tight", &name), &g, |b, g| {
            b.iter(|| tight_cut_decomposition(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("two_cut", &name), &g, |b, g| {
            b.iter(|| two_cut_decomposition(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("invariants", &name), &g, |b, g| {
            b.iter(|| invariants(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn profiles(c: &mut Criterion) {
    let mut group = c.benchmark_group("lambda_profile");
    for (name, g) in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &g, |b, g| {
            b.iter(|| lambda_profile(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn generation(c: &mut Criterion) {
    c.bench_function("generate_n10", |b| {
        b.iter(|| generate_all_cubic(black_box(10), 2).unwrap().count())
    });
}

criterion_group!(benches, decompositions, profiles, generation);
criterion_main!(benches);
