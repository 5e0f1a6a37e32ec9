use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use stiefel_core::degree::{aztec_check, degree, degree_table, degree_via_integral, Method};
use stiefel_core::gt::count_invariants;
use stiefel_core::volumes::vol_symbolic;
use stiefel_core::weights::Partition;

fn bench_degrees(c: &mut Criterion) {
    c.bench_function("degree_table_10", |b| {
        b.iter(|| degree_table(black_box(10)).unwrap())
    });
    c.bench_function("degree_determinant_8_12", |b| {
        b.iter(|| degree(black_box(8), black_box(12), Method::Determinant).unwrap())
    });
    c.bench_function("degree_integral_8_12", |b| {
        b.iter(|| degree_via_integral(black_box(8), black_box(12)).unwrap())
    });
    c.bench_function("aztec_check_12", |b| b.iter(|| aztec_check(black_box(12))));
}

fn bench_patterns(c: &mut Criterion) {
    c.bench_function("count_invariants_so7_30_20_10", |b| {
        let lambda = Partition::new(vec![30, 20, 10]);
        b.iter(|| count_invariants(black_box(7), &lambda, black_box(3)).unwrap())
    });
    c.bench_function("vol_symbolic_4_7", |b| {
        b.iter(|| vol_symbolic(black_box(4), black_box(7)).unwrap())
    });
    c.bench_function("vol_symbolic_6_8", |b| {
        b.iter(|| vol_symbolic(black_box(6), black_box(8)).unwrap())
    });
}

criterion_group!(benches, bench_degrees, bench_patterns);
criterion_main!(benches);
