use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use koethe_core::dimseq;
use koethe_core::koethe;
use koethe_core::quiver::catalog;
use koethe_core::reflect::{self, DEFAULT_STEP_CAP};
use koethe_core::rep;
use koethe_core::roots;

fn reflection_enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("indecomposables");
    for (name, q) in [
        ("E6", catalog::e6()),
        ("E8", catalog::e8()),
        ("H4", catalog::h4()),
    ] {
        g.bench_function(name, |b| {
            b.iter(|| reflect::enumerate_indecomposables(black_box(&q), DEFAULT_STEP_CAP).unwrap())
        });
    }
    g.finish();
}

fn root_orbits(c: &mut Criterion) {
    let q = catalog::e8();
    c.bench_function("positive_roots/E8", |b| {
        b.iter(|| roots::positive_roots(black_box(&q)).unwrap())
    });
}

fn matrix_engine(c: &mut Criterion) {
    let mut g = c.benchmark_group("matrix_reps");
    g.sample_size(20);
    for (name, q) in [("D6", catalog::d(6)), ("E7", catalog::e7())] {
        g.bench_function(name, |b| {
            b.iter(|| rep::enumerate_indec_reps(black_box(&q), DEFAULT_STEP_CAP).unwrap())
        });
    }
    g.bench_function("crosscheck/E6", |b| {
        let q = catalog::e6();
        b.iter(|| koethe::cross_validate(black_box(&q), DEFAULT_STEP_CAP).unwrap())
    });
    g.finish();
}

fn dimseq_search(c: &mut Criterion) {
    c.bench_function("dimseq/generate(8)", |b| {
        b.iter(|| dimseq::generate(black_box(8), dimseq::DEFAULT_CAP).unwrap())
    });
}

criterion_group!(
    benches,
    reflection_enumeration,
    root_orbits,
    matrix_engine,
    dimseq_search
);
criterion_main!(benches);
