use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use zerodiv::linalg::{char_poly, numeric_spectrum, rank, rank_modular, DEFAULT_SEED};
use zerodiv::spectra::{quadratic_hints, spectrum_exact_matrix, ClosedFormGraph};
use zerodiv::{all_classes, build_gamma, build_h, FieldSpec, LoopPolicy};

fn field(q: u32) -> FieldSpec {
    FieldSpec::with_order(q).unwrap()
}

fn construction(c: &mut Criterion) {
    let mut g = c.benchmark_group("construction");
    for q in [4, 7, 9] {
        let f = field(q);
        g.bench_with_input(BenchmarkId::new("build_gamma", q), &f, |b, f| b.iter(|| build_gamma(black_box(f)).unwrap()));
        g.bench_with_input(BenchmarkId::new("all_classes", q), &f, |b, f| b.iter(|| all_classes(black_box(f))));
    }
    g.finish();
}

fn linear_algebra(c: &mut Criterion) {
    let mut g = c.benchmark_group("linalg");
    g.sample_size(10);
    for q in [3, 4] {
        let a = build_gamma(&field(q)).unwrap().adjacency_matrix();
        g.bench_with_input(BenchmarkId::new("char_poly", q), &a, |b, a| b.iter(|| char_poly(black_box(a)).unwrap()));
    }
    for q in [4, 7] {
        let a = build_gamma(&field(q)).unwrap().adjacency_matrix();
        g.bench_with_input(BenchmarkId::new("numeric_spectrum", q), &a, |b, a| b.iter(|| numeric_spectrum(black_box(a)).unwrap()));
        g.bench_with_input(BenchmarkId::new("rank", q), &a, |b, a| b.iter(|| rank(black_box(a))));
        g.bench_with_input(BenchmarkId::new("rank_modular", q), &a, |b, a| b.iter(|| rank_modular(black_box(a), DEFAULT_SEED)));
    }
    g.finish();
}

fn exact_spectra(c: &mut Criterion) {
    let mut g = c.benchmark_group("spectrum_exact");
    g.sample_size(10);
    for q in [5, 9, 11] {
        let f = field(q);
        let a = build_h(&f, LoopPolicy::LoopsAllowed).adjacency_matrix();
        let hints = quadratic_hints(ClosedFormGraph::H, q - 1);
        g.bench_with_input(BenchmarkId::new("H", q), &a, |b, a| {
            b.iter(|| spectrum_exact_matrix(black_box(a), &hints, DEFAULT_SEED).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, construction, linear_algebra, exact_spectra);
criterion_main!(benches);
