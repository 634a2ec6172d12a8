use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sombor_bench::{family, scrambled};
use sombor_core::families::Family;
use sombor_core::oracle::EnumerationTask;
use sombor_core::{canonical_form, compare, enumerate_rank, sombor_index};
use std::hint::black_box;

fn index(c: &mut Criterion) {
    let mut group = c.benchmark_group("sombor_index");
    for n in [10, 50, 200] {
        let g = family(Family::Qprime, n, 3);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| sombor_index(black_box(g))));
    }
    group.finish();

    let a = sombor_index(&family(Family::Q, 60, 5));
    let b = sombor_index(&family(Family::Qprime, 60, 5));
    c.bench_function("compare/distinct", |bench| bench.iter(|| compare(black_box(&a), black_box(&b))));
    c.bench_function("compare/equal", |bench| bench.iter(|| compare(black_box(&a), black_box(&a))));
}

fn canonical(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_form");
    for n in [8, 12, 16] {
        let g = scrambled(n, 3);
        group.bench_with_input(BenchmarkId::new("scrambled", n), &g, |b, g| b.iter(|| canonical_form(black_box(g))));
    }
    let star = family(Family::S, 16, 1);
    group.bench_function("star/16", |b| b.iter(|| canonical_form(black_box(&star))));
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_rank");
    group.sample_size(10);
    for (n, k) in [(6, 2), (7, 3), (8, 2)] {
        let task = EnumerationTask::quasi_tree(n, k).jobs(1);
        group.bench_function(format!("quasi-tree/{n}/{k}"), |b| b.iter(|| enumerate_rank(black_box(&task))));
    }
    group.finish();
}

criterion_group!(benches, index, canonical, enumeration);
criterion_main!(benches);
