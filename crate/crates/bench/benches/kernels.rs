use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use dasquare::catalog;
use dasquare::census::{raw_solutions, Census};
use dasquare::compound::{compound, CompoundKind};
use dasquare::trajectory;

fn char_poly(c: &mut Criterion) {
    let bf = catalog::bf();
    let c16 = compound(&catalog::f360(), &catalog::f360(), CompoundKind::Magic).unwrap();
    c.bench_function("char_poly/order8", |b| b.iter(|| black_box(&bf).char_poly()));
    c.bench_function("char_poly/order16", |b| b.iter(|| black_box(&c16).char_poly()));
}

fn rank(c: &mut Criterion) {
    let c16 = compound(&catalog::sud4a(), &catalog::sud4a(), CompoundKind::Latin).unwrap();
    let freitag = catalog::freitag().pow(4).unwrap();
    c.bench_function("rank/order16", |b| b.iter(|| black_box(&c16).rank()));
    c.bench_function("rank/large_entries", |b| b.iter(|| black_box(&freitag).rank()));
}

fn trajectories(c: &mut Criterion) {
    let loshu = catalog::loshu();
    let laa44 = catalog::laa44();
    c.bench_function("trajectory/loshu_p12", |b| b.iter(|| trajectory(black_box(&loshu), 12).unwrap()));
    c.bench_function("trajectory/laa44", |b| b.iter(|| trajectory(black_box(&laa44), 12).unwrap()));
}

fn census(c: &mut Criterion) {
    let mut g = c.benchmark_group("census");
    g.sample_size(10);
    g.bench_function("raw_solutions", |b| b.iter(raw_solutions));
    g.bench_function("build", |b| b.iter(Census::build));
    g.finish();
}

criterion_group!(benches, char_poly, rank, trajectories, census);
criterion_main!(benches);
