use std::hint::black_box;

use clockfree::cutsets::{clique_atoms, find_star_cutset};
use clockfree::harness::canonical_form;
use clockfree::obstructions::is_t_clean;
use clockfree::{find_pattern, PatternKind};
use clockfree_bench::fixtures;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn patterns(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_pattern");
    for (name, g) in fixtures() {
        for kind in [PatternKind::Clock, PatternKind::Wheel, PatternKind::Theta] {
            group.bench_with_input(BenchmarkId::new(kind.to_string(), name), &g, |b, g| {
                b.iter(|| find_pattern(black_box(g), kind).unwrap())
            });
        }
    }
    group.finish();
}

fn cutsets(c: &mut Criterion) {
    let mut group = c.benchmark_group("cutsets");
    for (name, g) in fixtures() {
        group.bench_with_input(BenchmarkId::new("star", name), &g, |b, g| b.iter(|| find_star_cutset(black_box(g))));
        group.bench_with_input(BenchmarkId::new("atoms", name), &g, |b, g| b.iter(|| clique_atoms(black_box(g))));
    }
    group.finish();
}

fn cleanness(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_t_clean");
    group.sample_size(10);
    for (name, g) in fixtures().into_iter().filter(|(_, g)| g.n() <= 16) {
        group.bench_with_input(BenchmarkId::new("t3", name), &g, |b, g| b.iter(|| is_t_clean(black_box(g), 3).unwrap()));
    }
    group.finish();
}

fn canonical(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_form");
    for (name, g) in fixtures().into_iter().filter(|(_, g)| g.n() <= 16) {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| b.iter(|| canonical_form(black_box(g)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, patterns, cutsets, cleanness, canonical);
criterion_main!(benches);
