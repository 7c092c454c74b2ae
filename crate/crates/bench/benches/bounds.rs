use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use degspec::bounds::{nikiforov_q_bound, phi_all, psi_min};
use degspec::partite::{clique_number, phi_number};
use degspec::{mu, q_index, solve_y, DEFAULT_TOL};
use degspec_bench::{named_fixtures, random_fixtures};

fn spectral(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectral");
    for g in random_fixtures(&[50, 200, 800], 0.1, 11) {
        group.bench_with_input(BenchmarkId::new("mu", g.order()), &g, |b, g| {
            b.iter(|| mu(black_box(g), DEFAULT_TOL).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("q", g.order()), &g, |b, g| {
            b.iter(|| q_index(black_box(g), DEFAULT_TOL).unwrap())
        });
    }
    for (name, g) in named_fixtures() {
        group.bench_with_input(BenchmarkId::new("mu", &name), &g, |b, g| {
            b.iter(|| mu(black_box(g), DEFAULT_TOL).unwrap())
        });
    }
    group.finish();
}

fn degree_bounds(c: &mut Criterion) {
    let mut group = c.benchmark_group("degree_bounds");
    for g in random_fixtures(&[100, 1000, 4000], 0.05, 12) {
        let ds = g.degree_sequence();
        let lds = g.line_degree_sequence().unwrap();
        group.bench_with_input(BenchmarkId::new("solve_y", g.order()), &ds, |b, ds| {
            b.iter(|| solve_y(black_box(ds)))
        });
        group.bench_with_input(BenchmarkId::new("phi_all", g.order()), &ds, |b, ds| {
            b.iter(|| phi_all(black_box(ds)))
        });
        group.bench_with_input(BenchmarkId::new("nikiforov", g.order()), &ds, |b, ds| {
            b.iter(|| nikiforov_q_bound(black_box(ds)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("psi_min", g.order()), &lds, |b, lds| {
            b.iter(|| psi_min(black_box(lds)))
        });
    }
    group.finish();
}

fn exact_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_search");
    for g in random_fixtures(&[10, 12, 14], 0.5, 13) {
        group.bench_with_input(BenchmarkId::new("phi", g.order()), &g, |b, g| {
            b.iter(|| phi_number(black_box(g)).unwrap())
        });
    }
    for g in random_fixtures(&[30, 60], 0.5, 14) {
        group.bench_with_input(BenchmarkId::new("omega", g.order()), &g, |b, g| {
            b.iter(|| clique_number(black_box(g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, spectral, degree_bounds, exact_search);
criterion_main!(benches);
