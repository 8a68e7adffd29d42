use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use statecmp::numerics::eig_hermitian;
use statecmp::twostate::{make_scenario, Strategy};
use statecmp::verify::{bound_sweep, refute_same_detector, simulate_strategy, OptimizerConfig};
use statecmp_bench::random_hermitian;

fn bench_eig(c: &mut Criterion) {
    let mut group = c.benchmark_group("eig_hermitian");
    for n in [8usize, 16, 32, 64] {
        let m = random_hermitian(7, n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| eig_hermitian(black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn bench_simulation(c: &mut Criterion) {
    let scenario = make_scenario(std::f64::consts::FRAC_PI_8).unwrap();
    let mut group = c.benchmark_group("simulate_strategy_10k");
    group.sample_size(20);
    for strategy in [Strategy::IndividualMinError, Strategy::CollectiveUnambiguous] {
        group.bench_function(strategy.name(), |b| {
            b.iter(|| simulate_strategy(black_box(strategy), &scenario, 10_000, 3).unwrap())
        });
    }
    group.finish();
}

fn bench_sweep(c: &mut Criterion) {
    let grid: Vec<f64> = (1..=25).map(|k| k as f64 * std::f64::consts::FRAC_PI_4 / 25.0).collect();
    c.bench_function("bound_sweep_25", |b| b.iter(|| bound_sweep(black_box(&grid)).unwrap()));
}

fn bench_refute(c: &mut Criterion) {
    let cfg = OptimizerConfig { max_iters: 400, ..Default::default() };
    let mut group = c.benchmark_group("refute_same_detector");
    group.sample_size(10);
    for d in [2usize, 3] {
        group.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| {
            b.iter(|| refute_same_detector(black_box(d), &cfg, 200).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_eig, bench_simulation, bench_sweep, bench_refute);
criterion_main!(benches);
