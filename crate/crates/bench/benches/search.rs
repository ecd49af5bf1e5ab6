use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use wavesearch_core::grover::{self, SearchSpec};
use wavesearch_core::lattice;
use wavesearch_core::spatial::{self, Graph};
use wavesearch_core::wavemech::{self, FocusMode};

fn grover_run(c: &mut Criterion) {
    let mut group = c.benchmark_group("grover_run");
    for n in [64usize, 1024, 4096] {
        let spec = SearchSpec::new(n, &[0]).unwrap();
        let steps = grover::optimal_queries(n, 1).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &spec, |b, spec| {
            b.iter(|| grover::run(black_box(spec), steps).unwrap())
        });
    }
    group.finish();
}

fn wave_focus(c: &mut Criterion) {
    c.bench_function("wave_focus_1024", |b| {
        b.iter(|| wavemech::run_focus(black_box(1024), 0, FocusMode::Steps(25)).unwrap())
    });
}

fn lattice_solvers(c: &mut Criterion) {
    c.bench_function("bound_state_2000", |b| {
        b.iter(|| lattice::bound_state(black_box(2000), 1.0, 1.0).unwrap())
    });
    c.bench_function("disorder_ensemble_512x10", |b| {
        b.iter(|| lattice::disorder_ensemble(black_box(512), 1.0, 2.0, 10, 0).unwrap())
    });
    let spec = lattice::impurity_chain(200, 1.0, 1.0).unwrap();
    c.bench_function("dense_spectrum_200", |b| {
        b.iter(|| lattice::spectrum(black_box(&spec)).unwrap())
    });
}

fn walks(c: &mut Criterion) {
    let complete = Graph::complete(256).unwrap();
    c.bench_function("ctqw_256", |b| {
        b.iter(|| {
            spatial::ctqw_search(black_box(&complete), 1.0 / 256.0, &[0], 25.2, spatial::ctqw_max_dt(256)).unwrap()
        })
    });
    let torus = Graph::torus2d(16, 16).unwrap();
    c.bench_function("dtqw_16x16_100", |b| {
        b.iter(|| spatial::dtqw_search(black_box(&torus), &[0], 100).unwrap())
    });
}

criterion_group!(benches, grover_run, wave_focus, lattice_solvers, walks);
criterion_main!(benches);
