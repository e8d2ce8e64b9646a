//! Sequential vs rayon evaluation of the sweep workloads.
//!
//! Run with `cargo bench -p gemwit-core`; the parallel arms need the default
//! `parallel` feature.

use std::f64::consts::TAU;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gemwit_core::exec;
use gemwit_core::witness::{fock_oracle, witness_point, FieldMode, FockOptions, EQUAL_WEIGHTS};

fn omega_ts(count: usize) -> Vec<f64> {
    (0..count).map(|i| 2.0 * TAU * i as f64 / (count - 1) as f64).collect()
}

fn bench_closed_form_sweep(c: &mut Criterion) {
    let mode = FieldMode::relative(1.0, 0.1, 0.1).unwrap();
    let mut group = c.benchmark_group("closed_form_sweep");
    for count in [64usize, 1024, 16384] {
        let points = omega_ts(count);
        let eval = |wt: &f64| witness_point(&mode, mode.time_at(*wt), &EQUAL_WEIGHTS).unwrap();
        group.bench_with_input(BenchmarkId::new("sequential", count), &points, |b, pts| {
            b.iter(|| black_box(exec::map_sequential(pts, eval)))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", count), &points, |b, pts| {
            b.iter(|| black_box(exec::map_parallel(pts, eval)))
        });
    }
    group.finish();
}

fn bench_fock_batch(c: &mut Criterion) {
    let mode = FieldMode::relative(1.0, 0.1, 0.1).unwrap();
    let mut group = c.benchmark_group("fock_oracle_batch");
    group.sample_size(10);
    for count in [4usize, 16] {
        let points = omega_ts(count);
        let eval = |wt: &f64| {
            fock_oracle(&mode, mode.time_at(*wt), &EQUAL_WEIGHTS, FockOptions::new(30))
                .unwrap()
                .density
                .negativity()
        };
        group.bench_with_input(BenchmarkId::new("sequential", count), &points, |b, pts| {
            b.iter(|| black_box(exec::map_sequential(pts, eval)))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", count), &points, |b, pts| {
            b.iter(|| black_box(exec::map_parallel(pts, eval)))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_closed_form_sweep, bench_fock_batch);
criterion_main!(benches);
