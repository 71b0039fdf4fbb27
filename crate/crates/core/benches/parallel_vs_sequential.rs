//! Sequential vs rayon execution of the exact pipeline and the numeric oracle.
//!
//! Without the `parallel` feature both variants run sequentially.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use wres_core::drivers::{boundary_phi, interior_wres, InteriorVariant, VStarMode};
use wres_core::jets::OperatorKind::{D3, Dv, DvStar};
use wres_core::numcheck::{crosscheck, NumericScenario, SphereRule, Tolerance};
use wres_core::par::{with_mode, ExecMode};

const MODES: [(&str, ExecMode); 2] = [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)];

fn exact(c: &mut Criterion) {
    let mut g = c.benchmark_group("boundary_exact");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(format!("n4_mixed/{name}"), |b| {
            b.iter(|| with_mode(mode, || boundary_phi(4, black_box(Dv), DvStar, VStarMode::Dual).unwrap()))
        });
        g.bench_function(format!("n6/{name}"), |b| {
            b.iter(|| with_mode(mode, || boundary_phi(6, black_box(Dv), D3, VStarMode::Dual).unwrap()))
        });
    }
    g.finish();

    let mut g = c.benchmark_group("interior_exact");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(format!("n6_mixed/{name}"), |b| {
            b.iter(|| with_mode(mode, || interior_wres(6, black_box(InteriorVariant::DvStarDv), VStarMode::Dual).unwrap()))
        });
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let exact = boundary_phi(4, Dv, DvStar, VStarMode::Dual).unwrap();
    let sc = NumericScenario::new(4, 1, VStarMode::Dual, SphereRule::CrossPolytope { rotations: 1 }).unwrap();
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(format!("n4_crosscheck/{name}"), |b| {
            b.iter(|| with_mode(mode, || crosscheck(black_box(&exact), &sc, Tolerance::default()).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, exact, oracle);
criterion_main!(benches);
