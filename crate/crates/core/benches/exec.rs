use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sp6_core::linalg::minor_vanishing;
use sp6_core::{orbits, slicegeom, Exec};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn symbolic_minors(c: &mut Criterion) {
    let m = slicegeom::symbolic_slice();
    let mut group = c.benchmark_group("rank_le_4_symbolic");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| minor_vanishing(&m, 5, exec).unwrap()));
    }
    group.finish();
}

fn sample_suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("sample_suites");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new("deformation_p1", name), |b| {
            b.iter(|| slicegeom::deformation_family_check(&[1, 2, 2, 1], 32, 7, exec).unwrap())
        });
        group.bench_function(BenchmarkId::new("orbit_closures", name), |b| b.iter(|| orbits::power_closure_check(64, 7, exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, symbolic_minors, sample_suites);
criterion_main!(benches);
