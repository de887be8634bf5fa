use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use maximin_bench::instance;
use maximin_core::instances::RegionSpec;
use maximin_core::mesh::delaunay;
use maximin_core::solvers::{apollonius_global, btst, multistart_heuristic, BtstVariant};
use maximin_core::SolverConfig;
use std::hint::black_box;

fn solvers(c: &mut Criterion) {
    let inst = instance(100, RegionSpec::Hull);
    let cfg = SolverConfig::default();
    let mut g = c.benchmark_group("solvers_n100");
    g.sample_size(10);
    g.bench_function("apollonius", |b| b.iter(|| apollonius_global(black_box(&inst), &cfg)));
    for (name, variant) in [("btst1", BtstVariant::Btst1), ("btst2", BtstVariant::Btst2)] {
        g.bench_function(name, |b| b.iter(|| btst(black_box(&inst), variant, &cfg).unwrap()));
    }
    let few = SolverConfig { starts: 100, ..SolverConfig::default() };
    g.bench_function("heuristic_100_starts", |b| b.iter(|| multistart_heuristic(black_box(&inst), &few, None)));
    g.finish();
}

fn triangulation(c: &mut Criterion) {
    let mut g = c.benchmark_group("delaunay");
    for n in [100, 1000] {
        let inst = instance(n, RegionSpec::Hull);
        g.bench_with_input(BenchmarkId::from_parameter(n), &inst, |b, inst| {
            b.iter(|| delaunay(black_box(inst.points())).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, solvers, triangulation);
criterion_main!(benches);
