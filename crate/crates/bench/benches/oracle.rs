use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sierpinski_eip::graphs::GraphSpec;
use sierpinski_eip::oracle::{exact_profile, exact_profile_ideals, nested_solutions_exists};
use sierpinski_eip::{DecoratedContext, Sierpinski, StabOrder};
use sierpinski_eip_bench::{serial_budget, SWEEP_SIZES};

fn full_sweep(c: &mut Criterion) {
    let budget = serial_budget();
    let mut group = c.benchmark_group("full-sweep");
    group.sample_size(10);
    for &(n, m) in SWEEP_SIZES {
        let g = Sierpinski::new(n, m).unwrap().to_graph().unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(format!("S({n},{m})")), &g, |b, g| {
            b.iter(|| exact_profile(g, &budget).unwrap())
        });
    }
    group.finish();
}

fn ideal_search(c: &mut Criterion) {
    let budget = serial_budget();
    let mut group = c.benchmark_group("ideal-search");
    group.sample_size(10);
    for &(n, m) in SWEEP_SIZES {
        let g = Sierpinski::new(n, m).unwrap();
        let order = StabOrder::build(n, m).unwrap();
        let ctx = DecoratedContext::plain(m);
        group.bench_with_input(BenchmarkId::from_parameter(format!("S({n},{m})")), &(), |b, _| {
            b.iter(|| exact_profile_ideals(&g, &order, &ctx, &budget).unwrap())
        });
    }
    group.finish();
}

fn nested(c: &mut Criterion) {
    let budget = serial_budget();
    let g = GraphSpec::gasket(3).unwrap().materialize().unwrap();
    let mut group = c.benchmark_group("nested");
    group.sample_size(10);
    group.bench_function("SG3", |b| b.iter(|| nested_solutions_exists(&g, &budget).unwrap()));
    group.finish();
}

criterion_group!(benches, full_sweep, ideal_search, nested);
criterion_main!(benches);
