use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use drg_core::search::{search, Exec, SearchConfig};

fn d3_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_d3_a1_lt_20");
    group.sample_size(10);
    let modes = [
        ("sequential", Exec::Sequential),
        ("parallel", Exec::Parallel(None)),
        ("parallel_2", Exec::Parallel(Some(2))),
    ];
    for (name, exec) in modes {
        let cfg = SearchConfig::new(3).a1_range(1..20).exec(exec);
        group.bench_with_input(BenchmarkId::from_parameter(name), &cfg, |b, cfg| {
            b.iter(|| search(cfg).unwrap().arrays.len())
        });
    }
    group.finish();
}

fn d4_slice(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_d4_a1_lt_10");
    group.sample_size(10);
    for (name, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel(None))] {
        let cfg = SearchConfig::new(4).a1_range(1..10).exec(exec);
        group.bench_with_input(BenchmarkId::from_parameter(name), &cfg, |b, cfg| {
            b.iter(|| search(cfg).unwrap().arrays.len())
        });
    }
    group.finish();
}

criterion_group!(benches, d3_sweep, d4_slice);
criterion_main!(benches);
