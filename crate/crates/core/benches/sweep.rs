use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use specbound::search::{sweep_order, Execution, SweepOptions};
use specbound::MatrixKind;

fn exhaustive(c: &mut Criterion) {
    let mut group = c.benchmark_group("exhaustive-Q-k2");
    group.sample_size(10);
    for n in [5, 6] {
        let mut modes = vec![("serial", Execution::Serial)];
        if cfg!(feature = "parallel") {
            modes.push(("parallel", Execution::Parallel));
        }
        for (name, execution) in modes {
            let opts = SweepOptions { execution, ..SweepOptions::default() };
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| sweep_order(n, 2, MatrixKind::Q, &opts).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, exhaustive);
criterion_main!(benches);
