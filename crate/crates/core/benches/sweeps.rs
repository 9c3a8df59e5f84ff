use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use grouptrix::group::parse_group;
use grouptrix::hierarchy::{build, BuildOptions, GraphKind};
use grouptrix::Exec;

fn pair_sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("pair_sweeps");
    group.sample_size(10);
    for spec in ["alt:5", "psl2:7", "psl2:11"] {
        let g = parse_group(spec).unwrap();
        for kind in [GraphKind::NGen, GraphKind::Nilp, GraphKind::Com] {
            for exec in [Exec::Sequential, Exec::Parallel] {
                let id = BenchmarkId::new(format!("{kind}/{exec:?}"), spec);
                let opts = BuildOptions::with_exec(exec);
                group.bench_with_input(id, &g, |b, g| b.iter(|| build(g, kind, None, &opts).unwrap()));
            }
        }
    }
    group.finish();
}

criterion_group!(benches, pair_sweeps);
criterion_main!(benches);
