//! Compares the sequential survey against the rayon-sharded one on a
//! fixed exhaustive stream. Build with `--no-default-features` to bench
//! the purely sequential fallback on its own.

use criterion::{criterion_group, criterion_main, Criterion};

use heavyham::cycles::DEFAULT_BUDGET;
use heavyham::harness::{survey, ImplicationSpec, Source};
use heavyham::patterns::PatternId;

fn bench_survey(c: &mut Criterion) {
    let spec = ImplicationSpec::heavy(&[PatternId::K13, PatternId::W]);
    let source = Source::Exhaustive {
        n_max: 6,
        dedup_isomorphic: false,
    };
    let mut group = c.benchmark_group("exhaustive_sweep_n6");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| survey(&spec, &source, DEFAULT_BUDGET, 1).unwrap())
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel_default_pool", |b| {
        b.iter(|| survey(&spec, &source, DEFAULT_BUDGET, 0).unwrap())
    });
    group.finish();

    let mut gen_group = c.benchmark_group("random_survey_n10");
    let random = Source::Random {
        count: 2_000,
        n_min: 10,
        n_max: 10,
        edge_prob: 0.5,
        seed: 7,
    };
    gen_group.sample_size(10);
    gen_group.bench_function("sequential", |b| {
        b.iter(|| survey(&spec, &random, DEFAULT_BUDGET, 1).unwrap())
    });
    #[cfg(feature = "parallel")]
    gen_group.bench_function("parallel_default_pool", |b| {
        b.iter(|| survey(&spec, &random, DEFAULT_BUDGET, 0).unwrap())
    });
    gen_group.finish();
}

criterion_group!(benches, bench_survey);
criterion_main!(benches);
