use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use qwatson::verify::run_suite_sequential;
use qwatson::{IdentityId, SampleConfig};

fn config() -> SampleConfig {
    SampleConfig {
        trials: 20,
        ..SampleConfig::default()
    }
}

fn suite(c: &mut Criterion) {
    let cfg = config();
    let mut group = c.benchmark_group("full-catalog");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| run_suite_sequential(black_box(&cfg), &IdentityId::ALL).unwrap())
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| qwatson::verify::run_suite_parallel(black_box(&cfg), &IdentityId::ALL).unwrap())
    });
    group.finish();
}

criterion_group!(benches, suite);
criterion_main!(benches);
