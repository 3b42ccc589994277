//! Sequential against rayon-parallel execution of the sweeps that dominate
//! the acceptance suite. Without the `parallel` feature both modes run
//! sequentially.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use bandbraid::foliation::{key_lemma_check, sample_complex, SampleProfile};
use bandbraid::lab::{enumerate_and_verify, EnumerateConfig, Property, Sweep};
use bandbraid::par::{map_indices, Execution};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn enumerate(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    for (property, max_length) in [(Property::SlMarkov, 5), (Property::NfVsOracle, 5), (Property::Garside, 4)] {
        for (mode, exec) in MODES {
            let mut cfg = EnumerateConfig::new(3, max_length, property, Sweep::Exhaustive);
            cfg.execution = exec;
            g.bench_with_input(BenchmarkId::new(property.name(), mode), &cfg, |b, cfg| {
                b.iter(|| black_box(enumerate_and_verify(cfg).unwrap()))
            });
        }
    }
    g.finish();
}

fn key_lemma(c: &mut Criterion) {
    let mut g = c.benchmark_group("key-lemma");
    g.sample_size(10);
    for (mode, exec) in MODES {
        g.bench_function(BenchmarkId::new("2000 complexes", mode), |b| {
            b.iter(|| {
                let held = map_indices(exec, 2000, |i| {
                    key_lemma_check(&sample_complex(1, i, SampleProfile::KeyLemma)).is_ok_and(|r| r.holds)
                });
                black_box(held.iter().filter(|h| **h).count())
            })
        });
    }
    g.finish();
}

criterion_group!(benches, enumerate, key_lemma);
criterion_main!(benches);
