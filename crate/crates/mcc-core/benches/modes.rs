//! Sequential vs parallel timings for the two heavy kernels: the span
//! closure (row reduction of all monomial shifts) and the verification
//! corpus. Run with `cargo bench -p mcc-core`.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use mcc_core::corpus::{run_corpus, CorpusConfig};
use mcc_core::gf::FieldSpec;
use mcc_core::ideal::span_closure;
use mcc_core::qring::RingSpec;
use mcc_core::ExecMode;

fn closure_inputs() -> Vec<(&'static str, RingSpec, Vec<&'static str>)> {
    let f2 = FieldSpec::prime(2).unwrap();
    let f3 = FieldSpec::prime(3).unwrap();
    vec![
        (
            "gf2_8x8",
            RingSpec::new(f2.clone(), &[8, 8]).unwrap(),
            vec!["1 + x1 + x2^3", "x1^5*x2 + x2^6"],
        ),
        (
            "gf2_16x16",
            RingSpec::new(f2.clone(), &[16, 16]).unwrap(),
            vec!["1 + x1^3 + x1*x2^7"],
        ),
        (
            "gf2_8x8x8",
            RingSpec::new(f2, &[8, 8, 8]).unwrap(),
            vec!["1 + x1*x2 + x3^5"],
        ),
        (
            "gf3_9x9",
            RingSpec::new(f3, &[9, 9]).unwrap(),
            vec!["1 + 2*x1^4 + x2^2", "x1 + 2*x2^8"],
        ),
    ]
}

fn bench_span_closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("span_closure");
    group.sample_size(10);
    for (label, spec, gens) in closure_inputs() {
        let gens: Vec<_> = gens
            .iter()
            .map(|g| spec.parse_polynomial(g).unwrap())
            .collect();
        for mode in [ExecMode::Sequential, ExecMode::Parallel] {
            group.bench_with_input(
                BenchmarkId::new(label, mode.name()),
                &mode,
                |b, &mode| {
                    b.iter(|| {
                        let basis =
                            span_closure(black_box(&spec), black_box(&gens), mode).unwrap();
                        black_box(basis.len())
                    })
                },
            );
        }
    }
    group.finish();
}

fn bench_corpus(c: &mut Criterion) {
    let mut group = c.benchmark_group("corpus");
    group.sample_size(10);
    let cfg = CorpusConfig {
        random_cases: 40,
        codewords_per_case: 25,
        deg_prod_pairs: 100,
        ..CorpusConfig::default()
    };
    for mode in [ExecMode::Sequential, ExecMode::Parallel] {
        group.bench_with_input(
            BenchmarkId::new("run_40_cases", mode.name()),
            &mode,
            |b, &mode| {
                b.iter(|| {
                    let report = run_corpus(black_box(&cfg), mode);
                    assert!(report.passed());
                    black_box(report.proven_count())
                })
            },
        );
    }
    group.finish();
}

criterion_group!(benches, bench_span_closure, bench_corpus);
criterion_main!(benches);
