use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use relhom_core::diagnostics::suites::Suite;
use relhom_core::hom::hom_space;
use relhom_core::relative::left_dims;
use relhom_core::resolution::ext_dims;
use relhom_core::{corpus, ApproxClass, FMatrix, FieldSpec};

/// A dense pseudo-random matrix from a linear congruential stream.
fn matrix(p: u32, n: usize, seed: u64) -> FMatrix {
    let mut s = seed;
    let data = (0..n * n)
        .map(|_| {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 33) % u64::from(p)) as u32
        })
        .collect();
    FMatrix::from_vec(FieldSpec::new(p).unwrap(), n, n, data).unwrap()
}

fn linear_algebra(c: &mut Criterion) {
    let mut g = c.benchmark_group("rref");
    for n in [8, 32, 64] {
        let m = matrix(5, n, n as u64);
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| black_box(m.rref())));
    }
    g.finish();
}

fn homological(c: &mut Criterion) {
    let k = corpus::module("r3", "k");
    let omega = corpus::module("r3", "omega");
    c.bench_function("hom_space r3 omega omega", |b| b.iter(|| hom_space(black_box(&omega), &omega).unwrap()));
    c.bench_function("ext r3 k k through 4", |b| b.iter(|| ext_dims(black_box(&k), &k, 4).unwrap()));
    let cls = ApproxClass::certified_add(&omega, 6).unwrap();
    c.bench_function("left dims r3 add(omega) k", |b| b.iter(|| left_dims(&cls, black_box(&k), 6).unwrap()));
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    for s in [Suite::ExactResolutions, Suite::AdjointExt] {
        g.bench_function(s.name(), |b| b.iter(|| s.run(6).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, linear_algebra, homological, suites);
criterion_main!(benches);
