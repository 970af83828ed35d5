use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use multispec::oracle::classical_pages;
use multispec::rumin::Rumin;
use multispec::spectral::Spectral;
use multispec_bench::{engel, random};

fn rumin(c: &mut Criterion) {
    let mut g = c.benchmark_group("rumin");
    for d in [2, 3] {
        let mc = engel(d);
        g.bench_with_input(BenchmarkId::new("engel", d), &mc, |b, mc| b.iter(|| Rumin::build(mc)));
    }
    let mc = random(7);
    g.bench_function("random", |b| b.iter(|| Rumin::build(&mc)));
    g.finish();
}

fn spectral(c: &mut Criterion) {
    let mut g = c.benchmark_group("spectral");
    g.sample_size(10);
    for d in [2, 3] {
        let rumin = Rumin::build(&engel(d));
        g.bench_with_input(BenchmarkId::new("engel", d), &rumin, |b, rumin| {
            b.iter(|| Spectral::new(rumin).enumerate(256))
        });
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    let mc = engel(2);
    g.bench_function("engel/2", |b| b.iter(|| classical_pages(&mc, 5)));
    let mc = random(7);
    g.bench_function("random", |b| b.iter(|| classical_pages(&mc, 6)));
    g.finish();
}

criterion_group!(benches, rumin, spectral, oracle);
criterion_main!(benches);
