use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use heegner_bench::{sample_tau, FIELD_N};
use heegner_core::conjugates::norm_u;
use heegner_core::cubic::{class_group, fundamental_unit, CubicField};
use heegner_core::heegner::{finalize, trace_point, HeegnerJob};
use heegner_core::modular::eval_phi;

fn modular(c: &mut Criterion) {
    let mut g = c.benchmark_group("eval_phi");
    for prec in [256, 1024, 4096] {
        let tau = sample_tau(prec + 32);
        g.bench_with_input(BenchmarkId::from_parameter(prec), &prec, |b, &p| b.iter(|| eval_phi(&tau, p).unwrap()));
    }
    g.finish();
}

fn cubic(c: &mut Criterion) {
    let mut g = c.benchmark_group("cubic_field");
    for n in FIELD_N {
        let f = CubicField::new(n).unwrap();
        g.bench_with_input(BenchmarkId::new("fundamental_unit", n), &f, |b, f| b.iter(|| fundamental_unit(f).unwrap()));
        g.bench_with_input(BenchmarkId::new("class_group", n), &f, |b, f| b.iter(|| class_group(f).unwrap()));
    }
    g.finish();
}

fn conjugates(c: &mut Criterion) {
    let mut g = c.benchmark_group("conjugates");
    g.sample_size(10);
    for n in [5i64, 25, 41] {
        g.bench_with_input(BenchmarkId::new("norm_u", n), &n, |b, &n| b.iter(|| norm_u(n, 384).unwrap()));
        g.bench_with_input(BenchmarkId::new("trace_point", n), &n, |b, &n| b.iter(|| trace_point(n, 1, 384).unwrap()));
    }
    g.finish();
}

fn construct(c: &mut Criterion) {
    let mut g = c.benchmark_group("construct");
    g.sample_size(10);
    let job = HeegnerJob::new(5, 1, 384).unwrap();
    g.bench_function("5,1", |b| b.iter(|| finalize(&job).unwrap()));
    g.finish();
}

criterion_group!(benches, modular, cubic, conjugates, construct);
criterion_main!(benches);
