use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use uniconv_core::{exponential, salem_g, sin_log_integral, u_norm};

fn bench_u_norm(c: &mut Criterion) {
    let mut group = c.benchmark_group("u_norm_salem_product");
    group.sample_size(10);
    for n in [64usize, 256, 1024] {
        let p = exponential(n as i64).multiply(&salem_g(n).unwrap());
        group.bench_with_input(BenchmarkId::from_parameter(n), &p, |b, p| {
            b.iter(|| u_norm(p))
        });
    }
    group.finish();
}

fn bench_multiply(c: &mut Criterion) {
    let mut group = c.benchmark_group("multiply_dense");
    for n in [64usize, 512] {
        let a = salem_g(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| {
            b.iter(|| a.multiply(a))
        });
    }
    group.finish();
}

fn bench_sin_log_integral(c: &mut Criterion) {
    c.bench_function("sin_log_integral_4096", |b| {
        b.iter(|| sin_log_integral(4096).unwrap())
    });
}

criterion_group!(benches, bench_u_norm, bench_multiply, bench_sin_log_integral);
criterion_main!(benches);
