use altdiag::{canonical_form_weak, h1, trace};
use altdiag_bench::{alternating_params, weak_class};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn bench_trace(c: &mut Criterion) {
    let mut g = c.benchmark_group("trace");
    for n in [2, 8, 32] {
        let params = alternating_params(n)[0];
        g.bench_with_input(BenchmarkId::from_parameter(n), &params, |b, p| {
            b.iter(|| trace(black_box(p)))
        });
    }
    g.finish();
}

fn bench_h1(c: &mut Criterion) {
    let params = alternating_params(6);
    c.bench_function("h1/all n=6 classes", |b| {
        b.iter(|| {
            params
                .iter()
                .map(|p| h1(black_box(p)).unwrap())
                .collect::<Vec<_>>()
        })
    });
}

fn bench_canon(c: &mut Criterion) {
    let mut g = c.benchmark_group("canonical_form_weak");
    for n in [3, 6] {
        let alt = alternating_params(n);
        g.bench_with_input(BenchmarkId::new("alternating", n), &alt, |b, ps| {
            b.iter(|| {
                ps.iter()
                    .map(|p| canonical_form_weak(black_box(p)).unwrap())
                    .collect::<Vec<_>>()
            })
        });
        let weak = weak_class(n).to_params().unwrap();
        g.bench_with_input(BenchmarkId::new("weak", n), &weak, |b, p| {
            b.iter(|| canonical_form_weak(black_box(p)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, bench_trace, bench_h1, bench_canon);
criterion_main!(benches);
