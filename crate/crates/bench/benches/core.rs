use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use fermat_core::audit::counterpart_existence_audit;
use fermat_core::identity::{term_match_report, verify_duality, verify_reduction_identity};
use fermat_core::poly::{build_flt_poly, isolate_positive_roots, rational_root_test, refine};
use fermat_core::q;
use fermat_core::search::{lemma31_search, rational_solution_search};

fn roots(c: &mut Criterion) {
    let mut group = c.benchmark_group("positive_root");
    for n in [3u32, 8, 16, 32] {
        let p = build_flt_poly(n, &q(7, 3)).unwrap();
        group.bench_with_input(BenchmarkId::new("isolate_refine_128", n), &p, |b, p| {
            b.iter(|| {
                let e = &isolate_positive_roots(black_box(p)).unwrap()[0];
                refine(p, e, 128).unwrap()
            })
        });
        group.bench_with_input(BenchmarkId::new("rational_root_test", n), &p, |b, p| {
            b.iter(|| rational_root_test(black_box(p)).unwrap())
        });
    }
    group.finish();
}

fn symbolic(c: &mut Criterion) {
    let mut group = c.benchmark_group("symbolic");
    group.sample_size(10);
    for n in [4u32, 12, 24] {
        group.bench_with_input(BenchmarkId::new("reduction", n), &n, |b, &n| {
            b.iter(|| verify_reduction_identity(black_box(n)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("duality", n), &n, |b, &n| {
            b.iter(|| verify_duality(black_box(n)).unwrap())
        });
    }
    group.bench_function("term_match_12", |b| {
        b.iter(|| term_match_report(black_box(12)).unwrap())
    });
    group.finish();
}

fn searches(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    group.bench_function("lemma31_10000", |b| {
        b.iter(|| lemma31_search(black_box(10_000)).unwrap())
    });
    group.bench_function("rational_scan_n3_h30", |b| {
        b.iter(|| rational_solution_search(black_box(3), 30).unwrap())
    });
    group.bench_function("audit_n5", |b| {
        b.iter(|| counterpart_existence_audit(black_box(5), &q(5, 2), 128).unwrap())
    });
    group.finish();
}

criterion_group!(benches, roots, symbolic, searches);
criterion_main!(benches);
