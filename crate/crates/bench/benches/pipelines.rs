//! Benches over the main pipelines: stratum sums, localization integrals,
//! graded quotient construction, and the correlator cross-check.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use stablemap_core::chow::{by_name, GradedQuotient};
use stablemap_core::correlators::cross_check_all;
use stablemap_core::localization::{integrals_table, Space};
use stablemap_core::serre::poincare_m02;

fn bench_poincare(c: &mut Criterion) {
    c.bench_function("poincare_m02_r8", |b| b.iter(|| poincare_m02(black_box(8))));
}

fn bench_integrals(c: &mut Criterion) {
    c.bench_function("integrals_table_m02d2", |b| {
        b.iter(|| integrals_table(black_box(Space::TwoPoint)))
    });
}

fn bench_quotient(c: &mut Criterion) {
    c.bench_function("graded_quotient_m02d2", |b| {
        b.iter(|| GradedQuotient::build(by_name(black_box("m02d2")).unwrap()).unwrap())
    });
}

fn bench_correlators(c: &mut Criterion) {
    let q = GradedQuotient::build(by_name("m02d2").unwrap()).unwrap();
    c.bench_function("correlator_cross_check", |b| b.iter(|| cross_check_all(&q)));
}

criterion_group!(
    benches,
    bench_poincare,
    bench_integrals,
    bench_quotient,
    bench_correlators
);
criterion_main!(benches);
