//! Compares the rayon-parallel entry points against their always-sequential
//! fallbacks. With `--no-default-features` both sides run sequentially, which
//! gives the dispatch overhead baseline.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use relequiv_core::exact::Cyclotomic;
use relequiv_core::group::{close_group, GeneratorInput, GradedGroup};
use relequiv_core::matrix::CycMatrix;
use relequiv_core::molien::{molien_series, molien_series_seq, Kind};
use relequiv_core::poly::{Mono, Poly};
use relequiv_core::presets;
use relequiv_core::reynolds::{average_over_k, average_over_k_seq};

fn diag(values: &[Cyclotomic]) -> CycMatrix {
    let n = values.len();
    let mut rows = vec![vec![Cyclotomic::zero(); n]; n];
    for (i, v) in values.iter().enumerate() {
        rows[i][i] = v.clone();
    }
    CycMatrix::from_rows(rows)
}

/// Z6 x Z6 acting diagonally on four variables, graded mod 3 by the second
/// factor: order 36, kernel of order 12.
fn z6xz6() -> GradedGroup {
    let z = |k: i64| Cyclotomic::root_of_unity(k, 6);
    let one = Cyclotomic::one();
    let a = GeneratorInput {
        rho: diag(&[z(1), z(5), one.clone(), one.clone()]),
        eta: Some(diag(&[z(1), one.clone()])),
        sigma: 0,
    };
    let b = GeneratorInput {
        rho: diag(&[one.clone(), one.clone(), z(1), z(5)]),
        eta: Some(diag(&[one.clone(), z(1)])),
        sigma: 1,
    };
    close_group(&[a, b], 3, 100).expect("valid bench group")
}

fn bench_molien(c: &mut Criterion) {
    let paper = presets::z3xz3();
    let big = z6xz6();
    let mut group = c.benchmark_group("molien_series");
    group.sample_size(10);
    group.bench_function("order9_dmax10_par", |b| {
        b.iter(|| molien_series(black_box(&paper), 0, Kind::Equivariant, 10).unwrap())
    });
    group.bench_function("order9_dmax10_seq", |b| {
        b.iter(|| molien_series_seq(black_box(&paper), 0, Kind::Equivariant, 10).unwrap())
    });
    group.bench_function("order36_dmax12_par", |b| {
        b.iter(|| molien_series(black_box(&big), 1, Kind::Equivariant, 12).unwrap())
    });
    group.bench_function("order36_dmax12_seq", |b| {
        b.iter(|| molien_series_seq(black_box(&big), 1, Kind::Equivariant, 12).unwrap())
    });
    group.finish();
}

fn bench_kernel_average(c: &mut Criterion) {
    let big = z6xz6();
    // a dense-ish degree-6 polynomial in four variables
    let mut f = Poly::zero(4);
    for (i, mono) in relequiv_core::poly::monomials_of_degree(4, 6).into_iter().enumerate() {
        let coeff = Cyclotomic::from_integer((i % 5) as i64 + 1);
        f = f.add(&Poly::monomial(Mono(mono.0), coeff));
    }
    let mut group = c.benchmark_group("kernel_average");
    group.sample_size(10);
    group.bench_function("order36_deg6_par", |b| {
        b.iter(|| average_over_k(black_box(&big), black_box(&f)))
    });
    group.bench_function("order36_deg6_seq", |b| {
        b.iter(|| average_over_k_seq(black_box(&big), black_box(&f)))
    });
    group.finish();
}

criterion_group!(benches, bench_molien, bench_kernel_average);
criterion_main!(benches);
