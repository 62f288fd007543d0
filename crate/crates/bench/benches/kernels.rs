//! Timings of the exact kernels the sweeps lean on.

use acvar_core::acv::{conormal_space, jordan_block, normal_form, stabilizer_dim};
use acvar_core::altpoly::freeness_certificate;
use acvar_core::cherednik::{pbw_count, relation_failures};
use acvar_core::poly::var_names;
use acvar_core::quiver::{component_count, AffineQuiver, Limits, Weight};
use acvar_core::random;
use acvar_core::{RatVector, Rational};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn linear_algebra(c: &mut Criterion) {
    let mut rng = random::rng(1);
    let m = random::matrix(&mut rng, 12, 12, 20);
    c.bench_function("rank_kernel 12x12", |b| {
        b.iter(|| black_box(&m).rank_kernel())
    });
    let p = random::normal_form_params(&mut rng, 4, 2, 2, 20).unwrap();
    let q = normal_form(&p).unwrap();
    c.bench_function("stabilizer_dim n=4", |b| {
        b.iter(|| stabilizer_dim(black_box(&q)).unwrap())
    });
    let x = jordan_block(&Rational::from_integer(2.into()), 4);
    let i = RatVector::unit(4, 1);
    c.bench_function("conormal_space jordan n=4", |b| {
        b.iter(|| conormal_space(black_box(&x), &i).unwrap())
    });
}

fn combinatorics(c: &mut Criterion) {
    let f = AffineQuiver::jordan().frame(6);
    let lambda = Weight::zero(f.quiver.vertices);
    c.bench_function("component_count jordan n=6", |b| {
        b.iter(|| component_count(&f.quiver, &lambda, &f.alpha, Limits::default()).unwrap())
    });
}

fn algebra(c: &mut Criterion) {
    let mut rng = random::rng(2);
    let f = random::polynomial(&mut rng, var_names("x", 3), 5, 6, 9).to_c();
    c.bench_function("dunkl relations n=3 deg 5", |b| {
        b.iter(|| relation_failures(black_box(&f)).unwrap())
    });
    c.bench_function("pbw_count n=2 d=3", |b| b.iter(|| pbw_count(2, 3)));
    let mut g = c.benchmark_group("freeness");
    g.sample_size(10);
    g.bench_function("n=2 k=2 up to (3,3)", |b| {
        b.iter(|| freeness_certificate(2, 2, (3, 3)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, linear_algebra, combinatorics, algebra);
criterion_main!(benches);
