use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use uqfm_core::algebra::{casimir, AlgebraParams, HopfMap, HopfParams};
use uqfm_core::hyperbolic::{classify_spectrum, MaxIdealPoint};
use uqfm_core::qfield::FieldElem;
use uqfm_core::random;
use uqfm_core::repmod::{decompose_completely, one_param_irrep, tensor_product};
use uqfm_core::whittaker::{build_whittaker_module, WhittakerData};

fn products(c: &mut Criterion) {
    let p = AlgebraParams::two_param(2);
    let mut rng = random::rng(1);
    let x = random::alg_element(&mut rng, p, 3, 3);
    let y = random::alg_element(&mut rng, p, 3, 3);
    c.bench_function("product m=2, 3x3 terms", |b| b.iter(|| black_box(&x) * black_box(&y)));
    let omega = casimir(AlgebraParams::two_param(1));
    c.bench_function("casimir cubed m=1", |b| b.iter(|| black_box(&omega).pow(3)));
}

fn classification(c: &mut Criterion) {
    let p = MaxIdealPoint::parse("q^7-q^-7", "q^7", "q^-7", 1).unwrap();
    c.bench_function("classify OneFinite(7)", |b| b.iter(|| classify_spectrum(black_box(&p), 64).unwrap()));
    let generic = MaxIdealPoint::parse("1", "q", "1", 2).unwrap();
    c.bench_function("classify generic m=2", |b| b.iter(|| classify_spectrum(black_box(&generic), 64).unwrap()));
}

fn decomposition(c: &mut Criterion) {
    let p = AlgebraParams::one_param(1);
    let delta = HopfMap::one_param(p, HopfParams::new(0, 1, p).unwrap()).unwrap().certify().unwrap();
    let a = one_param_irrep(1, 2, false).unwrap();
    c.bench_function("decompose 3x3", |b| {
        b.iter(|| decompose_completely(&tensor_product(&a, &a, &delta).unwrap()).unwrap())
    });
}

fn whittaker(c: &mut Criterion) {
    let d = WhittakerData::new(FieldElem::q(), FieldElem::one(), FieldElem::q_pow(2), 1, 12).unwrap();
    c.bench_function("whittaker module window 12", |b| b.iter(|| build_whittaker_module(black_box(&d)).unwrap()));
}

criterion_group!(benches, products, classification, decomposition, whittaker);
criterion_main!(benches);
