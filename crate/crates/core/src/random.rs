//! Seeded generators for the sampled checks.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgElement, AlgebraParams, Monomial};
use crate::hyperbolic::MaxIdealPoint;
use crate::qfield::FieldElem;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational function: a polynomial of degree at most 2 with
/// coefficients in `-3..=3`, over `1`, `q^k` or `q + c`.
pub fn field_elem<R: Rng>(rng: &mut R) -> FieldElem {
    let mut num = FieldElem::zero();
    for k in 0..3 {
        let c = rng.random_range(-3i64..=3);
        num += &(FieldElem::from_int(c) * FieldElem::q_pow(k));
    }
    match rng.random_range(0..3) {
        0 => num,
        1 => num * FieldElem::q_pow(-rng.random_range(1i64..=3)),
        _ => {
            let c = FieldElem::from_int(rng.random_range(1i64..=3));
            num / (FieldElem::q() + c)
        }
    }
}

pub fn nonzero_field_elem<R: Rng>(rng: &mut R) -> FieldElem {
    loop {
        let x = field_elem(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// `±q^k` with `|k| <= 3`.
pub fn signed_q_power<R: Rng>(rng: &mut R) -> FieldElem {
    let x = FieldElem::q_pow(rng.random_range(-3i64..=3));
    if rng.random_bool(0.5) {
        -x
    } else {
        x
    }
}

/// A random element with up to `terms` monomials whose exponents are at
/// most `max_exp` in absolute value.
pub fn alg_element<R: Rng>(rng: &mut R, params: AlgebraParams, terms: usize, max_exp: u32) -> AlgElement {
    let e = max_exp as i32;
    AlgElement::from_terms(
        params,
        (0..terms).map(|_| {
            let mono = Monomial::new(
                rng.random_range(0..=max_exp),
                rng.random_range(-e..=e),
                rng.random_range(-e..=e),
                rng.random_range(0..=max_exp),
            );
            (mono, nonzero_field_elem(rng))
        }),
    )
}

/// A random monomial with exponents bounded by `max_exp`.
pub fn monomial<R: Rng>(rng: &mut R, max_exp: u32) -> Monomial {
    let e = max_exp as i32;
    Monomial::new(
        rng.random_range(0..=max_exp),
        rng.random_range(-e..=e),
        rng.random_range(-e..=e),
        rng.random_range(0..=max_exp),
    )
}

/// A point drawn from one of several families so that every spectral case
/// occurs: `OneFinite(n)` with `n <= max_n`, `OneInfinity`, `InfinityOne`
/// and generic points.
pub fn point<R: Rng>(rng: &mut R, m: u32, max_n: u32) -> MaxIdealPoint {
    let mi = m as i64;
    let beta = signed_q_power(rng) * FieldElem::from_int(rng.random_range(1i64..=2));
    let on_lowest = |beta: &FieldElem, gamma: &FieldElem| (beta.pow(mi) - gamma.pow(mi)) / FieldElem::q_minus_qinv();
    let (alpha, gamma) = match rng.random_range(0..4) {
        0 => {
            let n = rng.random_range(0..=max_n) as i64;
            let sign = if m.is_multiple_of(2) && rng.random_bool(0.5) { -FieldElem::one() } else { FieldElem::one() };
            let gamma = &beta * FieldElem::q_pow(-2 * n) * sign;
            (on_lowest(&beta, &gamma), gamma)
        }
        1 => {
            let gamma = &beta * FieldElem::from_int(3) * FieldElem::q_pow(rng.random_range(-2i64..=2));
            (on_lowest(&beta, &gamma), gamma)
        }
        2 => (FieldElem::zero(), nonzero_field_elem(rng)),
        _ => (field_elem(rng), nonzero_field_elem(rng)),
    };
    MaxIdealPoint::new(alpha, beta, gamma, m).expect("beta and gamma are nonzero")
}
