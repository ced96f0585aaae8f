//! Oracles that do not share code paths with the library's fast routines.
#![allow(dead_code)]

use std::collections::BTreeMap;

use uqfm_core::algebra::{AlgElement, AlgebraParams, Monomial};
use uqfm_core::qfield::FieldElem;

pub fn fe(s: &str) -> FieldElem {
    FieldElem::parse(s).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Letter {
    F,
    K(i32),
    H(i32),
    E,
}

fn rank(l: Letter) -> u8 {
    match l {
        Letter::F => 0,
        Letter::K(_) => 1,
        Letter::H(_) => 2,
        Letter::E => 3,
    }
}

fn word(mono: &Monomial) -> Vec<Letter> {
    let mut w = vec![Letter::F; mono.a as usize];
    if mono.i != 0 {
        w.push(Letter::K(mono.i));
    }
    if mono.j != 0 {
        w.push(Letter::H(mono.j));
    }
    w.extend(std::iter::repeat_n(Letter::E, mono.b as usize));
    w
}

/// Position of the first adjacent pair that is not in `F K H E` order.
fn first_descent(w: &[Letter]) -> Option<usize> {
    (0..w.len().saturating_sub(1)).find(|&p| {
        let (x, y) = (w[p], w[p + 1]);
        rank(x) > rank(y) || (rank(x) == rank(y) && matches!(x, Letter::K(_) | Letter::H(_)))
    })
}

fn splice(w: &[Letter], p: usize, middle: &[Letter]) -> Vec<Letter> {
    let mut out = w[..p].to_vec();
    out.extend(middle.iter().copied().filter(|l| !matches!(l, Letter::K(0) | Letter::H(0))));
    out.extend_from_slice(&w[p + 2..]);
    out
}

/// Normal form of a product of two monomials, computed by rewriting the
/// concatenated word one adjacent pair at a time with the defining
/// relations of the two-parameter algebra.
pub fn oracle_product(m: u32, x: &Monomial, y: &Monomial) -> AlgElement {
    let params = AlgebraParams::two_param(m);
    let mi = m as i32;
    let d = FieldElem::q_minus_qinv().inv();
    let mut pending: Vec<(Vec<Letter>, FieldElem)> = {
        let mut w = word(x);
        w.extend(word(y));
        vec![(w, FieldElem::one())]
    };
    let mut done: BTreeMap<Vec<Letter>, FieldElem> = BTreeMap::new();
    while let Some((w, c)) = pending.pop() {
        let Some(p) = first_descent(&w) else {
            *done.entry(w).or_default() += &c;
            continue;
        };
        let q = |k: i64| FieldElem::q_pow(k);
        match (w[p], w[p + 1]) {
            (Letter::E, Letter::F) => {
                pending.push((splice(&w, p, &[Letter::F, Letter::E]), c.clone()));
                pending.push((splice(&w, p, &[Letter::K(mi)]), &c * &d));
                pending.push((splice(&w, p, &[Letter::H(mi)]), -(&c * &d)));
            }
            (Letter::E, Letter::K(i)) => {
                pending.push((splice(&w, p, &[Letter::K(i), Letter::E]), &c * q(-2 * i as i64)))
            }
            (Letter::E, Letter::H(j)) => {
                pending.push((splice(&w, p, &[Letter::H(j), Letter::E]), &c * q(2 * j as i64)))
            }
            (Letter::K(i), Letter::F) => {
                pending.push((splice(&w, p, &[Letter::F, Letter::K(i)]), &c * q(-2 * i as i64)))
            }
            (Letter::H(j), Letter::F) => {
                pending.push((splice(&w, p, &[Letter::F, Letter::H(j)]), &c * q(2 * j as i64)))
            }
            (Letter::H(j), Letter::K(i)) => pending.push((splice(&w, p, &[Letter::K(i), Letter::H(j)]), c)),
            (Letter::K(i), Letter::K(k)) => pending.push((splice(&w, p, &[Letter::K(i + k)]), c)),
            (Letter::H(j), Letter::H(k)) => pending.push((splice(&w, p, &[Letter::H(j + k)]), c)),
            pair => unreachable!("{pair:?} is not a descent"),
        }
    }
    AlgElement::from_terms(
        params,
        done.into_iter().map(|(w, c)| {
            let mut mono = Monomial::new(0, 0, 0, 0);
            for l in w {
                match l {
                    Letter::F => mono.a += 1,
                    Letter::K(i) => mono.i += i,
                    Letter::H(j) => mono.j += j,
                    Letter::E => mono.b += 1,
                }
            }
            (mono, c)
        }),
    )
}

/// Product of two elements through [`oracle_product`] on every pair of
/// terms.
pub fn oracle_mul(x: &AlgElement, y: &AlgElement) -> AlgElement {
    let m = x.params().m;
    let mut out = AlgElement::zero(x.params());
    for (mx, cx) in x.terms() {
        for (my, cy) in y.terms() {
            out = &out + &oracle_product(m, mx, my).scale(&(cx * cy));
        }
    }
    out
}

/// Coefficients `(a_n, b_n)` with `θ^n(ξ) = ξ + a_n K^m + b_n H^m`, by
/// applying the one-step substitutions `ξ -> ξ + d(q^-2m K^m - q^2m H^m)`,
/// `K -> q^-2 K`, `H -> q^2 H` (or their inverses) `|n|` times.
pub fn theta_iterate(n: i64, m: u32) -> (FieldElem, FieldElem) {
    let d = FieldElem::q_minus_qinv().inv();
    let mi = m as i64;
    let (mut a, mut b) = (FieldElem::zero(), FieldElem::zero());
    for _ in 0..n.abs() {
        if n > 0 {
            a = &(&a * FieldElem::q_pow(-2 * mi)) + &(&d * FieldElem::q_pow(-2 * mi));
            b = &(&b * FieldElem::q_pow(2 * mi)) - &(&d * FieldElem::q_pow(2 * mi));
        } else {
            a = &(&a * FieldElem::q_pow(2 * mi)) - &d;
            b = &(&b * FieldElem::q_pow(-2 * mi)) + &d;
        }
    }
    (a, b)
}

/// Dense matrix product over `Q(q)`.
pub fn matmul(x: &[Vec<FieldElem>], y: &[Vec<FieldElem>]) -> Vec<Vec<FieldElem>> {
    let n = x.len();
    let k = y.len();
    let cols = y.first().map_or(0, |r| r.len());
    (0..n).map(|i| (0..cols).map(|j| (0..k).map(|l| &x[i][l] * &y[l][j]).sum()).collect()).collect()
}
