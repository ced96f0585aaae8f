//! The Casimir element and membership in the center `Q(q)[Ω, (KH)^±1]`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{AlgElement, AlgebraParams, Monomial, Variant};
use crate::qfield::FieldElem;

fn casimir_denominator(m: u32) -> FieldElem {
    let q2m = FieldElem::q_pow(2 * m as i64);
    ((q2m - FieldElem::one()) * FieldElem::q_minus_qinv()).inv()
}

/// `Ω = FE + (q^{2m} K^m + H^m) / ((q^{2m} - 1)(q - q^-1))`.
///
/// For the one-parameter algebra this is the image under `H -> K^-1`.
pub fn casimir(params: AlgebraParams) -> AlgElement {
    let m = params.mi();
    let d = casimir_denominator(params.m);
    AlgElement::from_terms(
        params,
        [
            (Monomial::new(1, 0, 0, 1), FieldElem::one()),
            (Monomial::cartan(m, 0), FieldElem::q_pow(2 * m as i64) * &d),
            (Monomial::cartan(0, m), d),
        ],
    )
}

/// `EF + (K^m + q^{2m} H^m) / ((q^{2m} - 1)(q - q^-1))`, evaluated by
/// multiplication; equal to [`casimir`].
pub fn casimir_ef_form(params: AlgebraParams) -> AlgElement {
    let m = params.mi();
    let d = casimir_denominator(params.m);
    let ef = &AlgElement::e(params) * &AlgElement::f(params);
    let tail = AlgElement::from_terms(
        params,
        [(Monomial::cartan(m, 0), d.clone()), (Monomial::cartan(0, m), FieldElem::q_pow(2 * m as i64) * &d)],
    );
    &ef + &tail
}

/// A polynomial in `Ω` with Laurent coefficients in `KH`, keyed by
/// `(power of Ω, power of KH)`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CenterPoly {
    pub terms: BTreeMap<(u32, i32), FieldElem>,
}

impl CenterPoly {
    pub fn omega_power(k: u32, l: i32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((k, l), FieldElem::one());
        CenterPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: (u32, i32), c: FieldElem) {
        let slot = self.terms.entry(key).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Substitutes `Ω` and `KH` in the given algebra.
    pub fn to_element(&self, params: AlgebraParams) -> AlgElement {
        let omega = casimir(params);
        let mut out = AlgElement::zero(params);
        for ((k, l), c) in &self.terms {
            let kh = AlgElement::cartan(params, *l, *l);
            out = &out + &(&omega.pow(*k) * &kh).scale(c);
        }
        out
    }
}

impl fmt::Display for CenterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((k, l), c)| {
                let mut factors = Vec::new();
                if !c.is_one() || (*k == 0 && *l == 0) {
                    factors.push(if c.is_compound() { format!("({c})") } else { c.to_string() });
                }
                match k {
                    0 => {}
                    1 => factors.push("Ω".into()),
                    k => factors.push(format!("Ω^{k}")),
                }
                match l {
                    0 => {}
                    1 => factors.push("(KH)".into()),
                    l => factors.push(format!("(KH)^{l}")),
                }
                factors.join("*")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Writes `x` as a polynomial in `Ω` and `(KH)^±1` when it is central.
///
/// Works by descending induction on the `F`-degree: a central element has
/// only terms `F^d K^i H^j E^d`, and its top-degree part must be a multiple
/// of the top part of `Ω^d (KH)^l`.
pub fn center_membership(x: &AlgElement) -> Option<CenterPoly> {
    let params = x.params();
    if x.terms().keys().any(|mono| mono.a != mono.b) {
        return None;
    }
    let mut rest = x.clone();
    let mut poly = CenterPoly::default();
    let omega = casimir(params);
    let mut omega_powers = vec![AlgElement::one(params)];
    while !rest.is_zero() {
        let d = rest.f_degree();
        while omega_powers.len() <= d as usize {
            let next = omega_powers.last().unwrap() * &omega;
            omega_powers.push(next);
        }
        let top: Vec<(Monomial, FieldElem)> =
            rest.terms().iter().filter(|(mono, _)| mono.a == d).map(|(mono, c)| (*mono, c.clone())).collect();
        for (mono, c) in top {
            let l = match params.variant {
                Variant::TwoParam if mono.i == mono.j => mono.i,
                Variant::OneParam if mono.i == 0 => 0,
                _ => return None,
            };
            let basis = &omega_powers[d as usize] * &AlgElement::cartan(params, l, l);
            let lead = basis.coeff(&mono);
            if lead.is_zero() {
                return None;
            }
            let factor = &c / &lead;
            rest = &rest - &basis.scale(&factor);
            poly.add_term((d, l), factor);
        }
        if !rest.is_zero() && rest.f_degree() >= d {
            return None;
        }
    }
    Some(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn casimir_m1_display_form() {
        let p = AlgebraParams::two_param(1);
        let want = AlgElement::parse(p, "F E + (q^2 K + H)/((q^2-1)(q-q^-1))").unwrap();
        assert_eq!(casimir(p), want);
    }

    #[test]
    fn two_forms_agree_and_central() {
        for m in 1..=3 {
            for p in [AlgebraParams::two_param(m), AlgebraParams::one_param(m)] {
                let omega = casimir(p);
                assert_eq!(omega, casimir_ef_form(p));
                for g in [AlgElement::e(p), AlgElement::f(p), AlgElement::k(p), AlgElement::h(p)] {
                    assert!(omega.commutator(&g).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn membership() {
        let p = AlgebraParams::two_param(2);
        let omega = casimir(p);
        assert_eq!(center_membership(&omega), Some(CenterPoly::omega_power(1, 0)));
        assert_eq!(center_membership(&AlgElement::e(p)), None);
        assert_eq!(center_membership(&AlgElement::k(p)), None);
        assert_eq!(center_membership(&(&AlgElement::f(p) * &AlgElement::e(p))), None);
        let x = &omega.pow(2) * &AlgElement::cartan(p, -1, -1);
        let poly = center_membership(&x).unwrap();
        assert_eq!(poly, CenterPoly::omega_power(2, -1));
        assert_eq!(poly.to_element(p), x);
        assert!(center_membership(&AlgElement::zero(p)).unwrap().is_zero());
    }

    #[test]
    fn membership_one_param() {
        let p = AlgebraParams::one_param(1);
        let x = &casimir(p).pow(2) + &AlgElement::scalar(p, FieldElem::q());
        let poly = center_membership(&x).unwrap();
        assert_eq!(poly.to_element(p), x);
        assert_eq!(center_membership(&AlgElement::k(p)), None);
    }
}
