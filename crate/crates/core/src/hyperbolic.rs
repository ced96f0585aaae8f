//! The hyperbolic realization `R{ξ, θ}` with `R = Q(q)[ξ, K^±1, H^±1]`,
//! `ξ = EF`, and classification of the maximal ideals
//! `M_{α,β,γ} = (ξ - α, K - β, H - γ)`.
//!
//! `θ` acts by `K -> q^-2 K`, `H -> q^2 H` and
//! `θ(ξ) = ξ + f_m(θ(K), θ(H))`. Its iterates on `ξ` have the closed form
//!
//! ```text
//! θ^n(ξ) = ξ + (S_K(n) K^m - S_H(n) H^m) / (q - q^-1)
//! S_K(n) = q^{-2m} (1 - q^{-2nm}) / (1 - q^{-2m})
//! S_H(n) = q^{2m}  (1 - q^{2nm})  / (1 - q^{2m})
//! ```
//!
//! valid for every integer `n`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgElement, AlgebraParams, Monomial};
use crate::qfield::FieldElem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperbolicError {
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("n_max must be at least 1")]
    InvalidBound,
}

/// `ξ^p K^i H^j` keyed as `(p, i, j)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RElement {
    terms: BTreeMap<(u32, i32, i32), FieldElem>,
}

impl RElement {
    pub fn zero() -> Self {
        RElement::default()
    }

    pub fn one() -> Self {
        Self::term(0, 0, 0, FieldElem::one())
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::term(0, 0, 0, c)
    }

    pub fn term(p: u32, i: i32, j: i32, c: FieldElem) -> Self {
        let mut out = RElement::zero();
        out.add_term((p, i, j), &c);
        out
    }

    pub fn xi() -> Self {
        Self::term(1, 0, 0, FieldElem::one())
    }

    pub fn k_pow(i: i32) -> Self {
        Self::term(0, i, 0, FieldElem::one())
    }

    pub fn h_pow(j: i32) -> Self {
        Self::term(0, 0, j, FieldElem::one())
    }

    pub fn terms(&self) -> &BTreeMap<(u32, i32, i32), FieldElem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: (u32, i32, i32), c: &FieldElem) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-FieldElem::one()))
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        let mut out = RElement::zero();
        for (k, x) in &self.terms {
            out.add_term(*k, &(x * c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = RElement::zero();
        for ((p1, i1, j1), c1) in &self.terms {
            for ((p2, i2, j2), c2) in &other.terms {
                out.add_term((p1 + p2, i1 + i2, j1 + j2), &(c1 * c2));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(RElement::one(), |acc, _| acc.mul(self))
    }

    /// The image in the algebra, with `ξ` sent to the normal form of `EF`.
    pub fn embed(&self, params: AlgebraParams) -> AlgElement {
        let ef = &AlgElement::e(params) * &AlgElement::f(params);
        let mut out = AlgElement::zero(params);
        for ((p, i, j), c) in &self.terms {
            let cartan = AlgElement::term(params, Monomial::cartan(*i, *j), c.clone());
            out = &out + &(&ef.pow(*p) * &cartan);
        }
        out
    }
}

impl fmt::Display for RElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((p, i, j), c)| {
                let mut factors = Vec::new();
                for (sym, e) in [("ξ", *p as i32), ("K", *i), ("H", *j)] {
                    match e {
                        0 => {}
                        1 => factors.push(sym.to_string()),
                        e => factors.push(format!("{sym}^{e}")),
                    }
                }
                let mono = factors.join(" ");
                match (mono.is_empty(), c.is_one()) {
                    (true, _) => format!("({c})"),
                    (false, true) => mono,
                    (false, false) => format!("({c}) * {mono}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for RElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `S_K(n)` and `S_H(n)` from the closed form of `θ^n(ξ)`.
fn theta_sums(n: i64, m: u32) -> (FieldElem, FieldElem) {
    let m = m as i64;
    let one = FieldElem::one();
    let sk = FieldElem::q_pow(-2 * m) * (&one - FieldElem::q_pow(-2 * n * m)) / (&one - FieldElem::q_pow(-2 * m));
    let sh = FieldElem::q_pow(2 * m) * (&one - FieldElem::q_pow(2 * n * m)) / (&one - FieldElem::q_pow(2 * m));
    (sk, sh)
}

/// `θ^n(ξ)`
pub fn theta_xi(n: i64, m: u32) -> RElement {
    let d = FieldElem::q_minus_qinv().inv();
    let (sk, sh) = theta_sums(n, m);
    let mi = m as i32;
    RElement::xi().add(&RElement::term(0, mi, 0, &sk * &d)).add(&RElement::term(0, 0, mi, -(&sh * &d)))
}

/// `θ^n(r)`
pub fn theta_apply(r: &RElement, n: i64, m: u32) -> RElement {
    if n == 0 {
        return r.clone();
    }
    let txi = theta_xi(n, m);
    let mut xi_powers = vec![RElement::one()];
    let mut out = RElement::zero();
    for ((p, i, j), c) in r.terms() {
        while xi_powers.len() <= *p as usize {
            let next = xi_powers.last().unwrap().mul(&txi);
            xi_powers.push(next);
        }
        let scale = FieldElem::q_pow(-2 * n * (*i as i64) + 2 * n * (*j as i64));
        let cartan = RElement::term(0, *i, *j, c * &scale);
        out = out.add(&xi_powers[*p as usize].mul(&cartan));
    }
    out
}

/// A point `(α, β, γ)` naming the maximal ideal `M_{α,β,γ}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MaxIdealPoint {
    pub alpha: FieldElem,
    pub beta: FieldElem,
    pub gamma: FieldElem,
    pub m: u32,
}

impl MaxIdealPoint {
    pub fn new(alpha: FieldElem, beta: FieldElem, gamma: FieldElem, m: u32) -> Result<Self, HyperbolicError> {
        if m == 0 {
            return Err(HyperbolicError::InvalidPoint("m must be positive".into()));
        }
        if beta.is_zero() || gamma.is_zero() {
            return Err(HyperbolicError::InvalidPoint("beta and gamma must be nonzero".into()));
        }
        Ok(MaxIdealPoint { alpha, beta, gamma, m })
    }

    /// Parses the three coordinates from field-element text.
    pub fn parse(alpha: &str, beta: &str, gamma: &str, m: u32) -> Result<Self, HyperbolicError> {
        let f = |s: &str| FieldElem::parse(s).map_err(|e| HyperbolicError::InvalidPoint(e.to_string()));
        Self::new(f(alpha)?, f(beta)?, f(gamma)?, m)
    }

    /// The point moved by `θ^n`: the unique point with
    /// `θ^n(M_{point}) = M_{self}`, so that `r(moved) = θ^n(r)(self)`.
    pub fn shifted(&self, n: i64) -> MaxIdealPoint {
        MaxIdealPoint {
            alpha: self.orbit_value(n),
            beta: &self.beta * FieldElem::q_pow(-2 * n),
            gamma: &self.gamma * FieldElem::q_pow(2 * n),
            m: self.m,
        }
    }

    /// `θ^n(ξ)` evaluated at the point.
    pub fn orbit_value(&self, n: i64) -> FieldElem {
        let d = FieldElem::q_minus_qinv().inv();
        let (sk, sh) = theta_sums(n, self.m);
        let m = self.m as i64;
        &self.alpha + d * (sk * self.beta.pow(m) - sh * self.gamma.pow(m))
    }
}

/// Substitutes `ξ -> α`, `K -> β`, `H -> γ`.
pub fn evaluate_at_point(r: &RElement, p: &MaxIdealPoint) -> FieldElem {
    r.terms()
        .iter()
        .map(|((e, i, j), c)| c * p.alpha.pow(*e as i64) * p.beta.pow(*i as i64) * p.gamma.pow(*j as i64))
        .sum()
}

/// Every `n` with `θ^n(ξ) ∈ M`, in increasing order.
///
/// With `x = q^{2nm}` the condition is the quadratic
/// `-γ^m q^{2m} x^2 + [α(q - q^-1)(q^{2m} - 1) + β^m + γ^m q^{2m}] x - β^m = 0`.
/// For `x = q^k` the largest of the degrees of the three terms must be
/// attained twice, which leaves at most three candidates for `k`; each is
/// verified exactly.
pub fn orbit_zeros(p: &MaxIdealPoint) -> Vec<i64> {
    let m = p.m as i64;
    let q2m = FieldElem::q_pow(2 * m);
    let bm = p.beta.pow(m);
    let gm = p.gamma.pow(m);
    let a = -(&gm * &q2m);
    let b = &p.alpha * FieldElem::q_minus_qinv() * (&q2m - FieldElem::one()) + &bm + &gm * &q2m;
    let c = -bm;
    let da = a.net_degree().expect("gamma is nonzero");
    let dc = c.net_degree().expect("beta is nonzero");
    let mut candidates = Vec::new();
    if (dc - da) % 2 == 0 {
        candidates.push((dc - da) / 2);
    }
    if let Ok(db) = b.net_degree() {
        candidates.push(db - da);
        candidates.push(dc - db);
    }
    let mut zeros: Vec<i64> = candidates
        .into_iter()
        .filter(|k| k % (2 * m) == 0)
        .map(|k| k / (2 * m))
        .filter(|n| p.orbit_value(*n).is_zero())
        .collect();
    zeros.sort_unstable();
    zeros.dedup();
    zeros
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectrumTag {
    /// `P_{1,1}`; [`SpectrumTag::OneFinite`]`(0)` denotes the same case.
    OneOne,
    /// `P_{1,n+1}`
    OneFinite(u32),
    /// `P_{1,∞}`
    OneInfinity,
    /// `P_{∞,1}`
    InfinityOne,
    /// `P_{∞,∞}`
    InfinityInfinity,
}

impl SpectrumTag {
    /// Collapses `OneOne` to `OneFinite(0)`.
    pub fn canonical(self) -> SpectrumTag {
        match self {
            SpectrumTag::OneOne => SpectrumTag::OneFinite(0),
            t => t,
        }
    }

    /// Dimension of the irreducible module, when finite.
    pub fn finite_dim(self) -> Option<usize> {
        match self.canonical() {
            SpectrumTag::OneFinite(n) => Some(n as usize + 1),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exactness {
    Proved,
    BoundedSearch(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "SpectrumJson", try_from = "SpectrumJson")]
pub struct SpectrumCase {
    pub tag: SpectrumTag,
    pub exactness: Exactness,
}

impl SpectrumCase {
    pub fn same_case(&self, other: &SpectrumCase) -> bool {
        self.tag.canonical() == other.tag.canonical()
    }
}

#[derive(Serialize, Deserialize)]
struct SpectrumJson {
    case: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    n: Option<u32>,
    exact: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    n_max: Option<u32>,
}

impl From<SpectrumCase> for SpectrumJson {
    fn from(c: SpectrumCase) -> Self {
        let (case, n) = match c.tag.canonical() {
            SpectrumTag::OneFinite(0) | SpectrumTag::OneOne => ("P_1_1", None),
            SpectrumTag::OneFinite(n) => ("P_1_n+1", Some(n)),
            SpectrumTag::OneInfinity => ("P_1_inf", None),
            SpectrumTag::InfinityOne => ("P_inf_1", None),
            SpectrumTag::InfinityInfinity => ("P_inf_inf", None),
        };
        let (exact, n_max) = match c.exactness {
            Exactness::Proved => (true, None),
            Exactness::BoundedSearch(b) => (false, Some(b)),
        };
        SpectrumJson { case: case.into(), n, exact, n_max }
    }
}

impl TryFrom<SpectrumJson> for SpectrumCase {
    type Error = String;
    fn try_from(j: SpectrumJson) -> Result<Self, String> {
        let tag = match (j.case.as_str(), j.n) {
            ("P_1_1", _) => SpectrumTag::OneFinite(0),
            ("P_1_n+1", Some(n)) => SpectrumTag::OneFinite(n),
            ("P_1_inf", _) => SpectrumTag::OneInfinity,
            ("P_inf_1", _) => SpectrumTag::InfinityOne,
            ("P_inf_inf", _) => SpectrumTag::InfinityInfinity,
            (other, _) => return Err(format!("unknown case {other:?}")),
        };
        let exactness = match (j.exact, j.n_max) {
            (true, _) => Exactness::Proved,
            (false, Some(b)) => Exactness::BoundedSearch(b),
            (false, None) => return Err("bounded result without n_max".into()),
        };
        Ok(SpectrumCase { tag, exactness })
    }
}

impl fmt::Display for SpectrumCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.tag.canonical() {
            SpectrumTag::OneFinite(0) | SpectrumTag::OneOne => "P_1_1".to_string(),
            SpectrumTag::OneFinite(n) => format!("P_1_{}", n + 1),
            SpectrumTag::OneInfinity => "P_1_inf".into(),
            SpectrumTag::InfinityOne => "P_inf_1".into(),
            SpectrumTag::InfinityInfinity => "P_inf_inf".into(),
        };
        match self.exactness {
            Exactness::Proved => write!(f, "{name} (exact)"),
            Exactness::BoundedSearch(b) => write!(f, "{name} (searched n <= {b})"),
        }
    }
}

fn classify_from(p: &MaxIdealPoint, zero_at: impl Fn(i64) -> bool, ahead: &[i64], behind: &[i64]) -> SpectrumTag {
    if zero_at(-1) {
        return match ahead.iter().copied().find(|n| zero_at(*n)) {
            Some(n) => SpectrumTag::OneFinite(n as u32),
            None => SpectrumTag::OneInfinity,
        };
    }
    if p.alpha.is_zero() && !behind.iter().any(|k| zero_at(-*k)) {
        return SpectrumTag::InfinityOne;
    }
    SpectrumTag::InfinityInfinity
}

/// Decides the spectral case of `M_{α,β,γ}`:
///
/// 1. `θ^-1(ξ) ∈ M`: the least `n >= 0` with `θ^n(ξ) ∈ M` gives
///    `OneFinite(n)`, and `OneInfinity` if there is none;
/// 2. otherwise `α = 0` and `θ^-k(ξ) ∉ M` for all `k >= 1` gives
///    `InfinityOne`;
/// 3. everything else is `InfinityInfinity`.
///
/// The orbit is searched exactly via [`orbit_zeros`], so the result is
/// always [`Exactness::Proved`]; `n_max` is only validated.
pub fn classify_spectrum(p: &MaxIdealPoint, n_max: u32) -> Result<SpectrumCase, HyperbolicError> {
    if n_max == 0 {
        return Err(HyperbolicError::InvalidBound);
    }
    let zeros = orbit_zeros(p);
    let ahead: Vec<i64> = zeros.iter().copied().filter(|n| *n >= 0).collect();
    let behind: Vec<i64> = zeros.iter().filter(|n| **n <= -1).map(|n| -n).collect();
    let tag = classify_from(p, |n| zeros.contains(&n), &ahead, &behind);
    Ok(SpectrumCase { tag, exactness: Exactness::Proved })
}

/// The same decision made by direct evaluation of `θ^n(ξ)` for
/// `|n| <= n_max` only. Non-existence claims are then
/// [`Exactness::BoundedSearch`].
pub fn classify_spectrum_bounded(p: &MaxIdealPoint, n_max: u32) -> Result<SpectrumCase, HyperbolicError> {
    if n_max == 0 {
        return Err(HyperbolicError::InvalidBound);
    }
    let range: Vec<i64> = (0..=n_max as i64).collect();
    let positive: Vec<i64> = (1..=n_max as i64).collect();
    let tag = classify_from(p, |n| p.orbit_value(n).is_zero(), &range, &positive);
    let exactness = match tag {
        SpectrumTag::OneFinite(_) => Exactness::Proved,
        _ => Exactness::BoundedSearch(n_max),
    };
    Ok(SpectrumCase { tag, exactness })
}

/// Whether `θ^n(M) ≠ M`, decided by evaluating the images of the
/// generators `ξ - α`, `K - β`, `H - γ` at the point.
pub fn orbit_distinct(p: &MaxIdealPoint, n: i64) -> bool {
    let gens = [
        RElement::xi().sub(&RElement::constant(p.alpha.clone())),
        RElement::k_pow(1).sub(&RElement::constant(p.beta.clone())),
        RElement::h_pow(1).sub(&RElement::constant(p.gamma.clone())),
    ];
    gens.iter().any(|g| !evaluate_at_point(&theta_apply(g, n, p.m), p).is_zero())
}

/// The intertwining identities `E r = θ(r) E` and `F r = θ^-1(r) F` for
/// `r ∈ {ξ, K, H}`, each as `left - right` in the algebra.
pub fn intertwining_identities(params: AlgebraParams) -> Vec<(String, AlgElement)> {
    let m = params.m;
    let e = AlgElement::e(params);
    let f = AlgElement::f(params);
    let mut out = Vec::new();
    for (name, r) in [("ξ", RElement::xi()), ("K", RElement::k_pow(1)), ("H", RElement::h_pow(1))] {
        let x = r.embed(params);
        let up = theta_apply(&r, 1, m).embed(params);
        let down = theta_apply(&r, -1, m).embed(params);
        out.push((format!("E·{name} = θ({name})·E"), &(&e * &x) - &(&up * &e)));
        out.push((format!("F·{name} = θ^-1({name})·F"), &(&f * &x) - &(&down * &f)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str) -> FieldElem {
        FieldElem::parse(s).unwrap()
    }

    fn pt(a: &str, b: &str, c: &str, m: u32) -> MaxIdealPoint {
        MaxIdealPoint::parse(a, b, c, m).unwrap()
    }

    #[test]
    fn theta_examples() {
        let xi = RElement::xi();
        assert_eq!(theta_apply(&xi, 0, 1), xi);
        assert_eq!(theta_apply(&RElement::k_pow(1), 1, 1), RElement::term(0, 1, 0, FieldElem::q_pow(-2)));
        let want = xi.add(&RElement::term(0, 1, 0, fe("(q^-2+q^-4)/(q-q^-1)"))).add(&RElement::term(
            0,
            0,
            1,
            fe("-(q^2+q^4)/(q-q^-1)"),
        ));
        assert_eq!(theta_apply(&xi, 2, 1), want);
        let f = RElement::k_pow(1).sub(&RElement::h_pow(1)).scale(&FieldElem::q_minus_qinv().inv());
        assert_eq!(theta_apply(&xi, -1, 1), xi.sub(&f));
    }

    #[test]
    fn evaluate_examples() {
        let p = pt("q", "q^2", "1", 1);
        assert_eq!(evaluate_at_point(&RElement::xi(), &p), fe("q"));
        assert!(evaluate_at_point(&theta_apply(&RElement::xi(), 1, 1), &p).is_zero());
        let kh = RElement::term(0, 1, -1, FieldElem::one());
        assert_eq!(evaluate_at_point(&kh, &p), fe("q^2"));
    }

    #[test]
    fn classify_examples() {
        let c = |a, b, g| classify_spectrum(&pt(a, b, g, 1), 64).unwrap().tag;
        assert_eq!(c("q", "q^2", "1"), SpectrumTag::OneFinite(1));
        assert_eq!(c("0", "1", "1"), SpectrumTag::OneFinite(0));
        assert_eq!(c("0", "q", "1"), SpectrumTag::InfinityOne);
        assert_eq!(c("1", "q", "1"), SpectrumTag::InfinityInfinity);
        assert!(MaxIdealPoint::parse("1", "0", "1", 1).is_err());
        assert_eq!(classify_spectrum(&pt("1", "q", "1", 1), 0), Err(HyperbolicError::InvalidBound));
    }

    #[test]
    fn json_names() {
        let case = classify_spectrum(&pt("q", "q^2", "1", 1), 64).unwrap();
        assert_eq!(serde_json::to_string(&case).unwrap(), r#"{"case":"P_1_n+1","n":1,"exact":true}"#);
        let p11 = SpectrumCase { tag: SpectrumTag::OneOne, exactness: Exactness::Proved };
        assert_eq!(serde_json::to_string(&p11).unwrap(), r#"{"case":"P_1_1","exact":true}"#);
        let back: SpectrumCase = serde_json::from_str(r#"{"case":"P_inf_1","exact":false,"n_max":5}"#).unwrap();
        assert_eq!(back.exactness, Exactness::BoundedSearch(5));
    }

    #[test]
    fn orbit_distinct_examples() {
        let p = pt("1", "q", "1", 1);
        assert!(!orbit_distinct(&p, 0));
        assert!(orbit_distinct(&p, 1));
        assert!(orbit_distinct(&p, -5));
    }

    #[test]
    fn intertwining() {
        for m in 1..=3 {
            for (name, x) in intertwining_identities(AlgebraParams::two_param(m)) {
                assert!(x.is_zero(), "{name}: {x}");
            }
        }
    }
}
