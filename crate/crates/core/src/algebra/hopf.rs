//! Tensor powers of the algebra and coproduct, counit and antipode maps.
//!
//! A [`HopfMap`] is given by its values on generators and extended
//! multiplicatively. It can only be used for tensor products of modules
//! after [`HopfMap::certify`] has checked the relations, coassociativity,
//! the counit axiom and the antipode axiom on generators.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::relations::{relation_words, Gen, WordTarget};
use super::{mono_product_into, AlgElement, AlgebraError, AlgebraParams, Monomial, Variant};
use crate::qfield::FieldElem;

/// An element of the `n`-fold tensor power of the algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    params: AlgebraParams,
    arity: usize,
    terms: BTreeMap<Vec<Monomial>, FieldElem>,
}

impl TensorElement {
    pub fn zero(params: AlgebraParams, arity: usize) -> Self {
        TensorElement { params, arity, terms: BTreeMap::new() }
    }

    pub fn one(params: AlgebraParams, arity: usize) -> Self {
        let mut out = Self::zero(params, arity);
        out.add_term(vec![Monomial::ONE; arity], &FieldElem::one());
        out
    }

    /// `x_1 ⊗ x_2 ⊗ ... ⊗ x_n`
    pub fn pure(params: AlgebraParams, legs: &[AlgElement]) -> Self {
        let mut out = Self::one(params, 0);
        for leg in legs {
            out = out.append_leg(leg);
        }
        out
    }

    /// `K^i ⊗ K^i` style elements: a single term of monomials.
    pub fn monomial(params: AlgebraParams, legs: Vec<Monomial>) -> Self {
        let mut out = Self::zero(params, legs.len());
        out.add_term(legs, &FieldElem::one());
        out
    }

    fn append_leg(&self, leg: &AlgElement) -> Self {
        let mut out = Self::zero(self.params, self.arity + 1);
        for (key, c) in &self.terms {
            for (mono, d) in leg.terms() {
                let mut k = key.clone();
                k.push(*mono);
                out.add_term(k, &(c * d));
            }
        }
        out
    }

    pub fn params(&self) -> AlgebraParams {
        self.params
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Monomial>, FieldElem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, legs: &[Monomial]) -> FieldElem {
        let key: Vec<Monomial> = legs.iter().map(|m| m.folded(self.params)).collect();
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, key: Vec<Monomial>, c: &FieldElem) {
        if c.is_zero() {
            return;
        }
        let key: Vec<Monomial> = key.into_iter().map(|m| m.folded(self.params)).collect();
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn same_shape(&self, other: &Self) {
        assert_eq!(self.params, other.params, "tensor parameter mismatch");
        assert_eq!(self.arity, other.arity, "tensor arity mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_shape(other);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-FieldElem::one()))
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        let mut out = Self::zero(self.params, self.arity);
        for (k, x) in &self.terms {
            out.add_term(k.clone(), &(x * c));
        }
        out
    }

    /// Legwise product.
    pub fn mul(&self, other: &Self) -> Self {
        self.same_shape(other);
        let mut out = Self::zero(self.params, self.arity);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut partial: Vec<(Vec<Monomial>, FieldElem)> = vec![(Vec::new(), ca * cb)];
                for (x, y) in ka.iter().zip(kb) {
                    let mut leg = AlgElement::zero(self.params);
                    mono_product_into(self.params, x, y, &FieldElem::one(), &mut leg);
                    let mut next = Vec::with_capacity(partial.len() * leg.len());
                    for (prefix, c) in &partial {
                        for (mono, d) in leg.terms() {
                            let mut k = prefix.clone();
                            k.push(*mono);
                            next.push((k, c * d));
                        }
                    }
                    partial = next;
                }
                for (k, c) in partial {
                    out.add_term(k, &c);
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.params, self.arity);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Replaces leg `leg` by `f(monomial)`, which may have any arity.
    pub fn map_leg(&self, leg: usize, f: impl Fn(&Monomial) -> TensorElement) -> TensorElement {
        assert!(leg < self.arity, "leg out of range");
        let mut cache: BTreeMap<Monomial, TensorElement> = BTreeMap::new();
        let mut out: Option<TensorElement> = None;
        for (key, c) in &self.terms {
            let image = cache.entry(key[leg]).or_insert_with(|| f(&key[leg]));
            let acc = out.get_or_insert_with(|| Self::zero(self.params, self.arity - 1 + image.arity));
            for (ik, ic) in &image.terms {
                let mut k = Vec::with_capacity(acc.arity);
                k.extend_from_slice(&key[..leg]);
                k.extend_from_slice(ik);
                k.extend_from_slice(&key[leg + 1..]);
                acc.add_term(k, &(c * ic));
            }
        }
        out.unwrap_or_else(|| Self::zero(self.params, self.arity))
    }

    /// Multiplies the legs together: `x_1 ⊗ ... ⊗ x_n -> x_1 ... x_n`.
    pub fn contract(&self) -> AlgElement {
        let mut out = AlgElement::zero(self.params);
        for (key, c) in &self.terms {
            let mut acc = AlgElement::scalar(self.params, c.clone());
            for mono in key {
                acc = &acc * &AlgElement::monomial(self.params, *mono);
            }
            out = &out + &acc;
        }
        out
    }

    /// The element itself for arity 1.
    pub fn to_element(&self) -> Option<AlgElement> {
        (self.arity == 1)
            .then(|| AlgElement::from_terms(self.params, self.terms.iter().map(|(k, c)| (k[0], c.clone()))))
    }
}

impl WordTarget for TensorElement {
    fn identity(&self) -> Self {
        Self::one(self.params, self.arity)
    }

    fn compose(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }

    fn combine(&self, c: &FieldElem, rhs: &Self) -> Self {
        self.add(&rhs.scale(c))
    }

    fn zero_like(&self) -> Self {
        Self::zero(self.params, self.arity)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(key, c)| {
                let legs: Vec<String> = key.iter().map(|m| m.to_string()).collect();
                let body = legs.join(" ⊗ ");
                if c.is_one() {
                    body
                } else {
                    format!("({c}) * {body}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Exponents `(s, t)` with `t - s = m` for the one-parameter coproduct
/// `Δ(E) = K^s ⊗ E + E ⊗ K^t`, `Δ(F) = K^-t ⊗ F + F ⊗ K^-s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HopfParams {
    pub s: i32,
    pub t: i32,
}

impl HopfParams {
    pub fn new(s: i32, t: i32, params: AlgebraParams) -> Result<Self, AlgebraError> {
        if t - s != params.mi() {
            return Err(AlgebraError::InvalidHopfParams);
        }
        Ok(HopfParams { s, t })
    }
}

/// Group-like legs of a coproduct `Δ(E) = A ⊗ E + E ⊗ B`,
/// `Δ(F) = C ⊗ F + F ⊗ D`, each given as `(K-exponent, H-exponent)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoproductLegs {
    pub a: (i32, i32),
    pub b: (i32, i32),
    pub c: (i32, i32),
    pub d: (i32, i32),
}

/// Named coproducts for the two-parameter algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Coproduct {
    /// `Δ(E) = H^m ⊗ E + E ⊗ 1`, `Δ(F) = 1 ⊗ F + F ⊗ K^m`; the projection
    /// `H -> K^-1` carries it to the one-parameter coproduct with
    /// `(s, t) = (-m, 0)`.
    HLeft,
    /// `Δ(E) = 1 ⊗ E + E ⊗ K^m`, `Δ(F) = H^m ⊗ F + F ⊗ 1`; projects to
    /// `(s, t) = (0, m)`.
    KRight,
    /// Arbitrary group-like legs, subject to certification.
    Custom(CoproductLegs),
}

impl Coproduct {
    pub fn legs(&self, m: u32) -> CoproductLegs {
        let m = m as i32;
        match self {
            Coproduct::HLeft => CoproductLegs { a: (0, m), b: (0, 0), c: (0, 0), d: (m, 0) },
            Coproduct::KRight => CoproductLegs { a: (0, 0), b: (m, 0), c: (0, m), d: (0, 0) },
            Coproduct::Custom(legs) => *legs,
        }
    }
}

/// Values of `Δ`, `ε` and `S` on each generator.
#[derive(Debug, Clone)]
pub struct HopfMap {
    params: AlgebraParams,
    label: String,
    delta: BTreeMap<Gen, TensorElement>,
    counit: BTreeMap<Gen, FieldElem>,
    antipode: BTreeMap<Gen, AlgElement>,
}

/// Output of [`HopfMap::apply`].
#[derive(Debug, Clone, PartialEq)]
pub enum HopfOutput {
    Coproduct(TensorElement),
    Counit(FieldElem),
    Antipode(AlgElement),
}

fn gl(params: AlgebraParams, (i, j): (i32, i32)) -> Monomial {
    Monomial::cartan(i, j).folded(params)
}

impl HopfMap {
    /// The one-parameter Hopf structure with `Δ(E) = K^s ⊗ E + E ⊗ K^t`.
    pub fn one_param(params: AlgebraParams, hp: HopfParams) -> Result<Self, AlgebraError> {
        if params.variant != Variant::OneParam {
            return Err(AlgebraError::VariantUnsupported(params));
        }
        HopfParams::new(hp.s, hp.t, params)?;
        let legs = CoproductLegs { a: (hp.s, 0), b: (hp.t, 0), c: (-hp.t, 0), d: (-hp.s, 0) };
        Ok(Self::from_legs(params, legs, format!("one-parameter (s,t)=({},{})", hp.s, hp.t)))
    }

    /// A two-parameter coproduct preset.
    pub fn two_param(params: AlgebraParams, preset: Coproduct) -> Result<Self, AlgebraError> {
        if params.variant != Variant::TwoParam {
            return Err(AlgebraError::VariantUnsupported(params));
        }
        Ok(Self::from_legs(params, preset.legs(params.m), format!("{preset:?}")))
    }

    fn from_legs(params: AlgebraParams, legs: CoproductLegs, label: String) -> Self {
        let p = params;
        let mono = |l: (i32, i32)| AlgElement::monomial(p, gl(p, l));
        let (a, b, c, d) = (gl(p, legs.a), gl(p, legs.b), gl(p, legs.c), gl(p, legs.d));
        let e = Monomial::new(0, 0, 0, 1);
        let f = Monomial::new(1, 0, 0, 0);
        let mut delta = BTreeMap::new();
        delta.insert(Gen::E, TensorElement::monomial(p, vec![a, e]).add(&TensorElement::monomial(p, vec![e, b])));
        delta.insert(Gen::F, TensorElement::monomial(p, vec![c, f]).add(&TensorElement::monomial(p, vec![f, d])));
        for g in [Gen::K, Gen::KInv, Gen::H, Gen::HInv] {
            let m = g.element(p).terms().keys().next().copied().expect("group-like generator");
            delta.insert(g, TensorElement::monomial(p, vec![m, m]));
        }
        let mut counit = BTreeMap::new();
        for g in Gen::ALL {
            let v = if matches!(g, Gen::E | Gen::F) { FieldElem::zero() } else { FieldElem::one() };
            counit.insert(g, v);
        }
        let inv = |l: (i32, i32)| mono((-l.0, -l.1));
        let mut antipode = BTreeMap::new();
        antipode.insert(Gen::E, -(&(&inv(legs.a) * &AlgElement::e(p)) * &inv(legs.b)));
        antipode.insert(Gen::F, -(&(&inv(legs.c) * &AlgElement::f(p)) * &inv(legs.d)));
        antipode.insert(Gen::K, AlgElement::k_inv(p));
        antipode.insert(Gen::KInv, AlgElement::k(p));
        antipode.insert(Gen::H, AlgElement::h_inv(p));
        antipode.insert(Gen::HInv, AlgElement::h(p));
        HopfMap { params, label, delta, counit, antipode }
    }

    pub fn params(&self) -> AlgebraParams {
        self.params
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn generator_coproduct(&self, g: Gen) -> &TensorElement {
        &self.delta[&g]
    }

    /// `Δ(x)`, extended multiplicatively from generators.
    pub fn coproduct(&self, x: &AlgElement) -> TensorElement {
        let p = self.params;
        let mut out = TensorElement::zero(p, 2);
        for (mono, c) in x.terms() {
            let k = if mono.i >= 0 { Gen::K } else { Gen::KInv };
            let h = if mono.j >= 0 { Gen::H } else { Gen::HInv };
            let term = self.delta[&Gen::F]
                .pow(mono.a)
                .mul(&self.delta[&k].pow(mono.i.unsigned_abs()))
                .mul(&self.delta[&h].pow(mono.j.unsigned_abs()))
                .mul(&self.delta[&Gen::E].pow(mono.b));
            out = out.add(&term.scale(c));
        }
        out
    }

    /// `ε(x)`
    pub fn counit(&self, x: &AlgElement) -> FieldElem {
        let mut out = FieldElem::zero();
        for (mono, c) in x.terms() {
            let k = if mono.i >= 0 { Gen::K } else { Gen::KInv };
            let h = if mono.j >= 0 { Gen::H } else { Gen::HInv };
            let v = self.counit[&Gen::F].pow(mono.a as i64)
                * self.counit[&k].pow(mono.i.unsigned_abs() as i64)
                * self.counit[&h].pow(mono.j.unsigned_abs() as i64)
                * self.counit[&Gen::E].pow(mono.b as i64);
            out += &(c * &v);
        }
        out
    }

    /// `S(x)`, extended anti-multiplicatively from generators.
    pub fn antipode(&self, x: &AlgElement) -> AlgElement {
        let p = self.params;
        let mut out = AlgElement::zero(p);
        for (mono, c) in x.terms() {
            let k = if mono.i >= 0 { Gen::K } else { Gen::KInv };
            let h = if mono.j >= 0 { Gen::H } else { Gen::HInv };
            let term = &(&(&self.antipode[&Gen::E].pow(mono.b) * &self.antipode[&h].pow(mono.j.unsigned_abs()))
                * &self.antipode[&k].pow(mono.i.unsigned_abs()))
                * &self.antipode[&Gen::F].pow(mono.a);
            out = &out + &term.scale(c);
        }
        out
    }

    pub fn apply(&self, which: HopfMapKind, x: &AlgElement) -> HopfOutput {
        match which {
            HopfMapKind::Coproduct => HopfOutput::Coproduct(self.coproduct(x)),
            HopfMapKind::Counit => HopfOutput::Counit(self.counit(x)),
            HopfMapKind::Antipode => HopfOutput::Antipode(self.antipode(x)),
        }
    }

    fn monomial_coproduct(&self, mono: &Monomial) -> TensorElement {
        self.coproduct(&AlgElement::monomial(self.params, *mono))
    }

    fn monomial_counit(&self, mono: &Monomial) -> TensorElement {
        let c = self.counit(&AlgElement::monomial(self.params, *mono));
        TensorElement::one(self.params, 0).scale(&c)
    }

    fn monomial_antipode(&self, mono: &Monomial) -> TensorElement {
        TensorElement::pure(self.params, &[self.antipode(&AlgElement::monomial(self.params, *mono))])
    }

    /// Runs every certification check and reports each outcome.
    pub fn certification_report(&self) -> CertificationReport {
        let p = self.params;
        let mut checks = Vec::new();
        for rel in relation_words(p) {
            let image = rel.evaluate(&|g: Gen| self.delta[&g].clone());
            checks.push(CheckOutcome { name: format!("Δ respects {}", rel.name), passed: image.is_zero() });
            let s_image = rel
                .terms
                .iter()
                .map(|(c, word)| {
                    let mut w = AlgElement::one(p);
                    for g in word.iter().rev() {
                        w = &w * &self.antipode[g];
                    }
                    w.scale(c)
                })
                .fold(AlgElement::zero(p), |acc, x| &acc + &x);
            checks.push(CheckOutcome { name: format!("S respects {}", rel.name), passed: s_image.is_zero() });
        }
        for g in Gen::ALL {
            let x = g.element(p);
            let dx = &self.delta[&g];
            let left = dx.map_leg(0, |m| self.monomial_coproduct(m));
            let right = dx.map_leg(1, |m| self.monomial_coproduct(m));
            checks.push(CheckOutcome { name: format!("coassociativity on {}", g.name()), passed: left == right });
            let el = dx.map_leg(0, |m| self.monomial_counit(m)).to_element();
            let er = dx.map_leg(1, |m| self.monomial_counit(m)).to_element();
            checks.push(CheckOutcome {
                name: format!("counit on {}", g.name()),
                passed: el.as_ref() == Some(&x) && er.as_ref() == Some(&x),
            });
            let unit = AlgElement::scalar(p, self.counit[&g].clone());
            let sl = dx.map_leg(0, |m| self.monomial_antipode(m)).contract();
            let sr = dx.map_leg(1, |m| self.monomial_antipode(m)).contract();
            checks.push(CheckOutcome { name: format!("antipode on {}", g.name()), passed: sl == unit && sr == unit });
        }
        CertificationReport { label: self.label.clone(), checks }
    }

    /// Certifies the map, or returns the names of the failed checks.
    pub fn certify(self) -> Result<CertifiedCoproduct, AlgebraError> {
        let report = self.certification_report();
        if report.passed() {
            Ok(CertifiedCoproduct(self))
        } else {
            Err(AlgebraError::UncertifiedCoproduct(format!("{}: {}", self.label, report.failures().join("; "))))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HopfMapKind {
    Coproduct,
    Counit,
    Antipode,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificationReport {
    pub label: String,
    pub checks: Vec<CheckOutcome>,
}

impl CertificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect()
    }
}

/// A [`HopfMap`] that passed [`HopfMap::certify`].
#[derive(Debug, Clone)]
pub struct CertifiedCoproduct(HopfMap);

impl CertifiedCoproduct {
    pub fn map(&self) -> &HopfMap {
        &self.0
    }
}

impl std::ops::Deref for CertifiedCoproduct {
    type Target = HopfMap;
    fn deref(&self) -> &HopfMap {
        &self.0
    }
}

/// Which first leg of `Δ(E)` makes `Δ` respect `EF - FE = f_m(K)` for the
/// one-parameter algebra: the group-like `K^s`, or `E^s` read literally.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegReport {
    pub m: u32,
    pub s: i32,
    pub t: i32,
    pub k_leg_homomorphism: bool,
    /// `None` when `s < 0`, where `E^s` does not exist in the algebra.
    pub e_leg_homomorphism: Option<bool>,
    /// `E^0 = K^0`, so for `s = 0` both readings give the same map.
    pub legs_coincide: bool,
}

/// Tests both readings of the first leg of `Δ(E)` against every relation.
pub fn coproduct_leg_report(params: AlgebraParams, hp: HopfParams) -> Result<LegReport, AlgebraError> {
    let k_map = HopfMap::one_param(params, hp)?;
    let respects = |map: &HopfMap| {
        relation_words(params).iter().all(|rel| rel.evaluate(&|g: Gen| map.delta[&g].clone()).is_zero())
    };
    let k_ok = respects(&k_map);
    let e_ok = (hp.s >= 0).then(|| {
        let mut e_map = k_map.clone();
        let e_s = Monomial::new(0, 0, 0, hp.s as u32);
        let e = Monomial::new(0, 0, 0, 1);
        let t = gl(params, (hp.t, 0));
        e_map.delta.insert(
            Gen::E,
            TensorElement::monomial(params, vec![e_s, e]).add(&TensorElement::monomial(params, vec![e, t])),
        );
        respects(&e_map)
    });
    Ok(LegReport {
        m: params.m,
        s: hp.s,
        t: hp.t,
        k_leg_homomorphism: k_ok,
        e_leg_homomorphism: e_ok,
        legs_coincide: hp.s == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_values() {
        let p = AlgebraParams::one_param(1);
        let map = HopfMap::one_param(p, HopfParams::new(0, 1, p).unwrap()).unwrap();
        let k = AlgElement::k(p);
        assert_eq!(map.coproduct(&k), TensorElement::pure(p, &[k.clone(), k.clone()]));
        assert!(map.counit(&AlgElement::e(p)).is_zero());
        assert!(map.counit(&k).is_one());
        let s_e = map.antipode(&AlgElement::e(p));
        let want = -(&(&AlgElement::one(p) * &AlgElement::e(p)) * &AlgElement::k_inv(p));
        assert_eq!(s_e, want);
    }

    #[test]
    fn delta_of_commutator() {
        for m in 1..=2 {
            let p = AlgebraParams::one_param(m);
            let map = HopfMap::one_param(p, HopfParams::new(0, m as i32, p).unwrap()).unwrap();
            let de = map.coproduct(&AlgElement::e(p));
            let df = map.coproduct(&AlgElement::f(p));
            let lhs = de.mul(&df).sub(&df.mul(&de));
            assert_eq!(lhs, map.coproduct(&AlgElement::f_m(p)));
        }
    }

    #[test]
    fn certification() {
        for m in 1..=2 {
            let p = AlgebraParams::one_param(m);
            for (s, t) in [(0, m as i32), (-1, m as i32 - 1)] {
                let map = HopfMap::one_param(p, HopfParams::new(s, t, p).unwrap()).unwrap();
                let report = map.certification_report();
                assert!(report.passed(), "{:?}", report.failures());
            }
            let tp = AlgebraParams::two_param(m);
            for preset in [Coproduct::HLeft, Coproduct::KRight] {
                assert!(HopfMap::two_param(tp, preset).unwrap().certify().is_ok());
            }
        }
    }

    #[test]
    fn bad_presets_refused() {
        let p = AlgebraParams::two_param(1);
        let legs = CoproductLegs { a: (1, 0), b: (0, 0), c: (0, 0), d: (1, 0) };
        let err = HopfMap::two_param(p, Coproduct::Custom(legs)).unwrap().certify().unwrap_err();
        assert!(matches!(err, AlgebraError::UncertifiedCoproduct(_)));
        assert!(matches!(HopfMap::one_param(p, HopfParams { s: 0, t: 1 }), Err(AlgebraError::VariantUnsupported(_))));
        let op = AlgebraParams::one_param(2);
        assert_eq!(HopfParams::new(0, 1, op), Err(AlgebraError::InvalidHopfParams));
    }

    #[test]
    fn leg_report() {
        let p = AlgebraParams::one_param(2);
        let r = coproduct_leg_report(p, HopfParams::new(0, 2, p).unwrap()).unwrap();
        assert!(r.k_leg_homomorphism && r.legs_coincide);
        assert_eq!(r.e_leg_homomorphism, Some(true));
        let r = coproduct_leg_report(p, HopfParams::new(1, 3, p).unwrap()).unwrap();
        assert!(r.k_leg_homomorphism);
        assert_eq!(r.e_leg_homomorphism, Some(false));
        let r = coproduct_leg_report(p, HopfParams::new(-1, 1, p).unwrap()).unwrap();
        assert_eq!(r.e_leg_homomorphism, None);
    }
}
