//! Normal forms in `U_q(f_m(K,H))` and `U_q(f_m(K))`.
//!
//! Elements are kept as linear combinations of ordered monomials
//! `F^a K^i H^j E^b`. The defining relations
//!
//! ```text
//! KE = q^2 EK    KF = q^-2 FK    HE = q^-2 EH    HF = q^2 FH
//! KH = HK        EF - FE = (K^m - H^m) / (q - q^-1)
//! ```
//!
//! are applied as a rewriting system toward that order. The one-parameter
//! algebra uses the same engine with `H` identified with `K^-1`.

mod center;
mod eta;
mod hopf;
mod relations;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::expr::{self, ExprValue, ParseError};
use crate::qfield::FieldElem;

pub use center::{casimir, casimir_ef_form, center_membership, CenterPoly};
pub use eta::{eta_projection, eta_reduced_action};
pub use hopf::{
    coproduct_leg_report, CertificationReport, CertifiedCoproduct, CheckOutcome, Coproduct, CoproductLegs, HopfMap,
    HopfMapKind, HopfOutput, HopfParams, LegReport, TensorElement,
};
pub use relations::{defining_relations, relation_words, Gen, Relation, WordTarget};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebra parameters differ: {0} vs {1}")]
    ParamMismatch(AlgebraParams, AlgebraParams),
    #[error("m must be a positive integer")]
    InvalidM,
    #[error("character value eta(E) must be nonzero")]
    SingularCharacter,
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error("operation not supported for {0}")]
    VariantUnsupported(AlgebraParams),
    #[error("coproduct failed certification: {0}")]
    UncertifiedCoproduct(String),
    #[error("invalid Hopf parameters: t - s must equal m")]
    InvalidHopfParams,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    /// `U_q(f_m(K,H))` with independent invertible `K`, `H`.
    TwoParam,
    /// `U_q(f_m(K))`, where `H` is read as `K^-1`.
    OneParam,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlgebraParams {
    pub m: u32,
    pub variant: Variant,
}

impl AlgebraParams {
    pub fn new(m: u32, variant: Variant) -> Result<Self, AlgebraError> {
        if m == 0 {
            return Err(AlgebraError::InvalidM);
        }
        Ok(AlgebraParams { m, variant })
    }

    /// # Panics
    /// If `m == 0`.
    pub fn two_param(m: u32) -> Self {
        Self::new(m, Variant::TwoParam).expect("m >= 1")
    }

    /// # Panics
    /// If `m == 0`.
    pub fn one_param(m: u32) -> Self {
        Self::new(m, Variant::OneParam).expect("m >= 1")
    }

    pub fn is_one_param(&self) -> bool {
        self.variant == Variant::OneParam
    }

    pub(crate) fn mi(&self) -> i32 {
        self.m as i32
    }
}

impl fmt::Display for AlgebraParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variant {
            Variant::TwoParam => write!(f, "U_q(f_{}(K,H))", self.m),
            Variant::OneParam => write!(f, "U_q(f_{}(K))", self.m),
        }
    }
}

/// The ordered word `F^a K^i H^j E^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    pub a: u32,
    pub i: i32,
    pub j: i32,
    pub b: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, i: 0, j: 0, b: 0 };

    pub fn new(a: u32, i: i32, j: i32, b: u32) -> Self {
        Monomial { a, i, j, b }
    }

    /// `K^i H^j`
    pub fn cartan(i: i32, j: i32) -> Self {
        Monomial { a: 0, i, j, b: 0 }
    }

    /// Applies the `H = K^-1` identification when `params` is one-parameter.
    pub fn folded(self, params: AlgebraParams) -> Self {
        match params.variant {
            Variant::TwoParam => self,
            Variant::OneParam => Monomial { i: self.i - self.j, j: 0, ..self },
        }
    }

    pub fn is_cartan(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// `b - a`: the power of `q^2` by which `K` scales the monomial under
    /// conjugation.
    pub fn weight(&self) -> i64 {
        self.b as i64 - self.a as i64
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let mut push = |sym: &str, e: i64| match e {
            0 => {}
            1 => parts.push(sym.to_string()),
            e => parts.push(format!("{sym}^{e}")),
        };
        push("F", self.a as i64);
        push("K", self.i as i64);
        push("H", self.j as i64);
        push("E", self.b as i64);
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// An element of the algebra in normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgElement {
    params: AlgebraParams,
    terms: BTreeMap<Monomial, FieldElem>,
}

impl AlgElement {
    pub fn zero(params: AlgebraParams) -> Self {
        AlgElement { params, terms: BTreeMap::new() }
    }

    pub fn one(params: AlgebraParams) -> Self {
        Self::scalar(params, FieldElem::one())
    }

    pub fn scalar(params: AlgebraParams, c: FieldElem) -> Self {
        Self::term(params, Monomial::ONE, c)
    }

    pub fn term(params: AlgebraParams, mono: Monomial, c: FieldElem) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono.folded(params), c);
        }
        AlgElement { params, terms }
    }

    pub fn monomial(params: AlgebraParams, mono: Monomial) -> Self {
        Self::term(params, mono, FieldElem::one())
    }

    /// Builds an element from arbitrary terms, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, FieldElem)>>(params: AlgebraParams, iter: I) -> Self {
        let mut out = Self::zero(params);
        for (mono, c) in iter {
            out.add_term(mono, &c);
        }
        out
    }

    pub fn e(params: AlgebraParams) -> Self {
        Self::monomial(params, Monomial::new(0, 0, 0, 1))
    }

    pub fn f(params: AlgebraParams) -> Self {
        Self::monomial(params, Monomial::new(1, 0, 0, 0))
    }

    pub fn k(params: AlgebraParams) -> Self {
        Self::monomial(params, Monomial::cartan(1, 0))
    }

    pub fn k_inv(params: AlgebraParams) -> Self {
        Self::monomial(params, Monomial::cartan(-1, 0))
    }

    pub fn h(params: AlgebraParams) -> Self {
        Self::monomial(params, Monomial::cartan(0, 1))
    }

    pub fn h_inv(params: AlgebraParams) -> Self {
        Self::monomial(params, Monomial::cartan(0, -1))
    }

    /// `K^i H^j`
    pub fn cartan(params: AlgebraParams, i: i32, j: i32) -> Self {
        Self::monomial(params, Monomial::cartan(i, j))
    }

    /// `f_m(K,H) = (K^m - H^m)/(q - q^-1)`; for the one-parameter algebra
    /// this is `f_m(K) = (K^m - K^-m)/(q - q^-1)`.
    pub fn f_m(params: AlgebraParams) -> Self {
        let d = FieldElem::q_minus_qinv().inv();
        let m = params.mi();
        Self::from_terms(params, [(Monomial::cartan(m, 0), d.clone()), (Monomial::cartan(0, m), -d)])
    }

    pub fn params(&self) -> AlgebraParams {
        self.params
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, FieldElem> {
        &self.terms
    }

    pub fn coeff(&self, mono: &Monomial) -> FieldElem {
        self.terms.get(&mono.folded(self.params)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest power of `E` present (0 for the zero element).
    pub fn e_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.b).max().unwrap_or(0)
    }

    /// Highest power of `F` present (0 for the zero element).
    pub fn f_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.a).max().unwrap_or(0)
    }

    /// Returns the scalar `c` if the element is `c * 1`.
    pub fn as_scalar(&self) -> Option<FieldElem> {
        match self.terms.len() {
            0 => Some(FieldElem::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, c: &FieldElem) {
        if c.is_zero() {
            return;
        }
        let mono = mono.folded(self.params);
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c.clone());
            }
        }
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.params != other.params {
            return Err(AlgebraError::ParamMismatch(self.params, other.params));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(*mono, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> Self {
        AlgElement { params: self.params, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero(self.params);
        }
        AlgElement { params: self.params, terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// The product `self * other` in normal form.
    pub fn normal_form_product(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut out = Self::zero(self.params);
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                let c = cx * cy;
                mono_product_into(self.params, x, y, &c, &mut out);
            }
        }
        Ok(out)
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Self) -> Result<Self, AlgebraError> {
        let xy = self.normal_form_product(other)?;
        let yx = other.normal_form_product(self)?;
        xy.try_sub(&yx)
    }

    /// Nonnegative power.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.params);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// If the element is `c K^i H^j` with `c != 0`, returns its inverse.
    pub fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (mono, c) = self.terms.iter().next().unwrap();
        if !mono.is_cartan() {
            return None;
        }
        Some(Self::term(self.params, Monomial::cartan(-mono.i, -mono.j), c.inv()))
    }

    /// Image under the surjection onto `U_q(f_m(K))` sending `H^{±1}` to
    /// `K^{∓1}`. One-parameter input is returned unchanged.
    pub fn project_h_to_kinv(&self) -> Self {
        let target = AlgebraParams::one_param(self.params.m);
        Self::from_terms(target, self.terms.iter().map(|(m, c)| (*m, c.clone())))
    }

    /// Reinterprets the element in another algebra with the same monomials.
    pub fn with_params(&self, params: AlgebraParams) -> Self {
        Self::from_terms(params, self.terms.iter().map(|(m, c)| (*m, c.clone())))
    }

    /// Parses the text format, e.g. `3/(q-1) * F^2 K^-1 H^3 E + q*E*F`.
    /// Input need not be normalized; products are evaluated in the algebra.
    pub fn parse(params: AlgebraParams, src: &str) -> Result<Self, AlgebraError> {
        Ok(expr::parse::<AlgElement>(&params, src)?)
    }

    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms.iter().map(|(m, c)| TermRecord { a: m.a, i: m.i, j: m.j, b: m.b, coeff: c.clone() }).collect()
    }

    pub fn from_records(params: AlgebraParams, records: &[TermRecord]) -> Self {
        Self::from_terms(params, records.iter().map(|r| (Monomial::new(r.a, r.i, r.j, r.b), r.coeff.clone())))
    }
}

/// JSON record for one term of an [`AlgElement`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub a: u32,
    pub i: i32,
    pub j: i32,
    pub b: u32,
    pub coeff: FieldElem,
}

/// `(K^{i1} H^{j1} F^x)` commutes past to `F^x K^{i1} H^{j1}` with factor
/// `q^{2x(j1 - i1)}`; `E^y K^{i2} H^{j2}` becomes `K^{i2} H^{j2} E^y` with
/// factor `q^{2y(j2 - i2)}`.
fn mono_product_into(params: AlgebraParams, x: &Monomial, y: &Monomial, c: &FieldElem, out: &mut AlgElement) {
    let block = ef_block(params, x.b, y.a);
    for (mid, cm) in block.iter() {
        let shift = 2 * (mid.a as i64) * (x.j as i64 - x.i as i64) + 2 * (mid.b as i64) * (y.j as i64 - y.i as i64);
        let coeff = c * cm * FieldElem::q_pow(shift);
        let mono = Monomial { a: x.a + mid.a, i: x.i + mid.i + y.i, j: x.j + mid.j + y.j, b: mid.b + y.b };
        out.add_term(mono, &coeff);
    }
}

type Block = Arc<Vec<(Monomial, FieldElem)>>;
type BlockCache = HashMap<(AlgebraParams, u32, u32), Block>;

fn block_cache() -> &'static Mutex<BlockCache> {
    static CACHE: OnceLock<Mutex<BlockCache>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Normal form of `E^b F^a`, memoized.
fn ef_block(params: AlgebraParams, b: u32, a: u32) -> Block {
    if a == 0 || b == 0 {
        return Arc::new(vec![(Monomial::new(a, 0, 0, b), FieldElem::one())]);
    }
    if let Some(hit) = block_cache().lock().unwrap().get(&(params, b, a)) {
        return hit.clone();
    }
    let prev = ef_block(params, b - 1, a);
    let mut acc = AlgElement::zero(params);
    for (mono, c) in prev.iter() {
        left_mul_e(params, mono, c, &mut acc);
    }
    let block: Block = Arc::new(acc.terms.into_iter().collect());
    block_cache().lock().unwrap().insert((params, b, a), block.clone());
    block
}

/// Adds `E * c F^x K^u H^v E^y` to `out`, using
/// `E F^x = F^x E + F^{x-1} g_x(K,H)` with
/// `g_x = sum_{l<x} f_m(q^{-2l} K, q^{2l} H)`.
fn left_mul_e(params: AlgebraParams, mono: &Monomial, c: &FieldElem, out: &mut AlgElement) {
    let Monomial { a: x, i: u, j: v, b: y } = *mono;
    let pass = FieldElem::q_pow(2 * (v as i64 - u as i64));
    out.add_term(Monomial::new(x, u, v, y + 1), &(c * pass));
    if x == 0 {
        return;
    }
    let (gk, gh) = ladder_sum(params.m, x);
    let m = params.mi();
    out.add_term(Monomial::new(x - 1, u + m, v, y), &(c * &gk));
    out.add_term(Monomial::new(x - 1, u, v + m, y), &(c * &gh));
}

/// Coefficients of `K^m` and `H^m` in `g_x`.
pub(crate) fn ladder_sum(m: u32, x: u32) -> (FieldElem, FieldElem) {
    let d = FieldElem::q_minus_qinv().inv();
    let m = m as i64;
    let mut sk = FieldElem::zero();
    let mut sh = FieldElem::zero();
    for l in 0..x as i64 {
        sk += &FieldElem::q_pow(-2 * l * m);
        sh += &FieldElem::q_pow(2 * l * m);
    }
    (&sk * &d, -(&sh * &d))
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (mono, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_leading() && !c.is_compound();
            let c_abs = if neg { -c } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff = if c_abs.is_compound() { format!("({c_abs})") } else { c_abs.to_string() };
            match (mono == &Monomial::ONE, c_abs.is_one()) {
                (true, _) => write!(f, "{coeff}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{coeff} * {mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl ExprValue for AlgElement {
    type Ctx = AlgebraParams;

    fn integer(ctx: &AlgebraParams, n: BigInt) -> Self {
        AlgElement::scalar(*ctx, FieldElem::from_bigint(n))
    }

    fn symbol(ctx: &AlgebraParams, name: char) -> Result<Self, String> {
        let p = *ctx;
        match name {
            'q' => Ok(AlgElement::scalar(p, FieldElem::q())),
            'E' => Ok(AlgElement::e(p)),
            'F' => Ok(AlgElement::f(p)),
            'K' => Ok(AlgElement::k(p)),
            'H' => Ok(AlgElement::h(p)),
            other => Err(format!("unknown symbol {other:?}")),
        }
    }

    fn add(self, rhs: Self) -> Result<Self, String> {
        self.try_add(&rhs).map_err(|e| e.to_string())
    }

    fn sub(self, rhs: Self) -> Result<Self, String> {
        self.try_sub(&rhs).map_err(|e| e.to_string())
    }

    fn mul(self, rhs: Self) -> Result<Self, String> {
        self.normal_form_product(&rhs).map_err(|e| e.to_string())
    }

    fn div(self, rhs: Self) -> Result<Self, String> {
        match rhs.as_scalar() {
            Some(c) if !c.is_zero() => Ok(self.scale(&c.inv())),
            Some(_) => Err("division by zero".into()),
            None => Err("only division by scalars is supported".into()),
        }
    }

    fn neg(self) -> Self {
        self.neg_ref()
    }

    fn pow(self, exp: i64) -> Result<Self, String> {
        if exp >= 0 {
            return Ok(AlgElement::pow(&self, exp as u32));
        }
        let inv = self.try_inverse().ok_or_else(|| "negative powers are only defined for c*K^i*H^j".to_string())?;
        Ok(AlgElement::pow(&inv, exp.unsigned_abs() as u32))
    }
}

/// Panics on mismatched parameters; use [`AlgElement::normal_form_product`]
/// for a fallible product.
impl Mul<&AlgElement> for &AlgElement {
    type Output = AlgElement;
    fn mul(self, rhs: &AlgElement) -> AlgElement {
        self.normal_form_product(rhs).expect("algebra parameter mismatch")
    }
}

impl Add<&AlgElement> for &AlgElement {
    type Output = AlgElement;
    fn add(self, rhs: &AlgElement) -> AlgElement {
        self.try_add(rhs).expect("algebra parameter mismatch")
    }
}

impl Sub<&AlgElement> for &AlgElement {
    type Output = AlgElement;
    fn sub(self, rhs: &AlgElement) -> AlgElement {
        self.try_sub(rhs).expect("algebra parameter mismatch")
    }
}

impl Neg for &AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        self.neg_ref()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<AlgElement> for AlgElement {
            type Output = AlgElement;
            fn $method(self, rhs: AlgElement) -> AlgElement {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&AlgElement> for AlgElement {
            type Output = AlgElement;
            fn $method(self, rhs: &AlgElement) -> AlgElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Mul, mul);
forward_owned!(Add, add);
forward_owned!(Sub, sub);

impl Neg for AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        self.neg_ref()
    }
}
