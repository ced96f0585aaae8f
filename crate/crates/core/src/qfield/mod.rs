//! Exact arithmetic in the rational function field Q(q).
//!
//! Every [`FieldElem`] is stored in a canonical reduced form, so derived
//! equality and hashing coincide with equality of rational functions. Since
//! `q` is transcendental over Q, it is never a root of unity; identities that
//! hold "for generic q" hold here exactly.

mod poly;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use poly::IntPoly;

use crate::expr::{self, ExprValue, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    PoleAtPoint(BigRational),
    #[error("operation undefined for the zero element")]
    ZeroElement,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A rational function `numerator / denominator` in `q`.
///
/// Invariants: the denominator is nonzero with a positive leading
/// coefficient; numerator and denominator share no polynomial factor and no
/// common integer content; zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    num: IntPoly,
    den: IntPoly,
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        FieldElem { num: IntPoly::one(), den: IntPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        FieldElem { num: IntPoly::constant(n), den: IntPoly::one() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Result<Self, FieldError> {
        Self::from_int(n).try_div(&Self::from_int(d))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_parts(IntPoly::constant(r.numer().clone()), IntPoly::constant(r.denom().clone()))
            .expect("rational has nonzero denominator")
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^n` for any integer `n`.
    pub fn q_pow(n: i64) -> Self {
        let e = n.unsigned_abs() as u32;
        let mono = IntPoly::monomial(BigInt::one(), e);
        if n >= 0 {
            FieldElem { num: mono, den: IntPoly::one() }
        } else {
            FieldElem { num: IntPoly::one(), den: mono }
        }
    }

    /// `q - q^{-1}`, the denominator of `f_m`.
    pub fn q_minus_qinv() -> Self {
        Self::q() - Self::q_pow(-1)
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn from_parts(num: IntPoly, den: IntPoly) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_exact(&g), den.div_exact(&g)) };
        Self::fix_content(num, den)
    }

    /// Removes the common integer content and makes the denominator's
    /// leading coefficient positive. Assumes the polynomial parts are coprime.
    fn fix_content(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let mut c = num.content().gcd(&den.content());
        if den.leading_coeff().unwrap().is_negative() {
            c = -c;
        }
        if c.is_one() {
            FieldElem { num, den }
        } else {
            FieldElem { num: num.div_exact_scalar(&c), den: den.div_exact_scalar(&c) }
        }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the element is an integer or a ratio of integers.
    pub fn is_rational_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// If the element equals `q^k` exactly, returns `k`.
    pub fn as_q_power(&self) -> Option<i64> {
        if !(self.num.is_monomial() && self.den.is_monomial()) {
            return None;
        }
        let (en, cn) = &self.num.terms()[0];
        let (ed, cd) = &self.den.terms()[0];
        if cn == cd {
            Some(*en as i64 - *ed as i64)
        } else {
            None
        }
    }

    pub fn try_inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::fix_content(self.den.clone(), self.num.clone()))
    }

    /// Panicking inverse; use [`FieldElem::try_inv`] where zero is possible.
    pub fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self * &rhs.try_inv()?)
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let e = n.unsigned_abs() as u32;
        FieldElem { num: base.num.pow(e), den: base.den.pow(e) }.renormalize_sign()
    }

    fn renormalize_sign(self) -> Self {
        // powers of a canonical element stay coprime; only sign/content can move
        Self::fix_content(self.num, self.den)
    }

    /// Exact value at a rational point `q = q0`.
    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational, FieldError> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(FieldError::PoleAtPoint(q0.clone()));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// `deg(numerator) - deg(denominator)`; minus the valuation at infinity.
    pub fn net_degree(&self) -> Result<i64, FieldError> {
        match (self.num.degree(), self.den.degree()) {
            (Some(n), Some(d)) => Ok(n as i64 - d as i64),
            _ => Err(FieldError::ZeroElement),
        }
    }

    /// Canonical rendering in the parseable text grammar.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn parse(src: &str) -> Result<Self, FieldError> {
        Ok(expr::parse::<FieldElem>(&(), src)?)
    }

    /// True when rendering needs parentheses to be used as a factor.
    pub(crate) fn is_compound(&self) -> bool {
        !(self.num.terms().len() <= 1 && self.den.is_one())
    }

    /// True if the leading numerator coefficient is negative.
    pub(crate) fn is_negative_leading(&self) -> bool {
        self.num.leading_coeff().is_some_and(|c| c.is_negative())
    }
}

impl Default for FieldElem {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.terms().len() == 1 {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        if self.den.terms().len() == 1 && (self.den.is_constant() || self.den.terms()[0].1.is_one()) {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for FieldElem {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl Serialize for FieldElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Self::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl ExprValue for FieldElem {
    type Ctx = ();

    fn integer(_: &(), n: BigInt) -> Self {
        Self::from_bigint(n)
    }

    fn symbol(_: &(), name: char) -> Result<Self, String> {
        match name {
            'q' => Ok(Self::q()),
            other => Err(format!("unknown symbol {other:?} (only q is allowed)")),
        }
    }

    fn add(self, rhs: Self) -> Result<Self, String> {
        Ok(self + rhs)
    }

    fn sub(self, rhs: Self) -> Result<Self, String> {
        Ok(self - rhs)
    }

    fn mul(self, rhs: Self) -> Result<Self, String> {
        Ok(self * rhs)
    }

    fn div(self, rhs: Self) -> Result<Self, String> {
        self.try_div(&rhs).map_err(|e| e.to_string())
    }

    fn neg(self) -> Self {
        -self
    }

    fn pow(self, exp: i64) -> Result<Self, String> {
        if exp < 0 && self.is_zero() {
            return Err("negative power of zero".into());
        }
        Ok(FieldElem::pow(&self, exp))
    }
}

fn add_impl(a: &FieldElem, b: &FieldElem, negate: bool) -> FieldElem {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate { -b } else { b.clone() };
    }
    let combine = |x: &IntPoly, y: &IntPoly| if negate { x.sub(y) } else { x.add(y) };
    if a.den == b.den {
        if a.den.is_one() {
            return FieldElem { num: combine(&a.num, &b.num), den: IntPoly::one() };
        }
        return FieldElem::normalize(combine(&a.num, &b.num), a.den.clone());
    }
    if a.den.is_one() {
        // (a*bd + bn) / bd is already coprime in its polynomial part
        let num = combine(&a.num.mul(&b.den), &b.num);
        return FieldElem::fix_content(num, b.den.clone());
    }
    if b.den.is_one() {
        let num = combine(&a.num, &b.num.mul(&a.den));
        return FieldElem::fix_content(num, a.den.clone());
    }
    let g = a.den.gcd(&b.den);
    let ad = a.den.div_exact(&g);
    let bd = b.den.div_exact(&g);
    let num = combine(&a.num.mul(&bd), &b.num.mul(&ad));
    let den = a.den.mul(&bd);
    FieldElem::normalize(num, den)
}

fn mul_impl(a: &FieldElem, b: &FieldElem) -> FieldElem {
    if a.is_zero() || b.is_zero() {
        return FieldElem::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return FieldElem { num: a.num.mul(&b.num), den: IntPoly::one() };
    }
    let g1 = a.num.gcd(&b.den);
    let g2 = b.num.gcd(&a.den);
    let (an, bd) =
        if g1.is_one() { (a.num.clone(), b.den.clone()) } else { (a.num.div_exact(&g1), b.den.div_exact(&g1)) };
    let (bn, ad) =
        if g2.is_one() { (b.num.clone(), a.den.clone()) } else { (b.num.div_exact(&g2), a.den.div_exact(&g2)) };
    FieldElem::fix_content(an.mul(&bn), ad.mul(&bd))
}

impl Add<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        add_impl(self, rhs, false)
    }
}

impl Sub<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        add_impl(self, rhs, true)
    }
}

impl Mul<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        mul_impl(self, rhs)
    }
}

/// Panics on a zero divisor, like integer division.
impl Div<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn div(self, rhs: &FieldElem) -> FieldElem {
        self.try_div(rhs).expect("division by zero in Q(q)")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                (&self).$method(rhs)
            }
        }
        impl $tr<FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, rhs: &FieldElem) {
        *self = &*self * rhs;
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::from_int(n)
    }
}

impl std::iter::Sum for FieldElem {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(FieldElem::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for FieldElem {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(FieldElem::one(), |a, b| a * b)
    }
}

/// Parses a rational number such as `3`, `-2/5`.
pub fn parse_rational(src: &str) -> Result<BigRational, String> {
    let src = src.trim();
    let (n, d) = match src.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (src, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| format!("invalid rational {src:?}"))?;
    let d: BigInt = d.parse().map_err(|_| format!("invalid rational {src:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {src:?}"));
    }
    Ok(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str) -> FieldElem {
        FieldElem::parse(s).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(fe("(q^2-1)/(q-1)"), fe("q+1"));
        assert_eq!(fe("1/q") + fe("q"), fe("(q^2+1)/q"));
        assert_eq!((fe("1/q") + fe("q")).to_string(), "(q^2+1)/q");
        assert_eq!(fe("(q^4+1)/(q^2-1)").inv(), fe("(q^2-1)/(q^4+1)"));
        assert_eq!(fe("(q^4+1)/(q^2-1)").to_string(), "(q^4+1)/(q^2-1)");
        // sign lands in the numerator; content removed
        assert_eq!(fe("2/(-4*q)").to_string(), "-1/(2*q)");
        assert_eq!(fe("(6*q+6)/(4*q^2-4)").to_string(), "3/(2*q-2)");
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(FieldElem::zero().try_inv(), Err(FieldError::DivisionByZero));
        assert!(FieldElem::parse("1/(q-q)").is_err());
        assert_eq!(fe("q").try_div(&FieldElem::zero()), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(fe("q+1").eval_at(&rat(2, 1)).unwrap(), rat(3, 1));
        assert_eq!(fe("(q^2-1)/(q-q^-1)").eval_at(&rat(3, 1)).unwrap(), rat(3, 1));
        assert_eq!(fe("1/(q-1)").eval_at(&rat(1, 1)), Err(FieldError::PoleAtPoint(rat(1, 1))));
    }

    #[test]
    fn net_degree_examples() {
        assert_eq!(fe("q^3").net_degree(), Ok(3));
        assert_eq!(fe("(q^2+1)/q^5").net_degree(), Ok(-3));
        assert_eq!(fe("5").net_degree(), Ok(0));
        assert_eq!(FieldElem::zero().net_degree(), Err(FieldError::ZeroElement));
    }

    #[test]
    fn q_powers() {
        assert_eq!(FieldElem::q_pow(-3), fe("q^-3"));
        assert_eq!(fe("q^-3").as_q_power(), Some(-3));
        assert_eq!(fe("2*q").as_q_power(), None);
        assert_eq!(fe("q^2*q^-2"), FieldElem::one());
        assert_eq!(FieldElem::q_minus_qinv(), fe("(q^2-1)/q"));
    }

    #[test]
    fn parse_errors_are_located() {
        let err = FieldElem::parse("q + x").unwrap_err();
        match err {
            FieldError::Parse(p) => assert_eq!(p.pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(FieldElem::parse("(q+1").is_err());
        assert!(FieldElem::parse("").is_err());
    }

    #[test]
    fn render_parse_roundtrip_samples() {
        for s in ["0", "1", "-1", "q", "-q", "3/2", "-3*q^2+q-1", "(q^4+1)/(q^2-1)", "-q/(q+1)", "1/(2*q)"] {
            let x = fe(s);
            assert_eq!(fe(&x.to_string()), x, "{s}");
        }
    }
}
