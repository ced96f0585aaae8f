//! Sparse univariate polynomials in `q` with big-integer coefficients.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A polynomial in `q` over the integers.
///
/// Terms are kept sorted by ascending exponent and never carry a zero
/// coefficient, so the empty term list is the zero polynomial and structural
/// equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    terms: Vec<(u32, BigInt)>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            IntPoly { terms: vec![(0, c)] }
        }
    }

    /// `c * q^e`
    pub fn monomial(c: BigInt, e: u32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            IntPoly { terms: vec![(e, c)] }
        }
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (u32, BigInt)>>(iter: I) -> Self {
        let mut terms: Vec<(u32, BigInt)> = iter.into_iter().collect();
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(u32, BigInt)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        IntPoly { terms: out }
    }

    pub fn terms(&self) -> &[(u32, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// True for a single-term polynomial `c q^e`.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == 0)
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|t| t.0)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn coeff(&self, e: u32) -> BigInt {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(idx) => self.terms[idx].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_exact_scalar(&self, c: &BigInt) -> Self {
        IntPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| {
                    debug_assert!((x % c).is_zero());
                    (*e, x / c)
                })
                .collect(),
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift_up(&self, k: u32) -> Self {
        IntPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Division by `q^k`; requires `k <= valuation`.
    pub fn shift_down(&self, k: u32) -> Self {
        IntPoly { terms: self.terms.iter().map(|(e, c)| (e - k, c.clone())).collect() }
    }

    /// Content and sign removed: positive leading coefficient, content 1.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().unwrap().is_negative() {
            c = -c;
        }
        if c.is_one() {
            self.clone()
        } else {
            self.div_exact_scalar(&c)
        }
    }

    pub fn neg(&self) -> Self {
        IntPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        IntPoly { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return IntPoly { terms: self.terms.iter().map(|(x, y)| (x + e, y * c)).collect() };
        }
        if self.terms.len() == 1 {
            return other.mul(self);
        }
        let lo = self.valuation().unwrap() + other.valuation().unwrap();
        let hi = self.degree().unwrap() + other.degree().unwrap();
        let span = (hi - lo + 1) as usize;
        if span <= 4 * self.terms.len() * other.terms.len() {
            let mut acc = vec![BigInt::zero(); span];
            for (ea, ca) in &self.terms {
                for (eb, cb) in &other.terms {
                    acc[(ea + eb - lo) as usize] += ca * cb;
                }
            }
            IntPoly {
                terms: acc
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k as u32 + lo, c))
                    .collect(),
            }
        } else {
            Self::from_terms(
                self.terms.iter().flat_map(|(ea, ca)| other.terms.iter().map(move |(eb, cb)| (ea + eb, ca * cb))),
            )
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Pseudo-remainder of `self` by `divisor`: `lc(divisor)^k * self mod divisor`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let d_deg = divisor.degree().expect("pseudo_rem by zero");
        let d_lc = divisor.leading_coeff().unwrap().clone();
        let mut r = self.clone();
        while let Some(r_deg) = r.degree() {
            if r_deg < d_deg {
                break;
            }
            let r_lc = r.leading_coeff().unwrap().clone();
            let g = r_lc.gcd(&d_lc);
            let mult_r = &d_lc / &g;
            let mult_d = &r_lc / &g;
            let shifted = divisor.scale(&mult_d).shift_up(r_deg - d_deg);
            r = r.scale(&mult_r).sub(&shifted);
        }
        r
    }

    /// Exact quotient `self / divisor`, assuming divisibility over the integers.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        if divisor.is_one() {
            return self.clone();
        }
        if divisor.is_monomial() {
            let (e, c) = &divisor.terms[0];
            return self.shift_down(*e).div_exact_scalar(c);
        }
        let d_deg = divisor.degree().expect("division by zero polynomial");
        let d_lc = divisor.leading_coeff().unwrap();
        let mut r = self.clone();
        let mut quot: Vec<(u32, BigInt)> = Vec::new();
        while let Some(r_deg) = r.degree() {
            let r_lc = r.leading_coeff().unwrap();
            debug_assert!(r_deg >= d_deg, "inexact polynomial division");
            let (c, rem) = r_lc.div_rem(d_lc);
            debug_assert!(rem.is_zero(), "inexact polynomial division");
            let e = r_deg - d_deg;
            r = r.sub(&divisor.scale(&c).shift_up(e));
            quot.push((e, c));
        }
        quot.reverse();
        IntPoly { terms: quot }
    }

    /// Greatest common divisor over the rationals, returned primitive with a
    /// positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let va = self.valuation().unwrap();
        let vb = other.valuation().unwrap();
        let v = va.min(vb);
        let mut a = self.shift_down(va);
        let mut b = other.shift_down(vb);
        if a.is_constant() || b.is_constant() {
            return Self::monomial(BigInt::one(), v);
        }
        a = a.primitive_part();
        b = b.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.is_constant() {
                return Self::monomial(BigInt::one(), v);
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().shift_up(v)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        let mut prev = self.degree().unwrap_or(0);
        for (e, c) in self.terms.iter().rev() {
            acc = acc * pow_rat(x, prev - e) + BigRational::from_integer(c.clone());
            prev = *e;
        }
        acc * pow_rat(x, prev)
    }
}

fn pow_rat(x: &BigRational, n: u32) -> BigRational {
    num_traits::pow(x.clone(), n as usize)
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit = abs.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{abs}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_terms(coeffs.iter().enumerate().map(|(e, c)| (e as u32, BigInt::from(*c))))
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[-1, 0, 1]); // q^2 - 1
        let b = p(&[-1, 1]); // q - 1
        assert_eq!(a.div_exact(&b), p(&[1, 1]));
        assert_eq!(b.mul(&p(&[1, 1])), a);
        assert_eq!(a.sub(&a), IntPoly::zero());
        assert_eq!(a.to_string(), "q^2-1");
        assert_eq!(p(&[0, -3, 2]).to_string(), "2*q^2-3*q");
    }

    #[test]
    fn gcd_cases() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(a.gcd(&b), b);
        // (2q^2 - 2) and (4q + 4) share q + 1 over Q
        assert_eq!(a.scale(&BigInt::from(2)).gcd(&p(&[4, 4])), p(&[1, 1]));
        // powers of q
        assert_eq!(p(&[0, 0, 3]).gcd(&p(&[0, 5, 5])), p(&[0, 1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[-1, 1])), IntPoly::one());
    }

    #[test]
    fn eval_horner() {
        let a = p(&[1, 0, 0, 2]); // 2q^3 + 1
        let x = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(a.eval(&x), BigRational::new(BigInt::from(5), BigInt::from(4)));
    }
}
