//! Projection along a non-singular character `η` of the `E`-subalgebra.

use super::{AlgElement, AlgebraError, Monomial};
use crate::qfield::FieldElem;

/// `u^η`: substitutes `E -> e` in the normal form, leaving an element of
/// `E`-degree 0.
pub fn eta_projection(x: &AlgElement, e: &FieldElem) -> Result<AlgElement, AlgebraError> {
    if e.is_zero() {
        return Err(AlgebraError::SingularCharacter);
    }
    Ok(AlgElement::from_terms(
        x.params(),
        x.terms().iter().map(|(mono, c)| (Monomial { b: 0, ..*mono }, c * e.pow(mono.b as i64))),
    ))
}

/// `η(x)` for `x` a polynomial in `E`.
fn eta_scalar(x: &AlgElement, e: &FieldElem) -> FieldElem {
    x.terms().iter().map(|(mono, c)| c * e.pow(mono.b as i64)).sum()
}

/// `x • v = (xv)^η - η(x) v` for `x` in the `E`-subalgebra and `v` of
/// `E`-degree 0.
pub fn eta_reduced_action(x: &AlgElement, v: &AlgElement, e: &FieldElem) -> Result<AlgElement, AlgebraError> {
    if e.is_zero() {
        return Err(AlgebraError::SingularCharacter);
    }
    if x.terms().keys().any(|mono| mono.a != 0 || mono.i != 0 || mono.j != 0) {
        return Err(AlgebraError::DomainViolation("x must be a polynomial in E".into()));
    }
    if v.e_degree() > 0 {
        return Err(AlgebraError::DomainViolation("v must have E-degree 0".into()));
    }
    let xv = x.normal_form_product(v)?;
    let projected = eta_projection(&xv, e)?;
    Ok(&projected - &v.scale(&eta_scalar(x, e)))
}
