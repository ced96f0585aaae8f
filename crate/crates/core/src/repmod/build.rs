use std::collections::BTreeMap;

use super::{BasisLabel, Operator, Provenance, RepError, Representation, WeightModule};
use crate::algebra::{AlgebraParams, Gen};
use crate::hyperbolic::{classify_spectrum, Exactness, MaxIdealPoint, SpectrumCase, SpectrumTag};
use crate::qfield::FieldElem;

/// Ladder module on indices `lo..=hi` with `v_k` of weight
/// `(q^{-2k} β, q^{2k} γ)`. `F v_k = v_{k+1}` and `E v_k = θ^{k-1}(ξ)(p) v_{k-1}`
/// for `k >= 0`; for `k < 0`, `v_k = E^{-k} · 1` so that
/// `E v_k = v_{k-1}` and `F v_k = θ^k(ξ)(p) v_{k+1}`.
fn ladder(
    params: AlgebraParams,
    p: &MaxIdealPoint,
    lo: i64,
    hi: i64,
    f_open_top: bool,
    e_open_bottom: bool,
    label: impl Fn(i64) -> BasisLabel,
) -> Representation {
    let dim = (hi - lo + 1) as usize;
    let idx = |k: i64| (k - lo) as usize;
    let mut k_op = Operator::zero(dim);
    let mut ki_op = Operator::zero(dim);
    let mut h_op = Operator::zero(dim);
    let mut hi_op = Operator::zero(dim);
    let mut e_op = Operator::zero(dim);
    let mut f_op = Operator::zero(dim);
    for k in lo..=hi {
        let i = idx(k);
        let kv = &p.beta * FieldElem::q_pow(-2 * k);
        let hv = &p.gamma * FieldElem::q_pow(2 * k);
        ki_op.set(i, i, kv.inv());
        hi_op.set(i, i, hv.inv());
        k_op.set(i, i, kv);
        h_op.set(i, i, hv);
        if k < hi {
            let c = if k >= 0 { FieldElem::one() } else { p.orbit_value(k) };
            f_op.set(idx(k + 1), i, c);
        } else if f_open_top {
            f_op.mark_open(i);
        }
        if k > lo {
            let c = if k >= 1 { p.orbit_value(k - 1) } else { FieldElem::one() };
            e_op.set(idx(k - 1), i, c);
        } else if e_open_bottom {
            e_op.mark_open(i);
        }
    }
    let ops: BTreeMap<Gen, Operator> =
        [(Gen::E, e_op), (Gen::F, f_op), (Gen::K, k_op), (Gen::KInv, ki_op), (Gen::H, h_op), (Gen::HInv, hi_op)]
            .into_iter()
            .collect();
    Representation::new(params, (lo..=hi).map(label).collect(), ops).expect("all generators supplied")
}

/// Builds the irreducible module `U / P` for the case of `p`.
///
/// Finite cases use basis `v_0..v_n`; infinite cases are windowed: indices
/// `0..=window` for `OneInfinity`, `-window..=0` for `InfinityOne` and
/// `-window..=window` for `InfinityInfinity`.
pub fn build_module(p: &MaxIdealPoint, case: SpectrumCase, window: usize) -> Result<WeightModule, RepError> {
    let actual = classify_spectrum(p, 64)?;
    if !actual.same_case(&case) {
        return Err(RepError::CaseMismatch { requested: case, actual });
    }
    let params = AlgebraParams::two_param(p.m);
    let w = window as i64;
    if case.tag.finite_dim().is_none() && window < 2 {
        return Err(RepError::WindowTooSmall(2));
    }
    let rep = match case.tag.canonical() {
        SpectrumTag::OneFinite(n) => ladder(params, p, 0, n as i64, false, false, |k| BasisLabel::Fin(k as u32)),
        SpectrumTag::OneInfinity => ladder(params, p, 0, w, true, false, BasisLabel::Win),
        SpectrumTag::InfinityOne => ladder(params, p, -w, 0, false, true, BasisLabel::Win),
        SpectrumTag::InfinityInfinity => ladder(params, p, -w, w, true, true, BasisLabel::Win),
        SpectrumTag::OneOne => unreachable!("canonical form"),
    };
    WeightModule::new(rep, Provenance::Point { point: p.clone(), case: actual })
}

/// The `(n+1)`-dimensional irreducible module of `U_q(f_m(K))` with highest
/// weight `β = ±q^n`, realized at the point `(α, β, β^-1)` with
/// `α = (β^m - β^-m)/(q - q^-1)`.
pub fn one_param_irrep(m: u32, n: u32, negative: bool) -> Result<WeightModule, RepError> {
    if m == 0 {
        return Err(RepError::InvalidArgument("m must be positive".into()));
    }
    let sign = if negative { -FieldElem::one() } else { FieldElem::one() };
    let beta = sign * FieldElem::q_pow(n as i64);
    let gamma = beta.inv();
    let alpha = (beta.pow(m as i64) - gamma.pow(m as i64)) / FieldElem::q_minus_qinv();
    let p = MaxIdealPoint::new(alpha, beta, gamma, m)?;
    let case = SpectrumCase { tag: SpectrumTag::OneFinite(n), exactness: Exactness::Proved };
    let actual = classify_spectrum(&p, 64)?;
    if !actual.same_case(&case) {
        return Err(RepError::CaseMismatch { requested: case, actual });
    }
    let rep = ladder(AlgebraParams::one_param(m), &p, 0, n as i64, false, false, |k| BasisLabel::Fin(k as u32));
    WeightModule::new(rep, Provenance::Point { point: p, case: actual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SparseVec;

    fn case(tag: SpectrumTag) -> SpectrumCase {
        SpectrumCase { tag, exactness: Exactness::Proved }
    }

    #[test]
    fn two_dim_example() {
        let p = MaxIdealPoint::parse("q", "q^2", "1", 1).unwrap();
        let m = build_module(&p, case(SpectrumTag::OneFinite(1)), 12).unwrap();
        assert_eq!(m.dim(), 2);
        let r = m.rep();
        assert_eq!(r.op(Gen::K).entry(0, 0), FieldElem::q_pow(2));
        assert_eq!(r.op(Gen::K).entry(1, 1), FieldElem::one());
        assert_eq!(r.op(Gen::H).entry(1, 1), FieldElem::q_pow(2));
        assert_eq!(r.op(Gen::F).entry(1, 0), FieldElem::one());
        assert_eq!(r.op(Gen::E).entry(0, 1), FieldElem::q());
        assert!(m.verify_relations().passed());
    }

    #[test]
    fn one_dim_example() {
        let p = MaxIdealPoint::parse("0", "1", "1", 1).unwrap();
        let m = build_module(&p, case(SpectrumTag::OneOne), 12).unwrap();
        assert_eq!(m.dim(), 1);
        assert!(m.rep().op(Gen::E).column(0).is_empty());
        assert!(m.rep().op(Gen::F).column(0).is_empty());
        assert!(m.verify_relations().passed());
    }

    #[test]
    fn infinity_one_example() {
        let p = MaxIdealPoint::parse("0", "q", "1", 1).unwrap();
        let m = build_module(&p, case(SpectrumTag::InfinityOne), 4).unwrap();
        let v1 = m.rep().basis().iter().position(|b| *b == BasisLabel::Win(-1)).unwrap();
        let v0 = m.rep().basis().iter().position(|b| *b == BasisLabel::Win(0)).unwrap();
        let mut x = SparseVec::new();
        x.insert(v1, FieldElem::one());
        let y = m.rep().apply_gen(Gen::F, &x).unwrap();
        assert_eq!(y.len(), 1);
        assert_eq!(y[&v0], FieldElem::parse("-q/(q+1)").unwrap());
        let report = m.verify_relations();
        assert!(report.passed());
        assert!(report.interior < report.dim);
    }

    #[test]
    fn mismatch_and_window() {
        let p = MaxIdealPoint::parse("1", "q", "1", 1).unwrap();
        assert!(matches!(build_module(&p, case(SpectrumTag::OneFinite(1)), 12), Err(RepError::CaseMismatch { .. })));
        assert_eq!(build_module(&p, case(SpectrumTag::InfinityInfinity), 1), Err(RepError::WindowTooSmall(2)));
        let m = build_module(&p, case(SpectrumTag::InfinityInfinity), 3).unwrap();
        assert!(m.verify_relations().passed());
    }

    #[test]
    fn one_param_irreps() {
        for m in 1..=3 {
            for n in 0..=3 {
                for neg in [false, true] {
                    let module = one_param_irrep(m, n, neg).unwrap();
                    assert_eq!(module.dim(), n as usize + 1);
                    assert!(module.verify_relations().passed());
                }
            }
        }
    }
}
