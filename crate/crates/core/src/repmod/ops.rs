use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{BasisLabel, Operator, Provenance, RepError, Representation, WeightModule};
use crate::algebra::{AlgElement, AlgebraParams, CertifiedCoproduct, Gen};
use crate::linalg::SparseVec;
use crate::qfield::FieldElem;

/// `w` with `z = w^2`, so that `z^{1/2}` and `z^{m/2}` stay in `Q(q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PullbackParams {
    pub w: FieldElem,
}

impl PullbackParams {
    pub fn new(w: FieldElem) -> Result<Self, RepError> {
        if w.is_zero() {
            return Err(RepError::ZeroParameter);
        }
        Ok(PullbackParams { w })
    }
}

/// Pulls a `U_q(f_m(K))`-module back along
/// `π_z: E -> w^m E, F -> F, K -> w K, H -> w K^-1`.
pub fn pullback_pi_w(m: &WeightModule, pw: &PullbackParams) -> Result<WeightModule, RepError> {
    if pw.w.is_zero() {
        return Err(RepError::ZeroParameter);
    }
    let params = m.params();
    if !params.is_one_param() {
        return Err(RepError::InvalidArgument("pullback needs a one-parameter module".into()));
    }
    let w = &pw.w;
    let wi = w.inv();
    let wm = w.pow(params.m as i64);
    let src = m.rep();
    let scaled = |g: Gen, c: &FieldElem| src.op(g).map_entries(|x| x * c);
    let ops: BTreeMap<Gen, Operator> = [
        (Gen::E, scaled(Gen::E, &wm)),
        (Gen::F, src.op(Gen::F).clone()),
        (Gen::K, scaled(Gen::K, w)),
        (Gen::KInv, scaled(Gen::KInv, &wi)),
        (Gen::H, scaled(Gen::KInv, w)),
        (Gen::HInv, scaled(Gen::K, &wi)),
    ]
    .into_iter()
    .collect();
    let rep = Representation::new(AlgebraParams::two_param(params.m), src.basis().to_vec(), ops)?;
    WeightModule::new(rep, Provenance::Derived(format!("pullback at w = {w}")))
}

/// The one-dimensional module with `E = F = 0` and `K = H = w`.
pub fn epsilon_w(m: u32, pw: &PullbackParams) -> Result<WeightModule, RepError> {
    if pw.w.is_zero() {
        return Err(RepError::ZeroParameter);
    }
    let w = &pw.w;
    let ops: BTreeMap<Gen, Operator> = [
        (Gen::E, Operator::zero(1)),
        (Gen::F, Operator::zero(1)),
        (Gen::K, Operator::diagonal(std::slice::from_ref(w))),
        (Gen::KInv, Operator::diagonal(&[w.inv()])),
        (Gen::H, Operator::diagonal(std::slice::from_ref(w))),
        (Gen::HInv, Operator::diagonal(&[w.inv()])),
    ]
    .into_iter()
    .collect();
    let rep = Representation::new(AlgebraParams::two_param(m), vec![BasisLabel::Fin(0)], ops)?;
    WeightModule::new(rep, Provenance::Derived(format!("epsilon at w = {w}")))
}

/// `M ⊗ N` with generators acting through a certified coproduct.
pub fn tensor_product(
    a: &WeightModule,
    b: &WeightModule,
    delta: &CertifiedCoproduct,
) -> Result<WeightModule, RepError> {
    let params = delta.params();
    for x in [a, b] {
        if x.params() != params {
            return Err(RepError::ParamMismatch(x.params(), params));
        }
        if !x.is_finite() {
            return Err(RepError::NotFiniteDimensional);
        }
    }
    let (da, db) = (a.dim(), b.dim());
    let mut ops = BTreeMap::new();
    for g in Gen::ALL {
        let image = delta.coproduct(&g.element(params));
        let mut op = Operator::zero(da * db);
        for i in 0..da {
            for j in 0..db {
                let mut col = SparseVec::new();
                for (legs, c) in image.terms() {
                    let x = a.act(&AlgElement::monomial(params, legs[0]), &a.rep().basis_vector(i))?;
                    let y = b.act(&AlgElement::monomial(params, legs[1]), &b.rep().basis_vector(j))?;
                    for (r, xr) in &x {
                        for (s, ys) in &y {
                            let slot = col.entry(r * db + s).or_default();
                            *slot += &(c * xr * ys);
                        }
                    }
                }
                for (row, v) in col {
                    op.set(row, i * db + j, v);
                }
            }
        }
        ops.insert(g, op);
    }
    let basis = a
        .rep()
        .basis()
        .iter()
        .flat_map(|x| b.rep().basis().iter().map(move |y| BasisLabel::Tensor(Box::new(x.clone()), Box::new(y.clone()))))
        .collect();
    let rep = Representation::new(params, basis, ops)?;
    WeightModule::new(rep, Provenance::Derived(format!("tensor product via {}", delta.label())))
}

/// `M ⊕ N`
pub fn direct_sum(a: &WeightModule, b: &WeightModule) -> Result<WeightModule, RepError> {
    if a.params() != b.params() {
        return Err(RepError::ParamMismatch(a.params(), b.params()));
    }
    let (da, db) = (a.dim(), b.dim());
    let mut ops = BTreeMap::new();
    for g in Gen::ALL {
        let mut op = Operator::zero(da + db);
        for (offset, src) in [(0, a), (da, b)] {
            let sop = src.rep().op(g);
            for c in 0..src.dim() {
                if sop.is_open(c) {
                    op.mark_open(offset + c);
                }
                for (r, x) in sop.column(c) {
                    op.set(offset + r, offset + c, x.clone());
                }
            }
        }
        ops.insert(g, op);
    }
    let basis = a
        .rep()
        .basis()
        .iter()
        .map(|l| BasisLabel::Summand(0, Box::new(l.clone())))
        .chain(b.rep().basis().iter().map(|l| BasisLabel::Summand(1, Box::new(l.clone()))))
        .collect();
    let rep = Representation::new(a.params(), basis, ops)?;
    WeightModule::new(rep, Provenance::Derived("direct sum".into()))
}

#[cfg(test)]
mod tests {
    use super::super::{
        decompose_completely, is_irreducible, modules_isomorphic, one_param_irrep, weight_decomposition,
    };
    use super::*;
    use crate::algebra::{Coproduct, HopfMap, HopfParams};

    fn fe(s: &str) -> FieldElem {
        FieldElem::parse(s).unwrap()
    }

    fn one_param_delta(m: u32, s: i32) -> CertifiedCoproduct {
        let p = AlgebraParams::one_param(m);
        HopfMap::one_param(p, HopfParams::new(s, s + m as i32, p).unwrap()).unwrap().certify().unwrap()
    }

    #[test]
    fn pullback_laws() {
        let m = one_param_irrep(1, 1, false).unwrap();
        let at_one = pullback_pi_w(&m, &PullbackParams::new(FieldElem::one()).unwrap()).unwrap();
        assert_eq!(at_one.rep().op(Gen::H), m.rep().op(Gen::KInv));
        assert!(at_one.verify_relations().passed());
        let w = fe("q+2");
        let pw = pullback_pi_w(&m, &PullbackParams::new(w.clone()).unwrap()).unwrap();
        assert!(pw.verify_relations().passed());
        let kh = AlgElement::cartan(pw.params(), 1, 1);
        for i in 0..pw.dim() {
            let v = pw.rep().basis_vector(i);
            let img = pw.act(&kh, &v).unwrap();
            assert_eq!(img, crate::linalg::scale(&v, &w.pow(2)));
        }
        assert!(is_irreducible(&pw).unwrap());
        assert_eq!(PullbackParams::new(FieldElem::zero()), Err(RepError::ZeroParameter));
    }

    #[test]
    fn epsilon_module() {
        let e = epsilon_w(1, &PullbackParams::new(fe("q")).unwrap()).unwrap();
        assert_eq!(e.rep().op(Gen::K).entry(0, 0), fe("q"));
        assert!(e.verify_relations().passed());
    }

    #[test]
    fn tensor_two_by_two() {
        let two = one_param_irrep(1, 1, false).unwrap();
        let t = tensor_product(&two, &two, &one_param_delta(1, 0)).unwrap();
        assert_eq!(t.dim(), 4);
        assert!(t.verify_relations().passed());
        let w = weight_decomposition(&t);
        assert_eq!(w.len(), 3);
        assert_eq!(w[1], (super::super::Weight { k: fe("1"), h: fe("1") }, 2));
        let parts = decompose_completely(&t).unwrap();
        let dims: Vec<(usize, usize)> = parts.iter().map(|(s, c)| (s.dim(), *c)).collect();
        assert_eq!(dims, vec![(3, 1), (1, 1)]);
    }

    #[test]
    fn epsilon_twist_matches_pullback() {
        let tp = AlgebraParams::two_param(1);
        let delta = HopfMap::two_param(tp, Coproduct::HLeft).unwrap().certify().unwrap();
        let m = one_param_irrep(1, 1, false).unwrap();
        let w = fe("q^2+1");
        let m1 = pullback_pi_w(&m, &PullbackParams::new(FieldElem::one()).unwrap()).unwrap();
        let mw = pullback_pi_w(&m, &PullbackParams::new(w.clone()).unwrap()).unwrap();
        let eps = epsilon_w(1, &PullbackParams::new(w).unwrap()).unwrap();
        let twisted = tensor_product(&eps, &m1, &delta).unwrap();
        assert!(modules_isomorphic(&twisted, &mw).unwrap());
    }
}
