mod common;

use common::{fe, oracle_product};
use uqfm_core::algebra::{casimir, AlgElement, AlgebraParams, Gen, Monomial};
use uqfm_core::hyperbolic::{classify_spectrum, MaxIdealPoint};
use uqfm_core::linalg::scale;
use uqfm_core::qfield::FieldElem;
use uqfm_core::repmod::{build_module, casimir_scalar, WeightModule};
use uqfm_core::whittaker::{build_whittaker_module, WhittakerData};

fn module(a: &str, b: &str, g: &str, window: usize) -> WeightModule {
    let p = MaxIdealPoint::parse(a, b, g, 1).unwrap();
    build_module(&p, classify_spectrum(&p, 64).unwrap(), window).unwrap()
}

#[test]
fn e_times_f_squared_by_rewriting() {
    let got = oracle_product(1, &Monomial::new(0, 0, 0, 1), &Monomial::new(2, 0, 0, 0));
    let p = AlgebraParams::two_param(1);
    assert_eq!(got, &AlgElement::e(p) * &AlgElement::f(p).pow(2));
}

#[test]
fn corrupted_matrix_breaks_commutator_relation() {
    let mut rep = module("q", "q^2", "1", 12).into_rep();
    assert!(rep.verify_relations().passed());
    let bumped = rep.op(Gen::E).entry(0, 1) + FieldElem::one();
    rep.set_entry(Gen::E, 0, 1, bumped);
    let report = rep.verify_relations();
    assert!(report.failures.iter().any(|f| f.relation == "EF - FE = f_m(K,H)"));
}

#[test]
fn kh_acts_by_beta_gamma() {
    let m = module("q", "q^3", "q^-1", 12);
    let kh = AlgElement::cartan(m.params(), 1, 1);
    for i in 0..m.dim() {
        let v = m.rep().basis_vector(i);
        assert_eq!(m.act(&kh, &v).unwrap(), scale(&v, &fe("q^2")));
    }
}

#[test]
fn infinite_modules_have_scalar_casimir_on_interior() {
    for (a, b, g) in [("0", "q", "1"), ("1", "q", "1"), ("q^2", "3", "1")] {
        let m = module(a, b, g, 6);
        assert!(m.verify_relations().passed(), "{a} {b} {g}");
        let omega = casimir(m.params());
        let interior = m.rep().interior();
        assert!(!interior.is_empty());
        let v = m.rep().basis_vector(interior[0]);
        let c = m.act(&omega, &v).unwrap()[&interior[0]].clone();
        assert_eq!(casimir_scalar(&m), Some(c));
    }
}

#[test]
fn whittaker_f_on_omega_solves_casimir_equation() {
    // Ω ω = F E ω + g ω = e F ω + g ω must equal a ω.
    let d = WhittakerData::new(fe("2q-1"), fe("q^3"), fe("1/q"), 2, 8).unwrap();
    let w = build_whittaker_module(&d).unwrap();
    let omega = w.omega();
    let p = AlgebraParams::two_param(2);
    assert_eq!(w.rep().act(&casimir(p), &omega).unwrap(), scale(&omega, &d.a));
    let f_omega = w.rep().apply_gen(Gen::F, &omega).unwrap();
    let dd = fe("1/((q^4-1)(q-q^-1))");
    let mut want = scale(&omega, &(&d.a / &d.e));
    want.insert(w.k_index(2), -(fe("q^4") * &dd) / &d.e);
    want.insert(w.h_index(2), -(&dd / &d.e));
    assert_eq!(f_omega, want);
}

#[test]
fn twisted_tensor_isomorphism_for_m2() {
    use uqfm_core::algebra::{Coproduct, HopfMap, HopfParams};
    use uqfm_core::repmod::{modules_isomorphic, one_param_irrep, pullback_pi_w, tensor_product, PullbackParams};
    let tp = AlgebraParams::two_param(2);
    let two_param = HopfMap::two_param(tp, Coproduct::HLeft).unwrap().certify().unwrap();
    let op = AlgebraParams::one_param(2);
    let one_param = HopfMap::one_param(op, HopfParams::new(-2, 0, op).unwrap()).unwrap().certify().unwrap();
    let a = one_param_irrep(2, 1, false).unwrap();
    let b = one_param_irrep(2, 2, false).unwrap();
    let (w, w2) = (fe("q+1"), fe("-q^2"));
    let at = |x: &FieldElem| PullbackParams::new(x.clone()).unwrap();
    let left = tensor_product(&pullback_pi_w(&a, &at(&w)).unwrap(), &pullback_pi_w(&b, &at(&w2)).unwrap(), &two_param)
        .unwrap();
    let right = pullback_pi_w(&tensor_product(&a, &b, &one_param).unwrap(), &at(&(&w * &w2))).unwrap();
    assert!(left.verify_relations().passed());
    assert_eq!(modules_isomorphic(&left, &right), Ok(true));
}
