mod common;

use common::{fe, oracle_mul};
use proptest::prelude::*;
use uqfm_core::algebra::{
    casimir, center_membership, eta_projection, AlgElement, AlgebraParams, CenterPoly, Coproduct, HopfMap,
};
use uqfm_core::hyperbolic::{
    classify_spectrum, classify_spectrum_bounded, evaluate_at_point, orbit_distinct, theta_apply, theta_xi, Exactness,
    RElement, SpectrumTag,
};
use uqfm_core::qfield::{parse_rational, FieldElem};
use uqfm_core::random;
use uqfm_core::repmod::{build_module, is_irreducible, modules_isomorphic, one_param_irrep};
use uqfm_core::whittaker::{
    build_whittaker_module, central_action, filtration_decompose, filtration_reconstruct, whittaker_vectors,
    WhittakerData,
};

fn poly(coeffs: &[i64], shift: i64) -> FieldElem {
    coeffs.iter().enumerate().map(|(k, c)| FieldElem::from_int(*c) * FieldElem::q_pow(k as i64 + shift)).sum()
}

prop_compose! {
    fn field_elem()(num in prop::collection::vec(-4i64..=4, 1..4),
                    den in prop::collection::vec(-3i64..=3, 1..3),
                    shift in -2i64..=2) -> FieldElem {
        let d = poly(&den, 0);
        let n = poly(&num, shift);
        if d.is_zero() { n } else { n / d }
    }
}

fn nonzero() -> impl Strategy<Value = FieldElem> {
    field_elem().prop_filter("nonzero", |x| !x.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(x in field_elem(), y in field_elem(), z in field_elem()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &x, FieldElem::zero());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv(), FieldElem::one());
        }
    }

    #[test]
    fn field_text_round_trip(x in field_elem()) {
        prop_assert_eq!(FieldElem::parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn evaluation_is_a_homomorphism(x in field_elem(), y in field_elem(), q0 in 2i64..7) {
        let q0 = parse_rational(&format!("{q0}/3")).unwrap();
        if let (Ok(a), Ok(b)) = (x.eval_at(&q0), y.eval_at(&q0)) {
            prop_assert_eq!((&x * &y).eval_at(&q0).unwrap(), &a * &b);
            prop_assert_eq!((&x + &y).eval_at(&q0).unwrap(), &a + &b);
        }
    }

    #[test]
    fn net_degree_is_additive(x in nonzero(), y in nonzero()) {
        prop_assert_eq!(
            (&x * &y).net_degree().unwrap(),
            x.net_degree().unwrap() + y.net_degree().unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_matches_word_rewriting(seed in any::<u64>(), m in 1u32..=3) {
        let mut rng = random::rng(seed);
        let p = AlgebraParams::two_param(m);
        let x = random::alg_element(&mut rng, p, 2, 2);
        let y = random::alg_element(&mut rng, p, 2, 2);
        prop_assert_eq!(&x * &y, oracle_mul(&x, &y));
    }

    #[test]
    fn product_is_associative(seed in any::<u64>(), m in 1u32..=3, one_param in any::<bool>()) {
        let mut rng = random::rng(seed);
        let p = if one_param { AlgebraParams::one_param(m) } else { AlgebraParams::two_param(m) };
        let x = random::alg_element(&mut rng, p, 2, 2);
        let y = random::alg_element(&mut rng, p, 2, 2);
        let z = random::alg_element(&mut rng, p, 2, 2);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn element_text_and_json_round_trip(seed in any::<u64>(), m in 1u32..=3) {
        let mut rng = random::rng(seed);
        let p = AlgebraParams::two_param(m);
        let x = random::alg_element(&mut rng, p, 3, 3);
        prop_assert_eq!(AlgElement::parse(p, &x.to_string()).unwrap(), x.clone());
        prop_assert_eq!(AlgElement::from_records(p, &x.to_records()), x);
    }

    #[test]
    fn folding_is_a_homomorphism(seed in any::<u64>(), m in 1u32..=2) {
        let mut rng = random::rng(seed);
        let p = AlgebraParams::two_param(m);
        let x = random::alg_element(&mut rng, p, 2, 2);
        let y = random::alg_element(&mut rng, p, 2, 2);
        prop_assert_eq!((&x * &y).project_h_to_kinv(), &x.project_h_to_kinv() * &y.project_h_to_kinv());
    }

    #[test]
    fn center_recognizes_its_basis(k in 0u32..=3, l in -3i32..=3, c in nonzero(), m in 1u32..=2) {
        let p = AlgebraParams::two_param(m);
        let z = (&casimir(p).pow(k) * &AlgElement::cartan(p, l, l)).scale(&c);
        let mut want = CenterPoly::default();
        want.terms.insert((k, l), c);
        prop_assert_eq!(center_membership(&z), Some(want));
    }

    #[test]
    fn eta_projection_is_linear(seed in any::<u64>(), e in nonzero(), c in field_elem()) {
        let mut rng = random::rng(seed);
        let p = AlgebraParams::two_param(1);
        let x = random::alg_element(&mut rng, p, 3, 2);
        let y = random::alg_element(&mut rng, p, 3, 2);
        let lhs = eta_projection(&(&x + &y.scale(&c)), &e).unwrap();
        let rhs = &eta_projection(&x, &e).unwrap() + &eta_projection(&y, &e).unwrap().scale(&c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_is_multiplicative(seed in any::<u64>(), m in 1u32..=2, right in any::<bool>()) {
        let mut rng = random::rng(seed);
        let p = AlgebraParams::two_param(m);
        let preset = if right { Coproduct::KRight } else { Coproduct::HLeft };
        let delta = HopfMap::two_param(p, preset).unwrap();
        let x = random::alg_element(&mut rng, p, 2, 1);
        let y = random::alg_element(&mut rng, p, 2, 1);
        prop_assert_eq!(delta.coproduct(&(&x * &y)), delta.coproduct(&x).mul(&delta.coproduct(&y)));
        prop_assert_eq!(delta.counit(&(&x * &y)), delta.counit(&x) * delta.counit(&y));
    }
}

fn r_element(seed: u64) -> RElement {
    let mut rng = random::rng(seed);
    let mut r = RElement::zero();
    for (p, i, j) in [(0u32, 0i32, 0i32), (1, 1, 0), (2, 0, -1), (0, 2, 1)] {
        r = r.add(&RElement::term(p, i, j, random::field_elem(&mut rng)));
    }
    r
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn theta_is_multiplicative(a in any::<u64>(), b in any::<u64>(), n in -4i64..=4, m in 1u32..=3) {
        let (r, s) = (r_element(a), r_element(b));
        prop_assert_eq!(theta_apply(&r.mul(&s), n, m), theta_apply(&r, n, m).mul(&theta_apply(&s, n, m)));
    }

    #[test]
    fn theta_composes(n1 in -6i64..=6, n2 in -6i64..=6, m in 1u32..=3) {
        prop_assert_eq!(theta_apply(&theta_xi(n1, m), n2, m), theta_xi(n1 + n2, m));
    }

    #[test]
    fn classification_invariants(seed in any::<u64>(), m in 1u32..=2) {
        let mut rng = random::rng(seed);
        let p = random::point(&mut rng, m, 10);
        let case = classify_spectrum(&p, 64).unwrap();
        prop_assert_eq!(case.exactness, Exactness::Proved);
        if let SpectrumTag::OneFinite(n) = case.tag {
            prop_assert!(evaluate_at_point(&theta_xi(n as i64, m), &p).is_zero());
            for k in 0..n as i64 {
                prop_assert!(!p.orbit_value(k).is_zero());
            }
        }
        let lowest = (p.beta.pow(m as i64) - p.gamma.pow(m as i64)) / FieldElem::q_minus_qinv();
        let on_lowest = p.alpha == lowest;
        prop_assert_eq!(on_lowest, matches!(case.tag, SpectrumTag::OneFinite(_) | SpectrumTag::OneOne | SpectrumTag::OneInfinity));
        let bounded = classify_spectrum_bounded(&p, 16).unwrap();
        if matches!(case.tag, SpectrumTag::OneFinite(n) if n <= 16) {
            prop_assert!(bounded.same_case(&case));
        }
        prop_assert!(orbit_distinct(&p, 1) && orbit_distinct(&p, -5) && !orbit_distinct(&p, 0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn built_modules_satisfy_relations(seed in any::<u64>(), m in 1u32..=2) {
        let mut rng = random::rng(seed);
        let p = random::point(&mut rng, m, 5);
        let case = classify_spectrum(&p, 64).unwrap();
        let module = build_module(&p, case, 6).unwrap();
        let report = module.verify_relations();
        prop_assert!(report.passed(), "{:?} {:?}", case, report.failures);
        prop_assert!(report.interior > 0);
    }

    #[test]
    fn rescaling_preserves_isomorphism_class(n in 1u32..=3, seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let m = one_param_irrep(1, n, false).unwrap();
        let scalars: Vec<FieldElem> = (0..m.dim()).map(|_| random::nonzero_field_elem(&mut rng)).collect();
        let r = m.rescaled(&scalars).unwrap();
        prop_assert!(r.verify_relations().passed());
        prop_assert_eq!(is_irreducible(&r), Ok(true));
        prop_assert_eq!(modules_isomorphic(&m, &r), Ok(true));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn whittaker_central_character(e in nonzero(), a in field_elem(), b in nonzero(), m in 1u32..=2) {
        let d = WhittakerData::new(e, a.clone(), b.clone(), m, 6).unwrap();
        let module = build_whittaker_module(&d).unwrap();
        prop_assert!(module.verify_relations().passed());
        prop_assert_eq!(central_action(&module), (Some(a), Some(b)));
        prop_assert_eq!(whittaker_vectors(&module), vec![module.omega()]);
    }

    #[test]
    fn whittaker_distinct_characters_differ(e in nonzero(), a in field_elem(), b in nonzero(), shift in nonzero()) {
        let d1 = WhittakerData::new(e.clone(), a.clone(), b.clone(), 1, 4).unwrap();
        let d2 = WhittakerData::new(e, &a + &shift, b, 1, 4).unwrap();
        let c1 = central_action(&build_whittaker_module(&d1).unwrap());
        let c2 = central_action(&build_whittaker_module(&d2).unwrap());
        prop_assert_ne!(c1, c2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn filtration_round_trip(seed in any::<u64>(), m in 1u32..=2, e in nonzero()) {
        let mut rng = random::rng(seed);
        let p = AlgebraParams::two_param(m);
        let u = AlgElement::from_terms(p, (0..3).map(|_| {
            let mono = random::monomial(&mut rng, 4);
            (uqfm_core::algebra::Monomial::new(mono.a, mono.i, mono.j, 0), random::nonzero_field_elem(&mut rng))
        }));
        let terms = filtration_decompose(&u, &e).unwrap();
        prop_assert_eq!(filtration_reconstruct(p, &terms, &e).unwrap(), u);
    }
}

#[test]
fn filtration_of_f_with_unit_character() {
    let p = AlgebraParams::two_param(1);
    let terms = filtration_decompose(&AlgElement::f(p), &FieldElem::one()).unwrap();
    let d = fe("1/((q^2-1)(q-q^-1))");
    let coeff = |a: i32, k: u32, l: i32| {
        terms.iter().find(|t| t.a_part == a).and_then(|t| t.w_part.terms.get(&(k, l)).cloned())
    };
    assert_eq!(coeff(0, 1, 0), Some(FieldElem::one()));
    assert_eq!(coeff(1, 0, 0), Some(-(fe("q^2") * &d)));
    assert_eq!(coeff(-1, 0, 1), Some(-d));
}
