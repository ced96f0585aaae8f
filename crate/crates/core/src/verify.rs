//! Named verification suites with JSON reports.

use std::fmt::Display;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{
    casimir, casimir_ef_form, center_membership, coproduct_leg_report, defining_relations, AlgElement, AlgebraParams,
    CenterPoly, Coproduct, Gen, HopfMap, HopfParams,
};
use crate::hyperbolic::{
    classify_spectrum, evaluate_at_point, intertwining_identities, theta_apply, theta_xi, MaxIdealPoint, RElement,
    SpectrumTag,
};
use crate::qfield::FieldElem;
use crate::random;
use crate::repmod::{
    build_module, casimir_scalar, decompose_completely, epsilon_w, is_irreducible, modules_isomorphic, one_param_irrep,
    pullback_pi_w, tensor_product, PullbackParams, WeightModule,
};
use crate::whittaker::{
    build_whittaker_module, center_image_independence, central_action, cyclicity_check, filtration_decompose,
    filtration_reconstruct, whittaker_vectors, WhittakerData,
};

pub const SUITES: [&str; 9] =
    ["rewriting", "theta", "casimir", "center", "classify", "hopf", "reducibility", "pullback", "whittaker"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: Value,
    pub checks_run: usize,
    pub failures: Vec<String>,
    pub seed: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks_run > 0
    }
}

/// Which `m` values a suite covers and the seed for its random samples.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteConfig {
    pub m: Option<u32>,
    pub seed: u64,
}

impl SuiteConfig {
    fn ms(&self, default: &[u32]) -> Vec<u32> {
        match self.m {
            Some(m) => vec![m],
            None => default.to_vec(),
        }
    }
}

struct Checker {
    report: SuiteReport,
}

impl Checker {
    fn new(suite: &str, params: Value, seed: u64) -> Self {
        Checker { report: SuiteReport { suite: suite.into(), params, checks_run: 0, failures: Vec::new(), seed } }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.report.checks_run += 1;
        if !ok {
            self.report.failures.push(what());
        }
    }

    fn ok<T, E: Display>(&mut self, r: Result<T, E>, what: &str) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.report.checks_run += 1;
                self.report.failures.push(format!("{what}: {e}"));
                None
            }
        }
    }

    fn finish(self) -> SuiteReport {
        self.report
    }
}

/// Runs a suite by name. Returns `None` for an unknown name.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Option<Vec<SuiteReport>> {
    let one = |r: SuiteReport| Some(vec![r]);
    match name {
        "rewriting" => one(rewriting(cfg)),
        "theta" => one(theta(cfg)),
        "casimir" => one(casimir_forms(cfg)),
        "center" => one(center(cfg)),
        "classify" => one(classify(cfg)),
        "hopf" => one(hopf(cfg)),
        "reducibility" => one(reducibility(cfg)),
        "pullback" => one(pullback(cfg)),
        "whittaker" => one(whittaker(cfg)),
        "all" => Some(SUITES.iter().flat_map(|s| run_suite(s, cfg).unwrap()).collect()),
        _ => None,
    }
}

/// Defining relations normalize to zero and random products associate.
pub fn rewriting(cfg: &SuiteConfig) -> SuiteReport {
    let ms = cfg.ms(&[1, 2, 3]);
    let mut c = Checker::new("rewriting", json!({ "m": ms, "triples": 200 }), cfg.seed);
    let mut rng = random::rng(cfg.seed);
    for &m in &ms {
        let p = AlgebraParams::two_param(m);
        for (name, rel) in defining_relations(p) {
            c.check(rel.is_zero(), || format!("m={m}: {name} normalizes to {rel}"));
        }
        for _ in 0..200 {
            let x = random::alg_element(&mut rng, p, 2, 2);
            let y = random::alg_element(&mut rng, p, 2, 2);
            let z = random::alg_element(&mut rng, p, 2, 2);
            let left = &(&x * &y) * &z;
            let right = &x * &(&y * &z);
            c.check(left == right, || format!("m={m}: ({x})({y})({z}) does not associate"));
        }
    }
    c.finish()
}

/// Intertwining identities and closed-form `θ^n(ξ)` against iteration.
pub fn theta(cfg: &SuiteConfig) -> SuiteReport {
    let ms = cfg.ms(&[1, 2, 3]);
    let mut c = Checker::new("theta", json!({ "m": ms, "n_max": 12 }), cfg.seed);
    for &m in &ms {
        for (name, diff) in intertwining_identities(AlgebraParams::two_param(m)) {
            c.check(diff.is_zero(), || format!("m={m}: {name} leaves {diff}"));
        }
        for step in [1i64, -1] {
            let mut iterate = RElement::xi();
            for n in 1..=12i64 {
                iterate = theta_apply(&iterate, step, m);
                let closed = theta_xi(step * n, m);
                c.check(closed == iterate, || format!("m={m}: θ^{}(ξ) closed form differs from iteration", step * n));
            }
        }
    }
    c.finish()
}

/// Both forms of `Ω` agree and `Ω` commutes with the generators.
pub fn casimir_forms(cfg: &SuiteConfig) -> SuiteReport {
    let ms = cfg.ms(&[1, 2]);
    let mut c = Checker::new("casimir", json!({ "m": ms }), cfg.seed);
    for &m in &ms {
        let p = AlgebraParams::two_param(m);
        let omega = casimir(p);
        c.check(omega == casimir_ef_form(p), || format!("m={m}: FE and EF forms of Ω differ"));
        for g in Gen::ALL {
            let x = g.element(p);
            let comm = &(&omega * &x) - &(&x * &omega);
            c.check(comm.is_zero(), || format!("m={m}: [Ω, {}] = {comm}", g.name()));
        }
    }
    c.finish()
}

/// `center_membership` accepts `Ω^k (KH)^l` and rejects `E`, `F`, `K`.
pub fn center(cfg: &SuiteConfig) -> SuiteReport {
    let ms = cfg.ms(&[1, 2]);
    let mut c = Checker::new("center", json!({ "m": ms, "max_deg": 3 }), cfg.seed);
    for &m in &ms {
        let p = AlgebraParams::two_param(m);
        let omega = casimir(p);
        c.check(omega == casimir_ef_form(p), || format!("m={m}: FE and EF forms of Ω differ"));
        for g in [Gen::E, Gen::F, Gen::K, Gen::H] {
            let x = g.element(p);
            c.check((&(&omega * &x) - &(&x * &omega)).is_zero(), || {
                format!("m={m}: Ω does not commute with {}", g.name())
            });
        }
        let mut power = AlgElement::one(p);
        for k in 0..=3u32 {
            for l in -3..=3i32 {
                let z = &power * &AlgElement::cartan(p, l, l);
                let want = CenterPoly::omega_power(k, l);
                c.check(center_membership(&z).as_ref() == Some(&want), || {
                    format!("m={m}: Ω^{k}(KH)^{l} not recognized")
                });
            }
            power = &power * &omega;
        }
        for g in [Gen::E, Gen::F, Gen::K] {
            c.check(center_membership(&g.element(p)).is_none(), || format!("m={m}: {} accepted as central", g.name()));
        }
    }
    c.finish()
}

fn check_finite_module(c: &mut Checker, p: &MaxIdealPoint, m: &WeightModule) {
    let rel = m.verify_relations();
    c.check(rel.passed(), || format!("{p:?}: relations fail {:?}", rel.failures));
    let irr = is_irreducible(m);
    c.check(matches!(irr, Ok(true)), || format!("{p:?}: not irreducible ({irr:?})"));
    c.check(casimir_scalar(m).is_some(), || format!("{p:?}: Ω is not scalar"));
}

/// Worked points and random points: the classifier is total, its
/// finite-dimensional cases satisfy the orbit conditions, and the built
/// modules are irreducible with scalar Casimir.
pub fn classify(cfg: &SuiteConfig) -> SuiteReport {
    let ms = cfg.ms(&[1, 2]);
    let mut c = Checker::new("classify", json!({ "m": ms, "random_points": 50, "n_max": 64 }), cfg.seed);
    let worked = [
        ("q", "q^2", "1", SpectrumTag::OneFinite(1)),
        ("0", "1", "1", SpectrumTag::OneFinite(0)),
        ("0", "q", "1", SpectrumTag::InfinityOne),
        ("1", "q", "1", SpectrumTag::InfinityInfinity),
    ];
    for (a, b, g, want) in worked {
        let p = MaxIdealPoint::parse(a, b, g, 1).expect("valid point");
        let got = classify_spectrum(&p, 64).map(|x| x.tag.canonical());
        c.check(got == Ok(want.canonical()), || format!("({a}, {b}, {g}) classified as {got:?}"));
    }
    let p = MaxIdealPoint::parse("q", "q^2", "1", 1).expect("valid point");
    if let Some(case) = c.ok(classify_spectrum(&p, 64), "classify") {
        if let Some(module) = c.ok(build_module(&p, case, 12), "build") {
            let want = FieldElem::parse("q(q^4+1)/(q^2-1)^2").expect("valid");
            c.check(casimir_scalar(&module) == Some(want), || "m=1, n=1 Casimir scalar".into());
        }
    }
    let mut rng = random::rng(cfg.seed);
    for i in 0..50 {
        let m = ms[i % ms.len()];
        let p = random::point(&mut rng, m, 8);
        let Some(case) = c.ok(classify_spectrum(&p, 64), "classify") else { continue };
        c.check(true, String::new);
        if let SpectrumTag::OneFinite(n) = case.tag {
            for k in 0..n as i64 {
                c.check(!p.orbit_value(k).is_zero(), || format!("{p:?}: θ^{k}(ξ) vanishes before n = {n}"));
            }
            c.check(evaluate_at_point(&theta_xi(n as i64, p.m), &p).is_zero(), || format!("{p:?}: θ^{n}(ξ) ≠ 0"));
            if n <= 8 {
                if let Some(module) = c.ok(build_module(&p, case, 12), "build") {
                    check_finite_module(&mut c, &p, &module);
                }
            }
        }
    }
    c.finish()
}

/// Certification of the one-parameter coproducts and the two-parameter
/// presets, plus the first-leg report.
pub fn hopf(cfg: &SuiteConfig) -> SuiteReport {
    let ms = cfg.ms(&[1, 2]);
    let mut c = Checker::new("hopf", json!({ "m": ms, "s": 0 }), cfg.seed);
    for &m in &ms {
        let p = AlgebraParams::one_param(m);
        let Some(hp) = c.ok(HopfParams::new(0, m as i32, p), "hopf params") else { continue };
        if let Some(map) = c.ok(HopfMap::one_param(p, hp), "one-parameter coproduct") {
            let report = map.certification_report();
            c.report.checks_run += report.checks.len();
            c.report.failures.extend(report.failures().into_iter().map(|f| format!("m={m}: {f}")));
        }
        if let Some(leg) = c.ok(coproduct_leg_report(p, hp), "leg report") {
            c.check(leg.k_leg_homomorphism, || format!("m={m}: K^s leg is not a homomorphism"));
        }
        let tp = AlgebraParams::two_param(m);
        for preset in [Coproduct::HLeft, Coproduct::KRight] {
            if let Some(map) = c.ok(HopfMap::two_param(tp, preset), "two-parameter coproduct") {
                let report = map.certification_report();
                c.report.checks_run += report.checks.len();
                c.report.failures.extend(report.failures().into_iter().map(|f| format!("m={m} {preset:?}: {f}")));
            }
        }
    }
    c.finish()
}

fn dims(parts: &[(WeightModule, usize)]) -> Vec<(usize, usize)> {
    let mut d: Vec<(usize, usize)> = parts.iter().map(|(s, k)| (s.dim(), *k)).collect();
    d.sort();
    d
}

/// Tensor products of the 2- and 3-dimensional irreducibles decompose,
/// with exact dimension bookkeeping, before and after pullback.
pub fn reducibility(cfg: &SuiteConfig) -> SuiteReport {
    let mut c = Checker::new("reducibility", json!({ "m": 1, "dims": [2, 3], "w": ["1", "q", "q^2+1"] }), cfg.seed);
    let p = AlgebraParams::one_param(1);
    let delta = HopfMap::one_param(p, HopfParams::new(0, 1, p).expect("t - s = m"))
        .and_then(|h| h.certify())
        .expect("certified coproduct");
    let tp = AlgebraParams::two_param(1);
    let delta2 = HopfMap::two_param(tp, Coproduct::HLeft).and_then(|h| h.certify()).expect("certified preset");
    let irreps: Vec<WeightModule> = [1u32, 2].iter().map(|n| one_param_irrep(1, *n, false).expect("irrep")).collect();
    let ws: Vec<FieldElem> = ["1", "q", "q^2+1"].iter().map(|s| FieldElem::parse(s).expect("valid")).collect();
    for a in &irreps {
        for b in &irreps {
            let label = format!("{}x{}", a.dim(), b.dim());
            let Some(t) = c.ok(tensor_product(a, b, &delta), &label) else { continue };
            let Some(parts) = c.ok(decompose_completely(&t), &label) else { continue };
            let total: usize = parts.iter().map(|(s, k)| s.dim() * k).sum();
            c.check(total == a.dim() * b.dim(), || format!("{label}: summands add to {total}"));
            let (lo, hi) = (a.dim().min(b.dim()), a.dim().max(b.dim()));
            let mut want: Vec<(usize, usize)> = (0..lo).map(|k| (hi + lo - 1 - 2 * k, 1)).collect();
            want.sort();
            c.check(dims(&parts) == want, || format!("{label}: got {:?}", dims(&parts)));
            for w in &ws {
                let pw = PullbackParams::new(w.clone()).expect("nonzero");
                let pulled = pullback_pi_w(&t, &pw).and_then(|x| decompose_completely(&x));
                let Some(pparts) = c.ok(pulled, &label) else { continue };
                c.check(dims(&pparts) == want, || format!("{label} at w = {w}: got {:?}", dims(&pparts)));
                let legs = pullback_pi_w(a, &pw)
                    .and_then(|x| Ok((x, pullback_pi_w(b, &PullbackParams::new(FieldElem::one())?)?)))
                    .and_then(|(x, y)| tensor_product(&x, &y, &delta2))
                    .and_then(|x| decompose_completely(&x));
                let Some(lparts) = c.ok(legs, &label) else { continue };
                c.check(dims(&lparts) == want, || format!("{label}: M_w ⊗ N_1 at w = {w}: got {:?}", dims(&lparts)));
            }
        }
    }
    c.finish()
}

/// Pullback laws and the `ε_w` twist isomorphisms.
pub fn pullback(cfg: &SuiteConfig) -> SuiteReport {
    let mut c = Checker::new("pullback", json!({ "m": 1, "w": ["q", "q^2+1", "-2/q"] }), cfg.seed);
    let tp = AlgebraParams::two_param(1);
    let delta = HopfMap::two_param(tp, Coproduct::HLeft).and_then(|h| h.certify()).expect("certified preset");
    let unit = PullbackParams::new(FieldElem::one()).expect("nonzero");
    for n in [1u32, 2] {
        let m = one_param_irrep(1, n, false).expect("irrep");
        let Some(m1) = c.ok(pullback_pi_w(&m, &unit), "pullback at 1") else { continue };
        c.check(m1.rep().op(Gen::H) == m.rep().op(Gen::KInv), || "H ≠ K^-1 at w = 1".into());
        for w in ["q", "q^2+1", "-2/q"] {
            let w = FieldElem::parse(w).expect("valid");
            let pw = PullbackParams::new(w.clone()).expect("nonzero");
            let Some(mw) = c.ok(pullback_pi_w(&m, &pw), "pullback") else { continue };
            let rel = mw.verify_relations();
            c.check(rel.passed(), || format!("w = {w}: relations fail"));
            let kh = AlgElement::cartan(tp, 1, 1);
            let w2 = w.pow(2);
            for i in 0..mw.dim() {
                let v = mw.rep().basis_vector(i);
                let img = mw.act(&kh, &v);
                c.check(img.as_ref().ok() == Some(&crate::linalg::scale(&v, &w2)), || format!("w = {w}: KH ≠ w^2"));
            }
            if n == 1 {
                let twisted = epsilon_w(1, &pw).and_then(|e| tensor_product(&e, &m1, &delta));
                if let Some(t) = c.ok(twisted, "ε_w ⊗ M_1") {
                    let iso = modules_isomorphic(&t, &mw);
                    c.check(matches!(iso, Ok(true)), || format!("w = {w}: ε_w ⊗ M_1 ≇ M_w"));
                }
            }
        }
    }
    c.finish()
}

/// Whittaker modules for random data: relations, central character,
/// Whittaker vectors, cyclicity, filtration round trips and the
/// independence of the center's image.
pub fn whittaker(cfg: &SuiteConfig) -> SuiteReport {
    let ms = cfg.ms(&[1, 2]);
    let mut c =
        Checker::new("whittaker", json!({ "m": ms, "data_sets": 20, "window": 12, "round_trips": 100 }), cfg.seed);
    let mut rng = random::rng(cfg.seed);
    for i in 0..20 {
        let m = ms[i % ms.len()];
        let d = WhittakerData::new(
            random::nonzero_field_elem(&mut rng),
            random::field_elem(&mut rng),
            random::nonzero_field_elem(&mut rng),
            m,
            12,
        );
        let Some(d) = c.ok(d, "data") else { continue };
        let Some(module) = c.ok(build_whittaker_module(&d), "build") else { continue };
        let rel = module.verify_relations();
        c.check(rel.passed() && rel.interior > 0, || format!("data set {i}: relations fail {:?}", rel.failures));
        let (omega, kh) = central_action(&module);
        c.check(omega.as_ref() == Some(&d.a), || format!("data set {i}: Ω acts as {omega:?}"));
        c.check(kh.as_ref() == Some(&d.b), || format!("data set {i}: KH acts as {kh:?}"));
        let wv = whittaker_vectors(&module);
        c.check(wv == vec![module.omega()], || format!("data set {i}: Whittaker vectors {wv:?}"));
        let k3 = module.rep().basis_vector(module.k_index(3));
        for (name, v) in [("ω", module.omega()), ("K^3 ω", k3)] {
            let r = cyclicity_check(&module, &v);
            c.check(matches!(r, Ok(true)), || format!("data set {i}: {name} not cyclic ({r:?})"));
        }
    }
    for i in 0..100 {
        let m = ms[i % ms.len()];
        let p = AlgebraParams::two_param(m);
        let e = random::nonzero_field_elem(&mut rng);
        let u = AlgElement::from_terms(
            p,
            (0..3).map(|_| {
                let mono = random::monomial(&mut rng, 4);
                (crate::algebra::Monomial::new(mono.a, mono.i, mono.j, 0), random::nonzero_field_elem(&mut rng))
            }),
        );
        let back = filtration_decompose(&u, &e).and_then(|t| filtration_reconstruct(p, &t, &e));
        let Some(back) = c.ok(back, "filtration") else { continue };
        c.check(back == u, || format!("{u} does not round-trip"));
    }
    for &m in &ms {
        let e = FieldElem::parse("q+1").expect("valid");
        let r = center_image_independence(3, &e, m);
        c.check(matches!(r, Ok(true)), || format!("m={m}: center image dependent ({r:?})"));
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &SuiteConfig::default()).is_none());
    }

    #[test]
    fn casimir_suite_m2() {
        let r = casimir_forms(&SuiteConfig { m: Some(2), seed: 0 });
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.checks_run, 7);
    }
}
