//! Whittaker modules `Y_{ξ,η}` with central character `Ω -> a`, `KH -> b`
//! and non-singular character `E -> e`, realized on the basis
//! `{K^i ω : 0 <= i <= N} ∪ {H^j ω : 1 <= j <= N}`.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{casimir, eta_projection, AlgElement, AlgebraError, AlgebraParams, CenterPoly, Gen, Monomial};
use crate::linalg::{axpy, nullspace, rank, scale, EchelonBasis, SparseVec};
use crate::qfield::FieldElem;
use crate::random;
use crate::repmod::{BasisLabel, Operator, RelationReport, RepError, Representation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WhittakerError {
    #[error("invalid data: {0}")]
    InvalidData(String),
    #[error("character value e must be nonzero")]
    SingularCharacter,
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// `e = η(E)`, `a = ξ(Ω)`, `b = ξ(KH)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhittakerData {
    pub e: FieldElem,
    pub a: FieldElem,
    pub b: FieldElem,
    pub m: u32,
    pub window: usize,
}

impl WhittakerData {
    pub fn new(e: FieldElem, a: FieldElem, b: FieldElem, m: u32, window: usize) -> Result<Self, WhittakerError> {
        if e.is_zero() {
            return Err(WhittakerError::InvalidData("e must be nonzero".into()));
        }
        if b.is_zero() {
            return Err(WhittakerError::InvalidData("b must be nonzero".into()));
        }
        if m == 0 {
            return Err(WhittakerError::InvalidData("m must be positive".into()));
        }
        if window < 2 * m as usize + 2 {
            return Err(WhittakerError::InvalidData(format!("window must be at least {}", 2 * m + 2)));
        }
        Ok(WhittakerData { e, a, b, m, window })
    }

    pub fn params(&self) -> AlgebraParams {
        AlgebraParams::two_param(self.m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhittakerModule {
    data: WhittakerData,
    rep: Representation,
}

impl WhittakerModule {
    pub fn data(&self) -> &WhittakerData {
        &self.data
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    /// Index of `K^i ω`.
    pub fn k_index(&self, i: usize) -> usize {
        i
    }

    /// Index of `H^j ω` (`j = 0` is `ω`).
    pub fn h_index(&self, j: usize) -> usize {
        if j == 0 {
            0
        } else {
            self.data.window + j
        }
    }

    pub fn omega(&self) -> SparseVec {
        self.rep.basis_vector(0)
    }

    pub fn verify_relations(&self) -> RelationReport {
        self.rep.verify_relations()
    }
}

/// Builds `Y_{ξ,η}` on the window. `K` and `H` shift along the two rays,
/// `E` is diagonal with eigenvalue `q^{-2i} e` on `K^i ω` and `q^{2j} e` on
/// `H^j ω`, and `F v = (a v - g(K,H) v) / λ_v` with
/// `g = (q^{2m} K^m + H^m) / ((q^{2m} - 1)(q - q^-1))`.
pub fn build_whittaker_module(d: &WhittakerData) -> Result<WhittakerModule, WhittakerError> {
    let d = WhittakerData::new(d.e.clone(), d.a.clone(), d.b.clone(), d.m, d.window)?;
    let n = d.window;
    let dim = 2 * n + 1;
    let kidx = |i: usize| i;
    let hidx = |j: usize| if j == 0 { 0 } else { n + j };
    let mut basis: Vec<BasisLabel> = (0..=n as u32).map(BasisLabel::KW).collect();
    basis.extend((1..=n as u32).map(BasisLabel::HW));

    let mut k = Operator::zero(dim);
    let mut h = Operator::zero(dim);
    let mut e = Operator::zero(dim);
    let mut lambda = vec![FieldElem::zero(); dim];
    for i in 0..=n {
        if i < n {
            k.set(kidx(i + 1), kidx(i), FieldElem::one());
        } else {
            k.mark_open(kidx(i));
        }
        if i >= 1 {
            h.set(kidx(i - 1), kidx(i), d.b.clone());
        } else {
            h.set(hidx(1), kidx(0), FieldElem::one());
        }
        lambda[kidx(i)] = &d.e * FieldElem::q_pow(-2 * i as i64);
    }
    for j in 1..=n {
        k.set(hidx(j - 1), hidx(j), d.b.clone());
        if j < n {
            h.set(hidx(j + 1), hidx(j), FieldElem::one());
        } else {
            h.mark_open(hidx(j));
        }
        lambda[hidx(j)] = &d.e * FieldElem::q_pow(2 * j as i64);
    }
    for (i, l) in lambda.iter().enumerate() {
        e.set(i, i, l.clone());
    }
    let binv = d.b.inv();
    let ki = h.map_entries(|x| x * &binv);
    let hinv = k.map_entries(|x| x * &binv);

    let mut ops: BTreeMap<Gen, Operator> =
        [(Gen::E, e), (Gen::K, k), (Gen::KInv, ki), (Gen::H, h), (Gen::HInv, hinv), (Gen::F, Operator::zero(dim))]
            .into_iter()
            .collect();
    let partial = Representation::new(d.params(), basis.clone(), ops.clone())?;

    let m = d.m as i64;
    let q2m = FieldElem::q_pow(2 * m);
    let denom = ((&q2m - FieldElem::one()) * FieldElem::q_minus_qinv()).inv();
    let g = AlgElement::from_terms(
        d.params(),
        [(Monomial::cartan(m as i32, 0), &q2m * &denom), (Monomial::cartan(0, m as i32), denom)],
    );
    let mut f = Operator::zero(dim);
    for (c, lc) in lambda.iter().enumerate() {
        let v = partial.basis_vector(c);
        match partial.act(&g, &v) {
            Ok(gv) => {
                let mut col = scale(&v, &d.a);
                axpy(&mut col, &-FieldElem::one(), &gv);
                let col = scale(&col, &lc.inv());
                for (r, x) in col {
                    f.set(r, c, x);
                }
            }
            Err(RepError::BoundaryOverflow { .. }) => f.mark_open(c),
            Err(other) => return Err(other.into()),
        }
    }
    ops.insert(Gen::F, f);
    let rep = Representation::new(d.params(), basis, ops)?;
    Ok(WhittakerModule { data: d, rep })
}

/// Scalars by which `Ω` and `KH` act on the interior, when they act as
/// scalars.
pub fn central_action(module: &WhittakerModule) -> (Option<FieldElem>, Option<FieldElem>) {
    let params = module.data.params();
    let scalar_of = |u: &AlgElement| -> Option<FieldElem> {
        let mut value: Option<FieldElem> = None;
        for i in module.rep.interior() {
            let v = module.rep.basis_vector(i);
            let img = module.rep.act(u, &v).ok()?;
            let c = match img.len() {
                0 => FieldElem::zero(),
                1 => img.get(&i)?.clone(),
                _ => return None,
            };
            if value.as_ref().is_some_and(|x| *x != c) {
                return None;
            }
            value = Some(c);
        }
        value
    };
    (scalar_of(&casimir(params)), scalar_of(&AlgElement::cartan(params, 1, 1)))
}

/// Basis of `{v : E v = e v}` on the window, each scaled so that its first
/// nonzero coordinate is 1.
pub fn whittaker_vectors(module: &WhittakerModule) -> Vec<SparseVec> {
    let e = &module.data.e;
    let op = module.rep.op(Gen::E);
    let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for c in 0..module.dim() {
        for (r, x) in op.column(c) {
            rows.entry(*r).or_default().insert(c, x.clone());
        }
        let slot = rows.entry(c).or_default().entry(c).or_default();
        *slot -= e;
        if slot.is_zero() {
            rows.get_mut(&c).unwrap().remove(&c);
        }
    }
    let rows: Vec<SparseVec> = rows.into_values().collect();
    nullspace(&rows, module.dim())
        .into_iter()
        .map(|v| {
            let lead = v.values().next().expect("nonzero kernel vector").clone();
            scale(&v, &lead.inv())
        })
        .collect()
}

/// One summand `K^p ⊗ w_p` of the decomposition `u = Σ_p K^p w_p` with
/// `w_p` a polynomial in `Ω^η` with Laurent coefficients in `KH`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WFiltrationTerm {
    pub a_part: i32,
    pub w_part: CenterPoly,
}

fn eval_w(poly: &CenterPoly, omega_eta: &AlgElement, powers: &mut Vec<AlgElement>) -> AlgElement {
    let params = omega_eta.params();
    let mut out = AlgElement::zero(params);
    for ((k, l), c) in &poly.terms {
        while powers.len() <= *k as usize {
            let next = powers.last().unwrap() * omega_eta;
            powers.push(next);
        }
        let kh = AlgElement::cartan(params, *l, *l);
        out = &out + &(&powers[*k as usize] * &kh).scale(c);
    }
    out
}

/// Writes an element of `E`-degree 0 as `Σ_p K^p w_p(Ω^η, KH)`, by
/// descending induction on the `F`-degree.
pub fn filtration_decompose(u: &AlgElement, e: &FieldElem) -> Result<Vec<WFiltrationTerm>, WhittakerError> {
    if e.is_zero() {
        return Err(WhittakerError::SingularCharacter);
    }
    if u.e_degree() > 0 {
        return Err(WhittakerError::DomainViolation("u must have E-degree 0".into()));
    }
    let params = u.params();
    if params.is_one_param() {
        return Err(WhittakerError::DomainViolation("two-parameter algebra required".into()));
    }
    let omega_eta = eta_projection(&casimir(params), e)?;
    let mut powers = vec![AlgElement::one(params)];
    let mut parts: BTreeMap<i32, CenterPoly> = BTreeMap::new();
    let mut rest = u.clone();
    while let Some((mono, c)) = rest.terms().iter().next_back().map(|(m, c)| (*m, c.clone())) {
        let (d, l, p) = (mono.a, mono.j, mono.i - mono.j);
        let piece = CenterPoly::omega_power(d, l);
        let basis = &AlgElement::cartan(params, p, 0) * &eval_w(&piece, &omega_eta, &mut powers);
        let lead = basis.coeff(&mono);
        let factor = &c / &lead;
        rest = &rest - &basis.scale(&factor);
        if !rest.coeff(&mono).is_zero() {
            return Err(WhittakerError::DomainViolation("leading term did not cancel".into()));
        }
        let slot = parts.entry(p).or_default();
        let merged = slot.terms.entry((d, l)).or_default();
        *merged += &factor;
        if merged.is_zero() {
            slot.terms.remove(&(d, l));
        }
    }
    Ok(parts
        .into_iter()
        .filter(|(_, w)| !w.is_zero())
        .map(|(a_part, w_part)| WFiltrationTerm { a_part, w_part })
        .collect())
}

/// `Σ_p K^p w_p(Ω^η, KH)`
pub fn filtration_reconstruct(
    params: AlgebraParams,
    terms: &[WFiltrationTerm],
    e: &FieldElem,
) -> Result<AlgElement, WhittakerError> {
    let omega_eta = eta_projection(&casimir(params), e)?;
    let mut powers = vec![AlgElement::one(params)];
    let mut out = AlgElement::zero(params);
    for t in terms {
        let w = eval_w(&t.w_part, &omega_eta, &mut powers);
        out = &out + &(&AlgElement::cartan(params, t.a_part, 0) * &w);
    }
    Ok(out)
}

/// Whether `π(Ω^k (KH)^l)`, `0 <= k <= max_deg`, `|l| <= max_deg`, are
/// linearly independent, by exact rank.
pub fn center_image_independence(max_deg: u32, e: &FieldElem, m: u32) -> Result<bool, WhittakerError> {
    if e.is_zero() {
        return Err(WhittakerError::SingularCharacter);
    }
    let params = AlgebraParams::two_param(m);
    let omega = casimir(params);
    let mut coords: BTreeMap<Monomial, usize> = BTreeMap::new();
    let mut vectors = Vec::new();
    let mut power = AlgElement::one(params);
    for _k in 0..=max_deg {
        for l in -(max_deg as i32)..=max_deg as i32 {
            let z = &power * &AlgElement::cartan(params, l, l);
            let image = eta_projection(&z, e)?;
            let mut v = SparseVec::new();
            for (mono, c) in image.terms() {
                let next = coords.len();
                let idx = *coords.entry(*mono).or_insert(next);
                v.insert(idx, c.clone());
            }
            vectors.push(v);
        }
        power = &power * &omega;
    }
    Ok(rank(&vectors) == vectors.len())
}

/// Outcome of [`annihilator_inclusion_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnihilatorReport {
    pub seed: u64,
    pub samples: usize,
    pub checks_run: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

/// For random `u`, checks that `u(Ω - a)`, `u(KH - b)` and `u(E - e)`
/// annihilate `ω`. Samples whose action leaves the window are skipped.
pub fn annihilator_inclusion_check(module: &WhittakerModule, samples: usize, seed: u64) -> AnnihilatorReport {
    let d = &module.data;
    let params = d.params();
    let mut rng = random::rng(seed);
    let gens = [
        ("Ω - a", &casimir(params) - &AlgElement::scalar(params, d.a.clone())),
        ("KH - b", &AlgElement::cartan(params, 1, 1) - &AlgElement::scalar(params, d.b.clone())),
        ("E - e", &AlgElement::e(params) - &AlgElement::scalar(params, d.e.clone())),
    ];
    let omega = module.omega();
    let mut report = AnnihilatorReport { seed, samples, checks_run: 0, skipped: 0, failures: Vec::new() };
    for _ in 0..samples {
        let u = random::alg_element(&mut rng, params, 2, 1);
        for (name, z) in &gens {
            match module.rep.act(&(&u * z), &omega) {
                Ok(v) if v.is_empty() => report.checks_run += 1,
                Ok(_) => {
                    report.checks_run += 1;
                    report.failures.push(format!("({u}) * ({name}) does not kill ω"));
                }
                Err(_) => report.skipped += 1,
            }
        }
    }
    report
}

/// Both halves of [`cyclicity_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicityReport {
    /// Killing components with `λ v - E v` and shifting with `K`, `H`
    /// reaches a nonzero multiple of `ω`.
    pub reduces_to_omega: bool,
    /// The span of everything reachable from `v` contains the interior.
    pub spans_interior: bool,
}

/// Degree reduction from `v` to `ω`, and span closure from `v`.
pub fn cyclicity_report(module: &WhittakerModule, v: &SparseVec) -> Result<CyclicityReport, WhittakerError> {
    if v.is_empty() {
        return Err(WhittakerError::ZeroVector);
    }
    let rep = &module.rep;
    let lambda = |i: usize| rep.op(Gen::E).entry(i, i);

    let mut w = v.clone();
    let keep = *w.keys().next().unwrap();
    while w.len() > 1 {
        let t = *w.keys().find(|k| **k != keep).unwrap();
        let ew = rep.apply_gen(Gen::E, &w)?;
        let mut next = scale(&w, &lambda(t));
        axpy(&mut next, &-FieldElem::one(), &ew);
        w = next;
    }
    let n = module.data.window;
    let (shift, steps) = if keep <= n { (Gen::H, keep) } else { (Gen::K, keep - n) };
    for _ in 0..steps {
        w = rep.apply_gen(shift, &w)?;
    }
    let reduces_to_omega = w.len() == 1 && w.contains_key(&0);

    let mut span = EchelonBasis::new();
    let mut queue = VecDeque::new();
    span.insert(v);
    queue.push_back(v.clone());
    while let Some(x) = queue.pop_front() {
        for g in Gen::ALL {
            if let Ok(y) = rep.apply_gen(g, &x) {
                if let Some(row) = span.insert_reduced(&y) {
                    queue.push_back(row);
                }
            }
        }
    }
    let spans_interior = rep.interior().iter().all(|i| span.contains(&rep.basis_vector(*i)));
    Ok(CyclicityReport { reduces_to_omega, spans_interior })
}

/// Whether `v` generates the module on the window.
pub fn cyclicity_check(module: &WhittakerModule, v: &SparseVec) -> Result<bool, WhittakerError> {
    let r = cyclicity_report(module, v)?;
    Ok(r.reduces_to_omega && r.spans_interior)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutantReport {
    pub e_eigenvalues_distinct: bool,
    pub dimension: usize,
}

/// Dimension of the space of maps commuting with the generators. `E` is
/// diagonal; when its eigenvalues are pairwise distinct a commuting map is
/// diagonal too, leaving one unknown per basis vector, constrained by
/// `X g = g X` on every column where `g` stays in the window.
pub fn commutant(module: &WhittakerModule) -> CommutantReport {
    let rep = &module.rep;
    let dim = module.dim();
    let eigen: Vec<FieldElem> = (0..dim).map(|i| rep.op(Gen::E).entry(i, i)).collect();
    let mut sorted: Vec<String> = eigen.iter().map(|x| x.to_string()).collect();
    sorted.sort();
    sorted.dedup();
    let distinct = sorted.len() == dim;
    let mut rows = Vec::new();
    for g in [Gen::F, Gen::K, Gen::KInv, Gen::H, Gen::HInv] {
        let op = rep.op(g);
        for c in 0..dim {
            if op.is_open(c) {
                continue;
            }
            for (r, x) in op.column(c) {
                if *r != c {
                    let mut row = SparseVec::new();
                    row.insert(*r, x.clone());
                    row.insert(c, -x);
                    rows.push(row);
                }
            }
        }
    }
    CommutantReport { e_eigenvalues_distinct: distinct, dimension: nullspace(&rows, dim).len() }
}

/// Scalars `c` with each Whittaker vector equal to `c ω`, or `None` if some
/// Whittaker vector is not a multiple of `ω`.
pub fn whittaker_vectors_in_center_orbit(module: &WhittakerModule) -> Option<Vec<FieldElem>> {
    whittaker_vectors(module).into_iter().map(|v| if v.len() == 1 { v.get(&0).cloned() } else { None }).collect()
}
