use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{BasisLabel, Operator, Provenance, RepError, Representation, WeightModule};
use crate::algebra::{casimir, Gen};
use crate::linalg::{nullspace, solve_in_span, EchelonBasis, SparseVec};
use crate::qfield::FieldElem;

/// Simultaneous eigenvalues of `K` and `H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub k: FieldElem,
    pub h: FieldElem,
}

fn weight_order(w: &Weight) -> (i64, i64, String, String) {
    let nd = |x: &FieldElem| x.net_degree().expect("weights are nonzero");
    (-nd(&w.k), nd(&w.h), w.k.to_string(), w.h.to_string())
}

/// Weight spaces as lists of basis indices, ordered by descending degree of
/// the `K`-eigenvalue.
fn weight_spaces(m: &WeightModule) -> Vec<(Weight, Vec<usize>)> {
    let mut groups: Vec<(Weight, Vec<usize>)> = Vec::new();
    for i in 0..m.dim() {
        let w = m.weight(i);
        match groups.iter_mut().find(|(x, _)| *x == w) {
            Some((_, idx)) => idx.push(i),
            None => groups.push((w, vec![i])),
        }
    }
    groups.sort_by_key(|(w, _)| weight_order(w));
    groups
}

/// Distinct weights with multiplicities, by descending degree of the
/// `K`-eigenvalue.
pub fn weight_decomposition(m: &WeightModule) -> Vec<(Weight, usize)> {
    weight_spaces(m).into_iter().map(|(w, idx)| (w, idx.len())).collect()
}

/// The scalar by which `Ω` acts on the interior, if it acts as a scalar.
pub fn casimir_scalar(m: &WeightModule) -> Option<FieldElem> {
    let omega = casimir(m.params());
    let mut value: Option<FieldElem> = None;
    for i in m.rep().interior() {
        let img = m.act(&omega, &m.rep().basis_vector(i)).ok()?;
        let c = match img.len() {
            0 => FieldElem::zero(),
            1 => img.get(&i)?.clone(),
            _ => return None,
        };
        match &value {
            None => value = Some(c),
            Some(v) if *v == c => {}
            Some(_) => return None,
        }
    }
    value
}

fn require_finite(m: &WeightModule) -> Result<(), RepError> {
    if m.is_finite() {
        Ok(())
    } else {
        Err(RepError::NotFiniteDimensional)
    }
}

/// Basis of `ker E` inside each weight space, in weight order.
fn highest_weight_vectors(m: &WeightModule) -> Vec<SparseVec> {
    let e = m.rep().op(Gen::E);
    let mut out = Vec::new();
    for (_, idx) in weight_spaces(m) {
        let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (j, &col) in idx.iter().enumerate() {
            for (r, c) in e.column(col) {
                rows.entry(*r).or_default().insert(j, c.clone());
            }
        }
        let rows: Vec<SparseVec> = rows.into_values().collect();
        for k in nullspace(&rows, idx.len()) {
            out.push(k.into_iter().map(|(j, c)| (idx[j], c)).collect());
        }
    }
    out
}

/// `u, F u, F^2 u, ...` up to the first zero vector.
fn f_ladder(m: &WeightModule, u: &SparseVec) -> Vec<SparseVec> {
    let mut out = Vec::new();
    let mut v = u.clone();
    while !v.is_empty() && out.len() <= m.dim() {
        let next = m.rep().apply_gen(Gen::F, &v).expect("finite module");
        out.push(v);
        v = next;
    }
    out
}

/// Whether a finite-dimensional weight module is irreducible: `ker E` is a
/// single line and the `F`-ladder through it spans the module.
pub fn is_irreducible(m: &WeightModule) -> Result<bool, RepError> {
    require_finite(m)?;
    let hw = highest_weight_vectors(m);
    if hw.len() != 1 {
        return Ok(false);
    }
    let mut span = EchelonBasis::new();
    for v in f_ladder(m, &hw[0]) {
        span.insert(&v);
    }
    Ok(span.rank() == m.dim())
}

/// For an irreducible module with ladder `u_k = F^k u` from a highest
/// weight vector `u`, the scalars `c_k` with `E u_k = c_k u_{k-1}`,
/// `k = 1..dim`. These do not depend on the choice of `u`.
pub fn ladder_coefficients(m: &WeightModule) -> Result<Option<Vec<FieldElem>>, RepError> {
    if !is_irreducible(m)? {
        return Ok(None);
    }
    let hw = highest_weight_vectors(m);
    let ladder = f_ladder(m, &hw[0]);
    let mut out = Vec::new();
    for k in 1..ladder.len() {
        let img = m.rep().apply_gen(Gen::E, &ladder[k]).expect("finite module");
        match solve_in_span(&ladder[k - 1..k], &img) {
            Some(c) => out.push(c[0].clone()),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// The submodule spanned by `vectors`, in that basis.
fn restrict(m: &WeightModule, vectors: &[SparseVec]) -> Result<WeightModule, RepError> {
    let d = vectors.len();
    let mut ops = BTreeMap::new();
    for g in Gen::ALL {
        let mut op = Operator::zero(d);
        for (c, v) in vectors.iter().enumerate() {
            let img = m.rep().apply_gen(g, v)?;
            let coeffs = solve_in_span(vectors, &img)
                .ok_or_else(|| RepError::DecompositionFailure(format!("span not invariant under {}", g.name())))?;
            for (r, x) in coeffs.into_iter().enumerate() {
                op.set(r, c, x);
            }
        }
        ops.insert(g, op);
    }
    let basis = (0..d as u32).map(BasisLabel::Fin).collect();
    let rep = Representation::new(m.params(), basis, ops)?;
    WeightModule::new(rep, Provenance::Derived("summand".into()))
}

/// Splits a finite-dimensional weight module into irreducible summands,
/// one for each highest weight vector, and groups isomorphic summands.
///
/// Fails with [`RepError::DecompositionFailure`] if the ladders are not
/// independent, do not exhaust the module, or a summand is reducible.
pub fn decompose_completely(m: &WeightModule) -> Result<Vec<(WeightModule, usize)>, RepError> {
    require_finite(m)?;
    let mut span = EchelonBasis::new();
    let mut summands = Vec::new();
    for u in highest_weight_vectors(m) {
        let ladder = f_ladder(m, &u);
        for v in &ladder {
            if !span.insert(v) {
                return Err(RepError::DecompositionFailure("ladders are not independent".into()));
            }
        }
        let s = restrict(m, &ladder)?;
        if !is_irreducible(&s)? {
            return Err(RepError::DecompositionFailure("summand is reducible".into()));
        }
        summands.push(s);
    }
    if span.rank() != m.dim() {
        return Err(RepError::DecompositionFailure(format!("summands span {} of {} dimensions", span.rank(), m.dim())));
    }
    let mut grouped: Vec<(WeightModule, usize)> = Vec::new();
    for s in summands {
        let mut found = false;
        for (rep, count) in grouped.iter_mut() {
            if irreducibles_isomorphic(rep, &s)? {
                *count += 1;
                found = true;
                break;
            }
        }
        if !found {
            grouped.push((s, 1));
        }
    }
    Ok(grouped)
}

fn same_weights(a: &WeightModule, b: &WeightModule) -> bool {
    a.params() == b.params() && a.dim() == b.dim() && weight_decomposition(a) == weight_decomposition(b)
}

fn irreducibles_isomorphic(a: &WeightModule, b: &WeightModule) -> Result<bool, RepError> {
    if !same_weights(a, b) {
        return Ok(false);
    }
    Ok(ladder_coefficients(a)? == ladder_coefficients(b)?)
}

/// Isomorphism test for finite-dimensional weight modules: weights and
/// normalized ladder coefficients for irreducibles, multisets of
/// irreducible summands otherwise.
pub fn modules_isomorphic(a: &WeightModule, b: &WeightModule) -> Result<bool, RepError> {
    require_finite(a)?;
    require_finite(b)?;
    if !same_weights(a, b) {
        return Ok(false);
    }
    match (is_irreducible(a)?, is_irreducible(b)?) {
        (true, true) => irreducibles_isomorphic(a, b),
        (false, false) => {
            let da = decompose_completely(a)?;
            let db = decompose_completely(b)?;
            if da.len() != db.len() {
                return Ok(false);
            }
            let mut used = vec![false; db.len()];
            for (sa, ca) in &da {
                let mut matched = false;
                for (j, (sb, cb)) in db.iter().enumerate() {
                    if !used[j] && ca == cb && irreducibles_isomorphic(sa, sb)? {
                        used[j] = true;
                        matched = true;
                        break;
                    }
                }
                if !matched {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        _ => Ok(false),
    }
}

#[cfg(test)]
mod tests {
    use super::super::{build_module, direct_sum};
    use super::*;
    use crate::hyperbolic::{classify_spectrum, MaxIdealPoint};

    fn module(a: &str, b: &str, g: &str) -> WeightModule {
        let p = MaxIdealPoint::parse(a, b, g, 1).unwrap();
        let case = classify_spectrum(&p, 64).unwrap();
        build_module(&p, case, 12).unwrap()
    }

    fn fe(s: &str) -> FieldElem {
        FieldElem::parse(s).unwrap()
    }

    #[test]
    fn weights_and_casimir() {
        let two = module("q", "q^2", "1");
        let w = weight_decomposition(&two);
        assert_eq!(w.len(), 2);
        assert_eq!(w[0].0, Weight { k: fe("q^2"), h: fe("1") });
        assert_eq!(w[1].0, Weight { k: fe("1"), h: fe("q^2") });
        assert_eq!(casimir_scalar(&two), Some(fe("q(q^4+1)/(q^2-1)^2")));
        let one = module("0", "1", "1");
        assert_eq!(weight_decomposition(&one), vec![(Weight { k: fe("1"), h: fe("1") }, 1)]);
        assert_eq!(casimir_scalar(&one), Some(fe("q(q^2+1)/(q^2-1)^2")));
        let sum = direct_sum(&two, &one).unwrap();
        assert_eq!(casimir_scalar(&sum), None);
    }

    #[test]
    fn irreducibility_and_decomposition() {
        let two = module("q", "q^2", "1");
        assert!(is_irreducible(&two).unwrap());
        assert!(is_irreducible(&module("0", "1", "1")).unwrap());
        let sum = direct_sum(&two, &two).unwrap();
        assert!(!is_irreducible(&sum).unwrap());
        let parts = decompose_completely(&sum).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].1, 2);
        assert!(modules_isomorphic(&parts[0].0, &two).unwrap());
        let single = decompose_completely(&two).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].1, 1);
    }

    #[test]
    fn isomorphism() {
        let a = module("q", "q^2", "1");
        assert!(modules_isomorphic(&a, &a).unwrap());
        let b = module("q^2", "q^3", "q");
        assert!(!modules_isomorphic(&a, &b).unwrap());
        let r = a.rescaled(&[fe("q+3"), fe("-2/q")]).unwrap();
        assert!(modules_isomorphic(&a, &r).unwrap());
    }
}
