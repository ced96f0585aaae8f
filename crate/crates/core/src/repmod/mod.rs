//! Explicit representations: sparse generator matrices over `Q(q)`,
//! builders for each spectral case, relation checks, decomposition and
//! the pullback and tensor constructions.
//!
//! Infinite-dimensional modules are materialized on a finite window. A
//! column of a generator matrix is *open* when the image of that basis
//! vector leaves the window; applying the generator there reports
//! [`RepError::BoundaryOverflow`] instead of truncating.

mod build;
mod ops;
mod structure;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{relation_words, AlgElement, AlgebraError, AlgebraParams, Gen};
use crate::hyperbolic::{HyperbolicError, MaxIdealPoint, SpectrumCase};
use crate::linalg::{axpy, SparseVec};
use crate::qfield::{FieldElem, FieldError};

pub use build::{build_module, one_param_irrep};
pub use ops::{direct_sum, epsilon_w, pullback_pi_w, tensor_product, PullbackParams};
pub use structure::{
    casimir_scalar, decompose_completely, is_irreducible, ladder_coefficients, modules_isomorphic,
    weight_decomposition, Weight,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("{generator} leaves the window at basis vector {column}")]
    BoundaryOverflow { generator: &'static str, column: usize },
    #[error("requested case {requested} but the point classifies as {actual}")]
    CaseMismatch { requested: SpectrumCase, actual: SpectrumCase },
    #[error("window must be at least {0}")]
    WindowTooSmall(usize),
    #[error("module is not finite-dimensional")]
    NotFiniteDimensional,
    #[error("K and H must act diagonally and invertibly")]
    NotWeightModule,
    #[error("parameter must be nonzero")]
    ZeroParameter,
    #[error("algebra parameters differ: {0} vs {1}")]
    ParamMismatch(AlgebraParams, AlgebraParams),
    #[error("decomposition failed: {0}")]
    DecompositionFailure(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Hyperbolic(#[from] HyperbolicError),
}

/// Basis vector names.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisLabel {
    /// `v_k = F^k · 1` in a finite-dimensional module.
    Fin(u32),
    /// Window index `k`: `F^k · 1` for `k >= 0` and `E^{-k} · 1` for `k < 0`.
    Win(i64),
    /// `K^i ω`
    KW(u32),
    /// `H^j ω`, `j >= 1`
    HW(u32),
    Tensor(Box<BasisLabel>, Box<BasisLabel>),
    /// Vector `k` of summand `s` in a direct sum or decomposition.
    Summand(usize, Box<BasisLabel>),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Fin(k) => write!(f, "v{k}"),
            BasisLabel::Win(k) => write!(f, "w{k}"),
            BasisLabel::KW(0) => write!(f, "w"),
            BasisLabel::KW(i) => write!(f, "K^{i}.w"),
            BasisLabel::HW(j) => write!(f, "H^{j}.w"),
            BasisLabel::Tensor(a, b) => write!(f, "({a})x({b})"),
            BasisLabel::Summand(s, l) => write!(f, "s{s}.{l}"),
        }
    }
}

/// A generator matrix stored by columns.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Operator {
    cols: Vec<SparseVec>,
    open: BTreeSet<usize>,
}

impl Operator {
    pub fn zero(dim: usize) -> Self {
        Operator { cols: vec![SparseVec::new(); dim], open: BTreeSet::new() }
    }

    pub fn diagonal(values: &[FieldElem]) -> Self {
        let mut op = Self::zero(values.len());
        for (i, v) in values.iter().enumerate() {
            op.set(i, i, v.clone());
        }
        op
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn set(&mut self, row: usize, col: usize, value: FieldElem) {
        if value.is_zero() {
            self.cols[col].remove(&row);
        } else {
            self.cols[col].insert(row, value);
        }
    }

    pub fn mark_open(&mut self, col: usize) {
        self.cols[col].clear();
        self.open.insert(col);
    }

    pub fn entry(&self, row: usize, col: usize) -> FieldElem {
        self.cols[col].get(&row).cloned().unwrap_or_default()
    }

    pub fn column(&self, col: usize) -> &SparseVec {
        &self.cols[col]
    }

    pub fn is_open(&self, col: usize) -> bool {
        self.open.contains(&col)
    }

    pub fn open_columns(&self) -> &BTreeSet<usize> {
        &self.open
    }

    /// The diagonal entry if column `col` is a multiple of `e_col`.
    pub fn eigenvalue(&self, col: usize) -> Option<FieldElem> {
        let c = &self.cols[col];
        match c.len() {
            1 => c.get(&col).cloned(),
            _ => None,
        }
    }

    pub fn map_entries(&self, f: impl Fn(&FieldElem) -> FieldElem) -> Self {
        Operator {
            cols: self
                .cols
                .iter()
                .map(|c| c.iter().map(|(r, v)| (*r, f(v))).filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
            open: self.open.clone(),
        }
    }
}

/// A representation of `U_q(f_m(K,H))` or `U_q(f_m(K))` on a finite basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    params: AlgebraParams,
    basis: Vec<BasisLabel>,
    ops: BTreeMap<Gen, Operator>,
}

impl Representation {
    /// For one-parameter algebras `H` and `H^-1` are taken from `K^-1` and
    /// `K`; any supplied values for them are replaced.
    pub fn new(
        params: AlgebraParams,
        basis: Vec<BasisLabel>,
        mut ops: BTreeMap<Gen, Operator>,
    ) -> Result<Self, RepError> {
        if params.is_one_param() {
            let k = ops.get(&Gen::K).cloned();
            let ki = ops.get(&Gen::KInv).cloned();
            if let (Some(k), Some(ki)) = (k, ki) {
                ops.insert(Gen::H, ki);
                ops.insert(Gen::HInv, k);
            }
        }
        for g in Gen::ALL {
            match ops.get(&g) {
                Some(op) if op.dim() == basis.len() => {}
                _ => return Err(RepError::InvalidArgument(format!("missing or misshaped matrix for {}", g.name()))),
            }
        }
        Ok(Representation { params, basis, ops })
    }

    pub fn params(&self) -> AlgebraParams {
        self.params
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn op(&self, g: Gen) -> &Operator {
        &self.ops[&g]
    }

    /// Overwrites one matrix entry, e.g. to build a perturbed copy.
    pub fn set_entry(&mut self, g: Gen, row: usize, col: usize, value: FieldElem) {
        self.ops.get_mut(&g).expect("all generators present").set(row, col, value);
    }

    pub fn is_finite(&self) -> bool {
        self.ops.values().all(|op| op.open.is_empty())
    }

    pub fn basis_vector(&self, i: usize) -> SparseVec {
        let mut v = SparseVec::new();
        v.insert(i, FieldElem::one());
        v
    }

    pub fn apply_gen(&self, g: Gen, v: &SparseVec) -> Result<SparseVec, RepError> {
        let op = &self.ops[&g];
        let mut out = SparseVec::new();
        for (c, x) in v {
            if op.open.contains(c) {
                return Err(RepError::BoundaryOverflow { generator: g.name(), column: *c });
            }
            axpy(&mut out, x, &op.cols[*c]);
        }
        Ok(out)
    }

    /// Applies `g_1 g_2 ... g_n` (so `g_n` acts first).
    pub fn apply_word(&self, word: &[Gen], v: &SparseVec) -> Result<SparseVec, RepError> {
        let mut w = v.clone();
        for g in word.iter().rev() {
            w = self.apply_gen(*g, &w)?;
        }
        Ok(w)
    }

    /// `u · v` for an algebra element `u`.
    pub fn act(&self, u: &AlgElement, v: &SparseVec) -> Result<SparseVec, RepError> {
        if u.params() != self.params {
            return Err(RepError::ParamMismatch(u.params(), self.params));
        }
        let mut out = SparseVec::new();
        for (mono, c) in u.terms() {
            let mut w = v.clone();
            for _ in 0..mono.b {
                w = self.apply_gen(Gen::E, &w)?;
            }
            let h = if mono.j >= 0 { Gen::H } else { Gen::HInv };
            for _ in 0..mono.j.unsigned_abs() {
                w = self.apply_gen(h, &w)?;
            }
            let k = if mono.i >= 0 { Gen::K } else { Gen::KInv };
            for _ in 0..mono.i.unsigned_abs() {
                w = self.apply_gen(k, &w)?;
            }
            for _ in 0..mono.a {
                w = self.apply_gen(Gen::F, &w)?;
            }
            axpy(&mut out, c, &w);
        }
        Ok(out)
    }

    /// Basis indices on which every defining relation can be evaluated
    /// without leaving the window.
    pub fn interior(&self) -> Vec<usize> {
        let rels = relation_words(self.params);
        (0..self.dim())
            .filter(|&i| {
                let v = self.basis_vector(i);
                rels.iter().all(|r| r.terms.iter().all(|(_, w)| self.apply_word(w, &v).is_ok()))
            })
            .collect()
    }

    /// Checks every defining relation on every interior basis vector.
    pub fn verify_relations(&self) -> RelationReport {
        let rels = relation_words(self.params);
        let interior = self.interior();
        let mut failures = Vec::new();
        let mut checks_run = 0;
        for &i in &interior {
            let v = self.basis_vector(i);
            for r in &rels {
                checks_run += 1;
                let mut acc = SparseVec::new();
                for (c, w) in &r.terms {
                    let img = self.apply_word(w, &v).expect("interior vector");
                    axpy(&mut acc, c, &img);
                }
                if !acc.is_empty() {
                    failures.push(RelationFailure { relation: r.name.to_string(), basis: self.basis[i].to_string() });
                }
            }
        }
        RelationReport { dim: self.dim(), interior: interior.len(), checks_run, failures }
    }

    /// JSON dump: basis labels and sparse `[row, col, value]` triplets for
    /// every generator. With `q_eval` the entries are evaluated at that
    /// rational value of `q`.
    pub fn to_json(&self, q_eval: Option<&BigRational>) -> Result<Value, FieldError> {
        let render = |x: &FieldElem| -> Result<String, FieldError> {
            Ok(match q_eval {
                Some(q0) => x.eval_at(q0)?.to_string(),
                None => x.to_string(),
            })
        };
        let mut matrices = serde_json::Map::new();
        let mut open = serde_json::Map::new();
        for (g, op) in &self.ops {
            let mut triplets = Vec::new();
            for (c, col) in op.cols.iter().enumerate() {
                for (r, x) in col {
                    triplets.push(json!([r, c, render(x)?]));
                }
            }
            matrices.insert(g.name().to_string(), Value::Array(triplets));
            if !op.open.is_empty() {
                open.insert(g.name().to_string(), json!(op.open.iter().collect::<Vec<_>>()));
            }
        }
        Ok(json!({
            "params": { "m": self.params.m, "variant": self.params.variant },
            "basis": self.basis.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            "matrices": matrices,
            "open_columns": open,
        }))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationFailure {
    pub relation: String,
    pub basis: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub dim: usize,
    pub interior: usize,
    pub checks_run: usize,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Where a module came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Point { point: MaxIdealPoint, case: SpectrumCase },
    Derived(String),
}

/// A representation on which `K` and `H` act diagonally and invertibly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightModule {
    rep: Representation,
    provenance: Provenance,
}

impl WeightModule {
    pub fn new(rep: Representation, provenance: Provenance) -> Result<Self, RepError> {
        for g in [Gen::K, Gen::KInv, Gen::H, Gen::HInv] {
            let op = rep.op(g);
            if !op.open.is_empty() {
                return Err(RepError::NotWeightModule);
            }
            for i in 0..rep.dim() {
                match op.eigenvalue(i) {
                    Some(x) if !x.is_zero() => {}
                    _ => return Err(RepError::NotWeightModule),
                }
            }
        }
        Ok(WeightModule { rep, provenance })
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn into_rep(self) -> Representation {
        self.rep
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn params(&self) -> AlgebraParams {
        self.rep.params
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn is_finite(&self) -> bool {
        self.rep.is_finite()
    }

    /// `(K, H)` eigenvalues of basis vector `i`.
    pub fn weight(&self, i: usize) -> Weight {
        Weight {
            k: self.rep.op(Gen::K).eigenvalue(i).expect("weight module"),
            h: self.rep.op(Gen::H).eigenvalue(i).expect("weight module"),
        }
    }

    pub fn act(&self, u: &AlgElement, v: &SparseVec) -> Result<SparseVec, RepError> {
        self.rep.act(u, v)
    }

    pub fn verify_relations(&self) -> RelationReport {
        self.rep.verify_relations()
    }

    /// Rescales basis vector `i` by `scalars[i]` (conjugation by a diagonal
    /// matrix), giving an isomorphic module.
    pub fn rescaled(&self, scalars: &[FieldElem]) -> Result<Self, RepError> {
        if scalars.len() != self.dim() || scalars.iter().any(|s| s.is_zero()) {
            return Err(RepError::InvalidArgument("need one nonzero scalar per basis vector".into()));
        }
        let mut ops = BTreeMap::new();
        for (g, op) in &self.rep.ops {
            let mut out = op.clone();
            for (c, col) in op.cols.iter().enumerate() {
                out.cols[c] = col.iter().map(|(r, x)| (*r, x * &scalars[c] / &scalars[*r])).collect();
            }
            ops.insert(*g, out);
        }
        let rep = Representation { params: self.rep.params, basis: self.rep.basis.clone(), ops };
        Ok(WeightModule { rep, provenance: Provenance::Derived("rescaled".into()) })
    }

    pub fn to_json(&self, q_eval: Option<&BigRational>) -> Result<Value, FieldError> {
        let mut v = self.rep.to_json(q_eval)?;
        let prov = match &self.provenance {
            Provenance::Point { point, case } => json!({
                "point": {
                    "alpha": point.alpha.to_string(),
                    "beta": point.beta.to_string(),
                    "gamma": point.gamma.to_string(),
                    "m": point.m,
                },
                "case": case,
            }),
            Provenance::Derived(s) => json!({ "derived": s }),
        };
        v["provenance"] = prov;
        Ok(v)
    }
}
