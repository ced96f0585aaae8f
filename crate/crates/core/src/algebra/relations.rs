//! The defining relations as words in the generators, so they can be
//! evaluated in any target: the algebra itself, tensor powers, or matrices.

use super::{AlgElement, AlgebraParams};
use crate::qfield::FieldElem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    E,
    F,
    K,
    KInv,
    H,
    HInv,
}

impl Gen {
    pub const ALL: [Gen; 6] = [Gen::E, Gen::F, Gen::K, Gen::KInv, Gen::H, Gen::HInv];

    pub fn name(self) -> &'static str {
        match self {
            Gen::E => "E",
            Gen::F => "F",
            Gen::K => "K",
            Gen::KInv => "K^-1",
            Gen::H => "H",
            Gen::HInv => "H^-1",
        }
    }

    pub fn element(self, params: AlgebraParams) -> AlgElement {
        match self {
            Gen::E => AlgElement::e(params),
            Gen::F => AlgElement::f(params),
            Gen::K => AlgElement::k(params),
            Gen::KInv => AlgElement::k_inv(params),
            Gen::H => AlgElement::h(params),
            Gen::HInv => AlgElement::h_inv(params),
        }
    }
}

/// A linear combination of generator words that vanishes in the algebra.
#[derive(Debug, Clone)]
pub struct Relation {
    pub name: &'static str,
    pub terms: Vec<(FieldElem, Vec<Gen>)>,
}

/// Anything in which generator words can be evaluated.
pub trait WordTarget: Sized {
    fn identity(&self) -> Self;
    fn compose(&self, rhs: &Self) -> Self;
    fn combine(&self, c: &FieldElem, rhs: &Self) -> Self;
    fn zero_like(&self) -> Self;
}

impl Relation {
    /// Evaluates the relation with each generator replaced by `image(g)`.
    pub fn evaluate<T: WordTarget>(&self, image: &impl Fn(Gen) -> T) -> T {
        let probe = image(Gen::K);
        let mut acc = probe.zero_like();
        for (c, word) in &self.terms {
            let mut w = probe.identity();
            for g in word {
                w = w.compose(&image(*g));
            }
            acc = acc.combine(c, &w);
        }
        acc
    }
}

/// `KE = q^2 EK`, `KF = q^-2 FK`, `HE = q^-2 EH`, `HF = q^2 FH`, the inverse
/// pairs, `KH = HK` and `EF - FE = (K^m - H^m)/(q - q^-1)`, each written as
/// left minus right.
pub fn relation_words(params: AlgebraParams) -> Vec<Relation> {
    use Gen::*;
    let one = FieldElem::one;
    let neg = || -FieldElem::one();
    let q2 = FieldElem::q_pow(2);
    let qm2 = FieldElem::q_pow(-2);
    let d = FieldElem::q_minus_qinv().inv();
    let m = params.m as usize;
    vec![
        Relation { name: "KE = q^2 EK", terms: vec![(one(), vec![K, E]), (-&q2, vec![E, K])] },
        Relation { name: "KF = q^-2 FK", terms: vec![(one(), vec![K, F]), (-&qm2, vec![F, K])] },
        Relation { name: "HE = q^-2 EH", terms: vec![(one(), vec![H, E]), (-&qm2, vec![E, H])] },
        Relation { name: "HF = q^2 FH", terms: vec![(one(), vec![H, F]), (-&q2, vec![F, H])] },
        Relation { name: "K K^-1 = 1", terms: vec![(one(), vec![K, KInv]), (neg(), vec![])] },
        Relation { name: "K^-1 K = 1", terms: vec![(one(), vec![KInv, K]), (neg(), vec![])] },
        Relation { name: "H H^-1 = 1", terms: vec![(one(), vec![H, HInv]), (neg(), vec![])] },
        Relation { name: "H^-1 H = 1", terms: vec![(one(), vec![HInv, H]), (neg(), vec![])] },
        Relation { name: "KH = HK", terms: vec![(one(), vec![K, H]), (neg(), vec![H, K])] },
        Relation {
            name: "EF - FE = f_m(K,H)",
            terms: vec![(one(), vec![E, F]), (neg(), vec![F, E]), (-&d, vec![K; m]), (d.clone(), vec![H; m])],
        },
    ]
}

impl WordTarget for AlgElement {
    fn identity(&self) -> Self {
        AlgElement::one(self.params())
    }

    fn compose(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn combine(&self, c: &FieldElem, rhs: &Self) -> Self {
        self + &rhs.scale(c)
    }

    fn zero_like(&self) -> Self {
        AlgElement::zero(self.params())
    }
}

/// The relations evaluated in the algebra; all should be zero.
pub fn defining_relations(params: AlgebraParams) -> Vec<(&'static str, AlgElement)> {
    relation_words(params).into_iter().map(|r| (r.name, r.evaluate(&|g: Gen| g.element(params)))).collect()
}
