//! Exact linear algebra over `Q(q)`.

use std::collections::BTreeMap;

use crate::qfield::FieldElem;

/// A sparse vector: coordinate index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, FieldElem>;

/// `x + c y`, dropping cancelled entries.
pub fn axpy(x: &mut SparseVec, c: &FieldElem, y: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (k, v) in y {
        let slot = x.entry(*k).or_default();
        *slot += &(c * v);
        if slot.is_zero() {
            x.remove(k);
        }
    }
}

pub fn scale(x: &SparseVec, c: &FieldElem) -> SparseVec {
    if c.is_zero() {
        return SparseVec::new();
    }
    x.iter().map(|(k, v)| (*k, v * c)).collect()
}

/// Incrementally maintained row-echelon basis of a subspace.
#[derive(Debug, Clone, Default)]
pub struct EchelonBasis {
    rows: BTreeMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        EchelonBasis::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is in the span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        loop {
            let hit = v.iter().find_map(|(k, c)| self.rows.get(k).map(|row| (c.clone(), row)));
            match hit {
                Some((c, row)) => axpy(&mut v, &-c, row),
                None => return v,
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns whether it was independent of the current span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        self.insert_reduced(v).is_some()
    }

    /// Inserts `v` and returns the new row, or `None` if `v` was already in
    /// the span.
    pub fn insert_reduced(&mut self, v: &SparseVec) -> Option<SparseVec> {
        let r = self.reduce(v);
        let (&pivot, lead) = r.iter().next()?;
        let r = scale(&r, &lead.inv());
        self.rows.insert(pivot, r.clone());
        Some(r)
    }
}

/// Rank of a list of sparse vectors.
pub fn rank(vectors: &[SparseVec]) -> usize {
    let mut basis = EchelonBasis::new();
    for v in vectors {
        basis.insert(v);
    }
    basis.rank()
}

/// Basis of `{x : A x = 0}` where `A` is given by sparse rows over `ncols`
/// unknowns.
pub fn nullspace(rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut pivots: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for row in rows {
        let mut r = row.clone();
        loop {
            let hit = r.iter().find_map(|(k, c)| pivots.get(k).map(|p| (c.clone(), p)));
            match hit {
                Some((c, p)) => axpy(&mut r, &-c, p),
                None => break,
            }
        }
        let Some((&pivot, lead)) = r.iter().next() else {
            continue;
        };
        let r = scale(&r, &lead.inv());
        for other in pivots.values_mut() {
            if let Some(c) = other.get(&pivot).cloned() {
                axpy(other, &-c, &r);
            }
        }
        pivots.insert(pivot, r);
    }
    (0..ncols)
        .filter(|c| !pivots.contains_key(c))
        .map(|free| {
            let mut v = SparseVec::new();
            v.insert(free, FieldElem::one());
            for (p, row) in &pivots {
                if let Some(c) = row.get(&free) {
                    v.insert(*p, -c);
                }
            }
            v
        })
        .collect()
}

/// Expresses `v` in terms of `basis` when it lies in their span.
pub fn solve_in_span(basis: &[SparseVec], v: &SparseVec) -> Option<Vec<FieldElem>> {
    let n = basis.len();
    let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for (j, b) in basis.iter().enumerate() {
        for (i, c) in b {
            rows.entry(*i).or_default().insert(j, c.clone());
        }
    }
    for (i, c) in v {
        rows.entry(*i).or_default().insert(n, -c);
    }
    let rows: Vec<SparseVec> = rows.into_values().collect();
    let kernel = nullspace(&rows, n + 1);
    let hit = kernel.iter().find(|k| k.contains_key(&n))?;
    let t = hit[&n].inv();
    Some((0..n).map(|j| hit.get(&j).map(|c| c * &t).unwrap_or_default()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(entries: &[(usize, &str)]) -> SparseVec {
        entries.iter().map(|(k, s)| (*k, FieldElem::parse(s).unwrap())).collect()
    }

    #[test]
    fn rank_and_membership() {
        let a = sv(&[(0, "1"), (1, "q")]);
        let b = sv(&[(1, "1"), (2, "q^2")]);
        let c = sv(&[(0, "2"), (1, "2*q+1"), (2, "q^2")]);
        assert_eq!(rank(&[a.clone(), b.clone(), c.clone()]), 2);
        let mut basis = EchelonBasis::new();
        basis.insert(&a);
        basis.insert(&b);
        assert!(basis.contains(&c));
        assert!(!basis.contains(&sv(&[(2, "1")])));
        let coeffs = solve_in_span(&[a, b], &c).unwrap();
        assert_eq!(coeffs[0], FieldElem::from_int(2));
        assert_eq!(coeffs[1], FieldElem::one());
    }

    #[test]
    fn nullspace_basic() {
        let rows = vec![sv(&[(0, "1"), (1, "-q")]), sv(&[(1, "1"), (2, "-1")])];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        let x = &ns[0];
        for r in &rows {
            let dot: FieldElem = r.iter().map(|(k, c)| c * x.get(k).cloned().unwrap_or_default()).sum();
            assert!(dot.is_zero());
        }
        assert_eq!(nullspace(&[], 2).len(), 2);
    }
}
