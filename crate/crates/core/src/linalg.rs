//! Exact linear algebra over `F_p(x_1, ..., x_N)`.
//!
//! Two flavours: [`Echelon`], an incrementally maintained reduced row-echelon
//! basis of sparse vectors (used for coordinate spaces of dimension up to `p^{eN}`),
//! and [`Matrix`], a small dense matrix for Jacobians and homology.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::funcfield::{PolyRing, RatFunc};

/// Sparse vector: `(index, value)` pairs sorted by index, no zero values.
pub type SparseVec = Vec<(u32, RatFunc)>;

pub fn sparse_get(v: &SparseVec, idx: u32) -> Option<&RatFunc> {
    v.binary_search_by_key(&idx, |e| e.0).ok().map(|k| &v[k].1)
}

pub fn sparse_scale(v: &SparseVec, c: &RatFunc) -> SparseVec {
    if c.is_one() {
        return v.clone();
    }
    v.iter().map(|(i, x)| (*i, x.mul(c))).filter(|(_, x)| !x.is_zero()).collect()
}

/// `a - c * b`.
pub fn sparse_sub_scaled(a: &SparseVec, c: &RatFunc, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ia = a.get(i).map(|e| e.0).unwrap_or(u32::MAX);
        let ib = b.get(j).map(|e| e.0).unwrap_or(u32::MAX);
        if ia < ib {
            out.push(a[i].clone());
            i += 1;
        } else if ib < ia {
            out.push((ib, b[j].1.mul(c).neg()));
            j += 1;
        } else {
            let v = a[i].1.sub(&b[j].1.mul(c));
            if !v.is_zero() {
                out.push((ia, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Linear combination `sum_k c_k v_k`.
pub fn sparse_combination(ring: PolyRing, terms: &[(RatFunc, &SparseVec)]) -> SparseVec {
    let mut acc: BTreeMap<u32, Vec<RatFunc>> = BTreeMap::new();
    for (c, v) in terms {
        if c.is_zero() {
            continue;
        }
        for (i, x) in v.iter() {
            acc.entry(*i).or_default().push(x.mul(c));
        }
    }
    acc.into_iter()
        .map(|(i, xs)| (i, crate::funcfield::sum(ring, xs.iter())))
        .filter(|(_, x)| !x.is_zero())
        .collect()
}

/// Outcome of [`Echelon::insert`].
#[derive(Clone, Debug, PartialEq)]
pub enum Insert {
    Independent,
    /// The inserted vector depends on earlier ones. With tracking enabled the
    /// payload is a nontrivial relation among the inputs (coefficient 1 on the new one).
    Dependent(Option<SparseVec>),
}

/// Reduced row-echelon basis of a subspace, built incrementally.
///
/// Pivot of a row is its smallest index; rows vanish on every other pivot column.
/// With tracking, each row also remembers how it was formed from the inserted inputs.
#[derive(Clone, Debug)]
pub struct Echelon {
    ring: PolyRing,
    rows: Vec<SparseVec>,
    pivots: Vec<u32>,
    combos: Option<Vec<SparseVec>>,
    inputs: u32,
}

impl Echelon {
    pub fn new(ring: PolyRing) -> Self {
        Echelon { ring, rows: Vec::new(), pivots: Vec::new(), combos: None, inputs: 0 }
    }

    pub fn tracked(ring: PolyRing) -> Self {
        Echelon { ring, rows: Vec::new(), pivots: Vec::new(), combos: Some(Vec::new()), inputs: 0 }
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[u32] {
        &self.pivots
    }

    pub fn num_inputs(&self) -> u32 {
        self.inputs
    }

    fn pivot_coeffs(&self, v: &SparseVec) -> Vec<(usize, RatFunc)> {
        let mut out = Vec::new();
        for (idx, val) in v {
            if let Ok(k) = self.pivots.binary_search(idx) {
                out.push((k, val.clone()));
            }
        }
        out
    }

    /// Residual of `v` modulo the row space, plus the row coefficients used.
    pub fn reduce_with(&self, v: &SparseVec) -> (SparseVec, Vec<(usize, RatFunc)>) {
        let coeffs = self.pivot_coeffs(v);
        if coeffs.is_empty() {
            return (v.clone(), coeffs);
        }
        let mut terms: Vec<(RatFunc, &SparseVec)> = Vec::with_capacity(coeffs.len() + 1);
        terms.push((RatFunc::one(self.ring), v));
        for (k, c) in &coeffs {
            terms.push((c.neg(), &self.rows[*k]));
        }
        (sparse_combination(self.ring, &terms), coeffs)
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.reduce_with(v).0
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coefficients expressing `v` through the inserted inputs, if `v` is in the span.
    /// Requires tracking.
    pub fn express(&self, v: &SparseVec) -> Option<SparseVec> {
        let combos = self.combos.as_ref().expect("express needs a tracked echelon");
        let (res, coeffs) = self.reduce_with(v);
        if !res.is_empty() {
            return None;
        }
        let terms: Vec<(RatFunc, &SparseVec)> =
            coeffs.iter().map(|(k, c)| (c.clone(), &combos[*k])).collect();
        Some(sparse_combination(self.ring, &terms))
    }

    pub fn insert(&mut self, v: SparseVec) -> Insert {
        let input = self.inputs;
        self.inputs += 1;
        let (res, coeffs) = self.reduce_with(&v);
        let combo = self.combos.as_ref().map(|combos| {
            let unit: SparseVec = alloc::vec![(input, RatFunc::one(self.ring))];
            let mut terms: Vec<(RatFunc, &SparseVec)> = alloc::vec![(RatFunc::one(self.ring), &unit)];
            for (k, c) in &coeffs {
                terms.push((c.neg(), &combos[*k]));
            }
            sparse_combination(self.ring, &terms)
        });
        if res.is_empty() {
            return Insert::Dependent(combo);
        }
        let pivot = res[0].0;
        let inv = res[0].1.inv().expect("nonzero pivot");
        let row = sparse_scale(&res, &inv);
        let combo = combo.map(|c| sparse_scale(&c, &inv));
        for k in 0..self.rows.len() {
            if let Some(f) = sparse_get(&self.rows[k], pivot).cloned() {
                self.rows[k] = sparse_sub_scaled(&self.rows[k], &f, &row);
                if let (Some(combos), Some(c)) = (self.combos.as_mut(), combo.as_ref()) {
                    combos[k] = sparse_sub_scaled(&combos[k], &f, c);
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(pos, pivot);
        self.rows.insert(pos, row);
        if let (Some(combos), Some(c)) = (self.combos.as_mut(), combo) {
            combos.insert(pos, c);
        }
        Insert::Independent
    }

    /// Same row space (reduced echelon forms are canonical).
    pub fn same_space(&self, other: &Echelon) -> bool {
        self.pivots == other.pivots && self.rows == other.rows
    }

    pub fn contains_space(&self, other: &Echelon) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }
}

/// Dense matrix with rational-function entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RatFunc>,
}

impl Matrix {
    pub fn zeros(ring: PolyRing, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: alloc::vec![RatFunc::zero(ring); rows * cols] }
    }

    pub fn identity(ring: PolyRing, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, RatFunc::one(ring));
        }
        m
    }

    pub fn from_rows(ring: PolyRing, cols: usize, rows: &[Vec<RatFunc>]) -> Self {
        let mut m = Self::zeros(ring, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            for (j, x) in r.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFunc) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<RatFunc> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self, ring: PolyRing) -> Matrix {
        let mut t = Matrix::zeros(ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, ring: PolyRing, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let parts: Vec<RatFunc> =
                    (0..self.cols).map(|k| self.get(i, k).mul(other.get(k, j))).collect();
                out.set(i, j, crate::funcfield::sum(ring, parts.iter()));
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, ring: PolyRing, v: &[RatFunc]) -> Vec<RatFunc> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                let parts: Vec<RatFunc> = (0..self.rows).map(|i| v[i].mul(self.get(i, j))).collect();
                crate::funcfield::sum(ring, parts.iter())
            })
            .collect()
    }

    /// Reduced row-echelon form (nonzero rows only) and pivot columns.
    pub fn rref(&self, ring: PolyRing) -> (Vec<Vec<RatFunc>>, Vec<usize>) {
        let mut e = Echelon::new(ring);
        for i in 0..self.rows {
            e.insert(dense_to_sparse(&self.row(i)));
        }
        let rows = e.rows().iter().map(|r| sparse_to_dense(ring, r, self.cols)).collect();
        let pivots = e.pivots().iter().map(|&p| p as usize).collect();
        (rows, pivots)
    }

    pub fn rank(&self, ring: PolyRing) -> usize {
        self.rref(ring).1.len()
    }

    /// Basis of `{d : M d = 0}` in reduced echelon form.
    pub fn right_kernel(&self, ring: PolyRing) -> Vec<Vec<RatFunc>> {
        let (rref, pivots) = self.rref(ring);
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = alloc::vec![RatFunc::zero(ring); self.cols];
            v[free] = RatFunc::one(ring);
            for (row, &pc) in rref.iter().zip(&pivots) {
                v[pc] = row[free].neg();
            }
            basis.push(v);
        }
        canonical_basis(ring, self.cols, &basis)
    }

    /// Basis of `{a : a M = 0}` in reduced echelon form.
    pub fn left_kernel(&self, ring: PolyRing) -> Vec<Vec<RatFunc>> {
        self.transpose(ring).right_kernel(ring)
    }
}

pub fn dense_to_sparse(v: &[RatFunc]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i as u32, x.clone()))
        .collect()
}

pub fn sparse_to_dense(ring: PolyRing, v: &SparseVec, len: usize) -> Vec<RatFunc> {
    let mut out = alloc::vec![RatFunc::zero(ring); len];
    for (i, x) in v {
        out[*i as usize] = x.clone();
    }
    out
}

/// Reduced echelon basis of the span of `vectors`.
pub fn canonical_basis(ring: PolyRing, len: usize, vectors: &[Vec<RatFunc>]) -> Vec<Vec<RatFunc>> {
    let mut e = Echelon::new(ring);
    for v in vectors {
        e.insert(dense_to_sparse(v));
    }
    e.rows().iter().map(|r| sparse_to_dense(ring, r, len)).collect()
}

/// Echelon built from dense vectors.
pub fn echelon_of(ring: PolyRing, vectors: &[Vec<RatFunc>]) -> Echelon {
    let mut e = Echelon::new(ring);
    for v in vectors {
        e.insert(dense_to_sparse(v));
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> PolyRing {
        PolyRing::new(3, 2).unwrap()
    }

    #[test]
    fn kernels_of_nilpotent_jacobian() {
        let r = ring();
        let z = RatFunc::zero(r);
        let o = RatFunc::one(r);
        let j = Matrix::from_rows(r, 2, &[alloc::vec![z.clone(), z.clone()], alloc::vec![o.clone(), z.clone()]]);
        assert_eq!(j.rank(r), 1);
        assert_eq!(j.left_kernel(r), alloc::vec![alloc::vec![o.clone(), z.clone()]]);
        assert_eq!(j.right_kernel(r), alloc::vec![alloc::vec![z, o]]);
    }

    #[test]
    fn tracked_relation() {
        let r = ring();
        let x = RatFunc::var(r, 0);
        let y = RatFunc::var(r, 1);
        let mut e = Echelon::tracked(r);
        let v0 = dense_to_sparse(&[x.clone(), y.clone()]);
        let v1 = dense_to_sparse(&[RatFunc::one(r), x.clone()]);
        let v2 = dense_to_sparse(&[x.add(&RatFunc::one(r).scale(2)), y.add(&x.scale(2))]);
        assert_eq!(e.insert(v0.clone()), Insert::Independent);
        assert_eq!(e.insert(v1.clone()), Insert::Independent);
        match e.insert(v2) {
            Insert::Dependent(Some(rel)) => {
                // v2 = v0 + 2 v1, so the relation is -v0 - 2 v1 + v2
                let dense = sparse_to_dense(r, &rel, 3);
                assert_eq!(dense[2], RatFunc::one(r));
                assert_eq!(dense[0], RatFunc::constant(r, -1));
                assert_eq!(dense[1], RatFunc::constant(r, -2));
            }
            other => panic!("unexpected {other:?}"),
        }
        let w = dense_to_sparse(&[x.scale(2), y.scale(2)]);
        assert_eq!(e.express(&w), Some(alloc::vec![(0, RatFunc::constant(r, 2))]));
    }
}
