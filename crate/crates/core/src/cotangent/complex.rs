use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::Result;
use crate::funcfield::{PolyRing, RatFunc};
use crate::linalg::Matrix;
use crate::tower::{IntermediateField, TriangularPresentation};

/// `I/I^2 -> Ω¹_{K[X]/K} ⊗ F`: class `[P_i]` goes to row `i` of `J`, read against `dX_1..dX_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTermComplex {
    pub n: usize,
    pub jacobian: Matrix,
}

/// `J_ij = (∂P_i/∂X_j)(u) = -(∂c_i/∂X_j)(u)`.
pub fn cotangent_complex(pres: &TriangularPresentation) -> TwoTermComplex {
    let ring = pres.field().ambient().ring();
    let n = pres.len();
    let mut j = Matrix::zeros(ring, n, n);
    for i in 0..n {
        let d = pres.partials_of_poly(pres.tail(i));
        for (col, v) in d.into_iter().enumerate() {
            j.set(i, col, v.neg());
        }
    }
    TwoTermComplex { n, jacobian: j }
}

/// Default presentation and its complex.
pub fn cotangent_complex_of(
    field: &IntermediateField,
    base: &IntermediateField,
) -> Result<(Arc<TriangularPresentation>, TwoTermComplex)> {
    let pres = Arc::new(TriangularPresentation::new(field, base, None)?);
    let c = cotangent_complex(&pres);
    Ok((pres, c))
}

/// Homology of a two-term complex. `π₁` is the left kernel of `J`, `π₀` the cokernel
/// `F^n / rowspace(J)` with basis the classes of `dX_j` for non-pivot columns `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub n: usize,
    pub rank: usize,
    pub pi0_dim: usize,
    pub pi1_dim: usize,
    pub pi0_basis: Vec<usize>,
    pub pi1_basis: Vec<Vec<RatFunc>>,
    row_space: Vec<Vec<RatFunc>>,
    row_pivots: Vec<usize>,
    pi1_pivots: Vec<usize>,
}

pub fn homology(c: &TwoTermComplex, ring: PolyRing) -> Homology {
    let (rows, pivots) = c.jacobian.rref(ring);
    let pi1_basis = c.jacobian.left_kernel(ring);
    let pi1_pivots = pi1_basis
        .iter()
        .map(|v| v.iter().position(|x| !x.is_zero()).unwrap())
        .collect();
    let pi0_basis: Vec<usize> = (0..c.n).filter(|j| !pivots.contains(j)).collect();
    Homology {
        n: c.n,
        rank: pivots.len(),
        pi0_dim: pi0_basis.len(),
        pi1_dim: pi1_basis.len(),
        pi0_basis,
        pi1_basis,
        row_space: rows,
        row_pivots: pivots,
        pi1_pivots,
    }
}

impl Homology {
    /// Coordinates of a left-kernel vector on `pi1_basis`.
    pub fn pi1_coords(&self, a: &[RatFunc]) -> Vec<RatFunc> {
        self.pi1_pivots.iter().map(|&k| a[k].clone()).collect()
    }

    /// Coordinates of the class of `w ∈ F^n` on `pi0_basis`.
    pub fn pi0_coords(&self, w: &[RatFunc]) -> Vec<RatFunc> {
        let mut w = w.to_vec();
        for (row, &pc) in self.row_space.iter().zip(&self.row_pivots) {
            let f = w[pc].clone();
            if f.is_zero() {
                continue;
            }
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.sub(&f.mul(r));
                }
            }
        }
        self.pi0_basis.iter().map(|&j| w[j].clone()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CartierReport {
    pub pi0_dim: usize,
    pub pi1_dim: usize,
    pub equal: bool,
}

/// `dim Ω¹_{F/K} = dim Υ_{F/K}` (transcendence degree 0).
pub fn cartier_check(field: &IntermediateField, base: &IntermediateField) -> Result<CartierReport> {
    let (_, c) = cotangent_complex_of(field, base)?;
    let h = homology(&c, field.ambient().ring());
    Ok(CartierReport { pi0_dim: h.pi0_dim, pi1_dim: h.pi1_dim, equal: h.pi0_dim == h.pi1_dim })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::AmbientField;

    #[test]
    fn zero_jacobians() {
        let a = AmbientField::standard(2, 2, 1).unwrap();
        let f = IntermediateField::full(&a);
        let k = IntermediateField::base(&a);
        let (_, c) = cotangent_complex_of(&f, &k).unwrap();
        assert_eq!(c.n, 2);
        assert!(c.jacobian.is_zero());
        let h = homology(&c, a.ring());
        assert_eq!((h.pi0_dim, h.pi1_dim), (2, 2));
        assert_eq!(cartier_check(&f, &k).unwrap(), CartierReport { pi0_dim: 2, pi1_dim: 2, equal: true });
        assert_eq!(cartier_check(&f, &f).unwrap(), CartierReport { pi0_dim: 0, pi1_dim: 0, equal: true });
        let a1 = AmbientField::standard(2, 1, 2).unwrap();
        let f1 = IntermediateField::full(&a1);
        let k1 = IntermediateField::base(&a1);
        assert_eq!(cartier_check(&f1, &k1).unwrap(), CartierReport { pi0_dim: 1, pi1_dim: 1, equal: true });
    }

    #[test]
    fn nilpotent_jacobian() {
        let a = AmbientField::standard(3, 2, 2).unwrap();
        let (x, y) = (a.var(0), a.var(1));
        let k = IntermediateField::closure(&a, &[x.pow(3), y.pow(3).add(&x)]);
        let f = IntermediateField::full(&a);
        let pres = TriangularPresentation::new(&f, &k, Some(&[x.clone(), y.clone()])).unwrap();
        let c = cotangent_complex(&pres);
        let r = a.ring();
        let expected = Matrix::from_rows(
            r,
            2,
            &[alloc::vec![a.zero(), a.zero()], alloc::vec![a.one(), a.zero()]],
        );
        assert_eq!(c.jacobian, expected);
        let h = homology(&c, r);
        assert_eq!((h.pi0_dim, h.pi1_dim), (1, 1));
        assert_eq!(h.pi1_basis, alloc::vec![alloc::vec![a.one(), a.zero()]]);
        assert_eq!(h.pi0_basis, alloc::vec![1]);
    }
}
