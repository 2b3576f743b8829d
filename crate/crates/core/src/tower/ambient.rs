use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::funcfield::{descend, reassemble, Monomial, PolyRing, RatFunc};
use crate::linalg::SparseVec;

const MAX_AMBIENT_DIM: u64 = 1 << 16;

/// `A = F_p(x_1, ..., x_N)` together with the base field `B = F_p(x_1^{q_1}, ..., x_N^{q_N})`,
/// `q_j = p^{e_j}`. Every modeled field sits between `B` and `A`.
///
/// Coordinates of `f` are the descent coefficients `c_a` with `f = sum_a c_a(x^q) x^a`,
/// indexed by the basis monomials `x^a` in ascending graded-lex order (index 0 is `1`).
#[derive(Debug)]
pub struct AmbientField {
    ring: PolyRing,
    names: Vec<String>,
    exps: Vec<u32>,
    q: Vec<u64>,
    basis: Vec<Vec<u32>>,
    index: BTreeMap<Vec<u32>, u32>,
}

impl AmbientField {
    /// Uniform exponent bound `e` in every variable.
    pub fn new(p: u32, names: Vec<String>, e: u32) -> Result<Arc<Self>> {
        let n = names.len();
        Self::with_exponents(p, names, alloc::vec![e; n])
    }

    pub fn with_exponents(p: u32, names: Vec<String>, exps: Vec<u32>) -> Result<Arc<Self>> {
        if names.is_empty() {
            return Err(Error::Config("at least one variable is required"));
        }
        if exps.len() != names.len() {
            return Err(Error::Config("one exponent bound per variable"));
        }
        if exps.iter().any(|&e| e == 0) {
            return Err(Error::Config("exponent bounds must be positive"));
        }
        let ring = PolyRing::new(p, names.len())?;
        let mut dim: u64 = 1;
        let mut q = Vec::with_capacity(exps.len());
        for &e in &exps {
            let qj = (p as u64).checked_pow(e).ok_or(Error::Config("ambient dimension too large"))?;
            dim = dim.saturating_mul(qj);
            q.push(qj);
        }
        if dim > MAX_AMBIENT_DIM {
            return Err(Error::Config("ambient dimension too large"));
        }
        let mut basis: Vec<Vec<u32>> = alloc::vec![Vec::new()];
        for &qj in &q {
            let mut next = Vec::with_capacity(basis.len() * qj as usize);
            for a in &basis {
                for k in 0..qj as u32 {
                    let mut b = a.clone();
                    b.push(k);
                    next.push(b);
                }
            }
            basis = next;
        }
        basis.sort_by(|a, b| Monomial::from_slice(a).cmp(&Monomial::from_slice(b)));
        let index = basis.iter().enumerate().map(|(i, a)| (a.clone(), i as u32)).collect();
        Ok(Arc::new(AmbientField { ring, names, exps, q, basis, index }))
    }

    /// Variables named `x, y, z, w`, then `x5, x6, ...`.
    pub fn standard(p: u32, nvars: usize, e: u32) -> Result<Arc<Self>> {
        Self::new(p, standard_names(nvars), e)
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn p(&self) -> u32 {
        self.ring.p()
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn max_exponent(&self) -> u32 {
        *self.exps.iter().max().unwrap()
    }

    pub fn q(&self) -> &[u64] {
        &self.q
    }

    /// `[A : B]`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_monomial(&self, idx: usize) -> &[u32] {
        &self.basis[idx]
    }

    pub fn var(&self, i: usize) -> RatFunc {
        RatFunc::var(self.ring, i)
    }

    pub fn one(&self) -> RatFunc {
        RatFunc::one(self.ring)
    }

    pub fn zero(&self) -> RatFunc {
        RatFunc::zero(self.ring)
    }

    /// The generators `x_j^{q_j}` of `B`.
    pub fn base_generators(&self) -> Vec<RatFunc> {
        (0..self.nvars()).map(|j| self.var(j).pow(self.q[j])).collect()
    }

    pub fn coords(&self, f: &RatFunc) -> SparseVec {
        let mut out: SparseVec = descend(f, &self.q)
            .into_iter()
            .map(|(a, c)| (self.index[&a], c))
            .collect();
        out.sort_by_key(|e| e.0);
        out
    }

    pub fn from_coords(&self, v: &SparseVec) -> RatFunc {
        let items: Vec<(Vec<u32>, RatFunc)> =
            v.iter().map(|(i, c)| (self.basis[*i as usize].clone(), c.clone())).collect();
        reassemble(self.ring, &self.q, items.iter().map(|(a, c)| (a, c)))
    }

    /// The element of `B` whose coordinate is `c` (i.e. `c(x^q)`).
    pub fn lift_scalar(&self, c: &RatFunc) -> RatFunc {
        c.inflate(&self.q)
    }

    pub fn is_base_element(&self, f: &RatFunc) -> bool {
        self.coords(f).iter().all(|(i, _)| *i == 0)
    }

    pub fn same_as(&self, other: &AmbientField) -> bool {
        self.ring == other.ring && self.exps == other.exps
    }
}

pub fn standard_names(nvars: usize) -> Vec<String> {
    const NAMES: [&str; 4] = ["x", "y", "z", "w"];
    (0..nvars)
        .map(|i| if i < NAMES.len() { String::from(NAMES[i]) } else { format!("x{}", i + 1) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_order_and_size() {
        let a = AmbientField::standard(2, 2, 1).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.basis_monomial(0), &[0, 0]);
        assert_eq!(a.basis_monomial(1), &[0, 1]);
        assert_eq!(a.basis_monomial(2), &[1, 0]);
        assert_eq!(a.basis_monomial(3), &[1, 1]);
        let b = AmbientField::with_exponents(3, standard_names(3), alloc::vec![1, 1, 2]).unwrap();
        assert_eq!(b.dim(), 81);
    }

    #[test]
    fn coordinates_round_trip() {
        let a = AmbientField::standard(3, 2, 1).unwrap();
        let x = a.var(0);
        let y = a.var(1);
        let f = x.pow(4).add(&y.mul(&x)).div(&y.add(&a.one())).unwrap();
        assert_eq!(a.from_coords(&a.coords(&f)), f);
        assert!(a.is_base_element(&x.pow(3)));
        assert!(!a.is_base_element(&x));
    }

    #[test]
    fn rejects_bad_configuration() {
        assert!(AmbientField::standard(4, 2, 1).is_err());
        assert!(AmbientField::standard(2, 2, 0).is_err());
        assert!(AmbientField::standard(2, 0, 1).is_err());
    }
}
