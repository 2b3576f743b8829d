use alloc::sync::Arc;
use alloc::vec::Vec;

use super::ambient::AmbientField;
use crate::error::{Error, Result};
use crate::funcfield::RatFunc;
use crate::linalg::{Echelon, Insert, SparseVec};

/// A field `B ⊆ E ⊆ A`, stored as a `B`-basis of actual elements together with the
/// reduced echelon form of their coordinate vectors.
#[derive(Clone, Debug)]
pub struct IntermediateField {
    ambient: Arc<AmbientField>,
    generators: Vec<RatFunc>,
    elements: Vec<RatFunc>,
    echelon: Echelon,
}

impl IntermediateField {
    /// `B` itself.
    pub fn base(ambient: &Arc<AmbientField>) -> Self {
        let one = ambient.one();
        let mut echelon = Echelon::tracked(ambient.ring());
        echelon.insert(ambient.coords(&one));
        IntermediateField { ambient: ambient.clone(), generators: Vec::new(), elements: alloc::vec![one], echelon }
    }

    /// `A` itself.
    pub fn full(ambient: &Arc<AmbientField>) -> Self {
        let vars: Vec<RatFunc> = (0..ambient.nvars()).map(|i| ambient.var(i)).collect();
        Self::closure(ambient, &vars)
    }

    /// Smallest field containing `B` and `gens`.
    pub fn closure(ambient: &Arc<AmbientField>, gens: &[RatFunc]) -> Self {
        Self::base(ambient).adjoin(gens)
    }

    /// `self(gens)`.
    pub fn adjoin(&self, gens: &[RatFunc]) -> Self {
        let mut out = self.clone();
        let old = out.elements.len();
        let first_new = out.generators.len();
        out.generators.extend(gens.iter().cloned());
        // the old span is stable under the old generators; only new products can escape
        let mut i = 0;
        while i < out.elements.len() {
            let start = if i < old { first_new } else { 0 };
            for g in start..out.generators.len() {
                let prod = out.elements[i].mul(&out.generators[g]);
                if out.echelon.insert(out.ambient.coords(&prod)) == Insert::Independent {
                    out.elements.push(prod);
                }
            }
            i += 1;
        }
        out
    }

    /// Field with the given `B`-spanning set, which must already be closed under
    /// multiplication. Generators are chosen greedily from the basis.
    pub fn from_basis(ambient: &Arc<AmbientField>, basis: &[RatFunc]) -> Self {
        let mut out = Self::base(ambient);
        for b in basis {
            if out.echelon.insert(ambient.coords(b)) == Insert::Independent {
                out.elements.push(b.clone());
                out.generators.push(b.clone());
            }
        }
        out.generators = out.minimal_generators();
        out
    }

    pub fn ambient(&self) -> &Arc<AmbientField> {
        &self.ambient
    }

    pub fn generators(&self) -> &[RatFunc] {
        &self.generators
    }

    /// `B`-basis of the field; `elements()[0] = 1`.
    pub fn elements(&self) -> &[RatFunc] {
        &self.elements
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    /// `[E : B]`.
    pub fn dim_over_base(&self) -> usize {
        self.elements.len()
    }

    pub fn is_base(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_full(&self) -> bool {
        self.elements.len() == self.ambient.dim()
    }

    pub fn contains(&self, f: &RatFunc) -> bool {
        self.echelon.contains(&self.ambient.coords(f))
    }

    pub fn contains_field(&self, other: &IntermediateField) -> bool {
        other.dim_over_base() <= self.dim_over_base() && self.echelon.contains_space(&other.echelon)
    }

    pub fn same_field(&self, other: &IntermediateField) -> bool {
        self.echelon.same_space(&other.echelon)
    }

    /// Coordinates (in the coordinate field of `B`) of `f` on `elements()`.
    pub fn express(&self, f: &RatFunc) -> Option<SparseVec> {
        self.echelon.express(&self.ambient.coords(f))
    }

    /// `[self : K]`.
    pub fn degree_over(&self, k: &IntermediateField) -> Result<u64> {
        if !self.contains_field(k) {
            return Err(Error::NotASubfield("K is not contained in F"));
        }
        Ok((self.dim_over_base() / k.dim_over_base()) as u64)
    }

    /// Least `k` with `f^{p^k}` in this field.
    pub fn element_exponent(&self, f: &RatFunc) -> u32 {
        let mut k = 0;
        let mut g = f.clone();
        while !self.contains(&g) {
            g = g.frobenius(1);
            k += 1;
        }
        k
    }

    /// Least `n` with `f^{p^n} ∈ K` for all `f` in this field.
    pub fn exponent_over(&self, k: &IntermediateField) -> Result<u32> {
        if !self.contains_field(k) {
            return Err(Error::NotASubfield("K is not contained in F"));
        }
        Ok(self.generators.iter().map(|g| k.element_exponent(g)).max().unwrap_or(0))
    }

    pub fn intersection(&self, other: &IntermediateField) -> IntermediateField {
        if self.contains_field(other) {
            return other.clone();
        }
        if other.contains_field(self) {
            return self.clone();
        }
        let ring = self.ambient.ring();
        let mut e = Echelon::tracked(ring);
        for row in self.echelon.rows() {
            e.insert(row.clone());
        }
        let mut common = Vec::new();
        let m = self.echelon.rank() as u32;
        for row in other.echelon.rows() {
            if let Insert::Dependent(Some(rel)) = e.insert(row.clone()) {
                // sum over the first block is minus the second block: an element of both spans
                let terms: Vec<(RatFunc, &SparseVec)> = rel
                    .iter()
                    .filter(|(i, _)| *i < m)
                    .map(|(i, c)| (c.clone(), &self.echelon.rows()[*i as usize]))
                    .collect();
                let v = crate::linalg::sparse_combination(ring, &terms);
                common.push(self.ambient.from_coords(&v));
            }
        }
        Self::from_basis(&self.ambient, &common)
    }

    pub fn compositum(&self, other: &IntermediateField) -> IntermediateField {
        if self.contains_field(other) {
            return self.clone();
        }
        if other.contains_field(self) {
            return other.clone();
        }
        self.adjoin(&other.generators)
    }

    /// Irredundant generators over `B`, chosen greedily from this field's basis.
    pub fn minimal_generators(&self) -> Vec<RatFunc> {
        let mut cur = Self::base(&self.ambient);
        let mut out = Vec::new();
        let mut candidates: Vec<&RatFunc> = self.generators.iter().chain(self.elements.iter()).collect();
        candidates.sort();
        candidates.dedup();
        for c in candidates {
            if cur.dim_over_base() == self.dim_over_base() {
                break;
            }
            if !cur.contains(c) {
                cur = cur.adjoin(core::slice::from_ref(c));
                out.push(c.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn amb(p: u32, n: usize, e: u32) -> Arc<AmbientField> {
        AmbientField::standard(p, n, e).unwrap()
    }

    #[test]
    fn closure_examples() {
        let a = amb(2, 2, 1);
        let x = a.var(0);
        let y = a.var(1);
        assert_eq!(IntermediateField::closure(&a, &[]).dim_over_base(), 1);
        assert_eq!(IntermediateField::closure(&a, &[x.clone()]).dim_over_base(), 2);
        let e = IntermediateField::closure(&a, &[x.add(&y), x.mul(&y)]);
        assert_eq!(e.dim_over_base(), 4);
        assert!(e.is_full());
    }

    #[test]
    fn membership_examples() {
        let a = amb(2, 2, 1);
        let x = a.var(0);
        let y = a.var(1);
        let ex = IntermediateField::closure(&a, &[x.clone()]);
        assert!(ex.contains(&x));
        assert!(ex.contains(&x.pow(2)));
        assert!(!ex.contains(&y));
        // x = (x^2 + xy) / (x + y), so B(x+y, xy) already contains x
        let e = IntermediateField::closure(&a, &[x.add(&y), x.mul(&y)]);
        assert!(e.contains(&x));
        let a3 = amb(2, 3, 1);
        let (x, z) = (a3.var(0), a3.var(2));
        let e = IntermediateField::closure(&a3, &[x.add(&z)]);
        assert!(!e.contains(&x));
    }

    #[test]
    fn lattice_examples() {
        let a = amb(2, 2, 1);
        let ex = IntermediateField::closure(&a, &[a.var(0)]);
        let ey = IntermediateField::closure(&a, &[a.var(1)]);
        assert!(ex.intersection(&ey).is_base());
        assert!(ex.compositum(&ey).is_full());
        assert!(ex.intersection(&ex).same_field(&ex));
    }

    #[test]
    fn sweedler_degree_and_exponent() {
        let a = amb(2, 3, 2);
        let (x, y, z) = (a.var(0), a.var(1), a.var(2));
        let k = IntermediateField::closure(&a, &[x.pow(2), y.pow(2)]);
        let f = k.adjoin(&[x.mul(&z).add(&y), z.clone()]);
        assert_eq!(f.degree_over(&k).unwrap(), 8);
        assert_eq!(f.exponent_over(&k).unwrap(), 2);
        assert!(k.degree_over(&f).is_err());
    }

    #[test]
    fn frobenius_exponent() {
        let a = amb(2, 1, 2);
        let f = IntermediateField::full(&a);
        let k = IntermediateField::base(&a);
        assert_eq!(f.exponent_over(&k).unwrap(), 2);
        assert_eq!(f.exponent_over(&f).unwrap(), 0);
        assert_eq!(f.degree_over(&k).unwrap(), 4);
    }

    #[test]
    fn intersection_of_overlapping_fields() {
        let a = amb(3, 2, 1);
        let (x, y) = (a.var(0), a.var(1));
        let e1 = IntermediateField::closure(&a, &[x.add(&y)]);
        let e2 = IntermediateField::closure(&a, &[x.add(&y), x.mul(&y)]);
        let c = e1.intersection(&e2);
        assert!(c.same_field(&e1));
        let e3 = IntermediateField::closure(&a, &[x.add(&y.scale(2))]);
        assert!(e1.intersection(&e3).is_base());
        assert_eq!(e1.compositum(&e3).dim_over_base(), 9);
    }
}
