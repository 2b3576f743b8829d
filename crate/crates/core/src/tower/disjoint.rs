use alloc::vec::Vec;

use super::field::IntermediateField;
use crate::funcfield::RatFunc;
use crate::linalg::{Echelon, Insert};

/// Elements `b_1..b_k` of `E_1`, independent over `E_1 ∩ E_2`, with
/// `sum_j mu_j b_j = 0` for the stated `mu_j ∈ E_2`, not all zero.
#[derive(Clone, Debug, PartialEq)]
pub struct DependenceCertificate {
    pub elements: Vec<RatFunc>,
    pub coefficients: Vec<RatFunc>,
}

impl DependenceCertificate {
    /// `sum_j mu_j b_j`.
    pub fn relation_value(&self) -> RatFunc {
        let ring = self.elements[0].ring();
        let parts: Vec<RatFunc> = self.elements.iter().zip(&self.coefficients).map(|(b, m)| b.mul(m)).collect();
        crate::funcfield::sum(ring, parts.iter())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Disjointness {
    Disjoint,
    Dependence(DependenceCertificate),
}

/// Tests whether `E_1` and `E_2` are linearly disjoint over `C = E_1 ∩ E_2`.
///
/// A `C`-basis of `E_1` is picked greedily from `E_1`'s elements; the extension is disjoint
/// iff this basis stays `E_2`-independent. The first dependence found is returned.
pub fn linear_disjointness(e1: &IntermediateField, e2: &IntermediateField) -> Disjointness {
    let amb = e1.ambient().clone();
    let ring = amb.ring();
    let c = e1.intersection(e2);
    let target = e1.dim_over_base() / c.dim_over_base();
    let mut cbasis: Vec<RatFunc> = Vec::new();
    let mut over_c = Echelon::new(ring);
    for b in e1.elements() {
        if cbasis.len() == target {
            break;
        }
        let mut trial = over_c.clone();
        let independent = c
            .elements()
            .iter()
            .all(|cl| trial.insert(amb.coords(&b.mul(cl))) == Insert::Independent);
        if independent {
            over_c = trial;
            cbasis.push(b.clone());
        }
    }
    debug_assert_eq!(cbasis.len(), target);
    let kdim = e2.dim_over_base();
    let mut over_e2 = Echelon::tracked(ring);
    for (j, b) in cbasis.iter().enumerate() {
        for kappa in e2.elements() {
            if let Insert::Dependent(Some(rel)) = over_e2.insert(amb.coords(&b.mul(kappa))) {
                let mut coeffs: Vec<Vec<RatFunc>> = alloc::vec![Vec::new(); j + 1];
                for (idx, x) in rel {
                    let (jj, l) = (idx as usize / kdim, idx as usize % kdim);
                    coeffs[jj].push(amb.lift_scalar(&x).mul(&e2.elements()[l]));
                }
                let coefficients = coeffs.iter().map(|parts| crate::funcfield::sum(ring, parts.iter())).collect();
                return Disjointness::Dependence(DependenceCertificate {
                    elements: cbasis[..=j].to_vec(),
                    coefficients,
                });
            }
        }
    }
    Disjointness::Disjoint
}
