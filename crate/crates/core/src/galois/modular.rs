use alloc::vec::Vec;

use super::conditions::{check_essential_image, ConditionReport};
use super::simple::candidate_elements;
use crate::algebroid::{derivation_module, galois_homotopy_data};
use crate::cotangent::{direct_sum_compare, DirectSumReport};
use crate::error::{Error, Result};
use crate::funcfield::RatFunc;
use crate::tower::{linear_disjointness, AmbientField, DependenceCertificate, Disjointness, IntermediateField, TriangularPresentation};

pub const DEFAULT_BUDGET: usize = 200;

/// Provenance label carried by every disjointness-based verdict.
pub const DISJOINTNESS_CRITERION: &str = "classical criterion (Sweedler), external";

#[derive(Clone, Debug)]
pub struct PartCheck {
    pub degree: u64,
    pub essential_image: ConditionReport,
    pub fib_pi0_dim: usize,
}

#[derive(Clone, Debug)]
pub struct ModularConditions {
    pub parts: Vec<PartCheck>,
    /// Every part passes the essential-image conditions.
    pub condition1: bool,
    /// Every part has `dim π₀(fib ρ_i) = 1`.
    pub condition2: bool,
    /// The canonical map from the direct sum is an equivalence.
    pub condition3: bool,
    pub direct_sum: DirectSumReport,
    pub degree_product: u64,
    pub passed: bool,
}

pub fn verify_modular_conditions(
    field: &IntermediateField,
    base: &IntermediateField,
    parts: &[IntermediateField],
) -> Result<ModularConditions> {
    let module = derivation_module(field, base)?;
    let mut checks = Vec::new();
    for e in parts {
        let data = galois_homotopy_data(e, &module)?;
        checks.push(PartCheck {
            degree: e.degree_over(base)?,
            essential_image: check_essential_image(&data, &module)?,
            fib_pi0_dim: data.fib_pi0_dim,
        });
    }
    let direct_sum = direct_sum_compare(field, base, parts)?;
    let condition1 = checks.iter().all(|c| c.essential_image.verdict);
    let condition2 = checks.iter().all(|c| c.fib_pi0_dim == 1);
    let condition3 = direct_sum.isomorphism;
    let degree_product = checks.iter().map(|c| c.degree).product();
    Ok(ModularConditions {
        passed: condition1 && condition2 && condition3 && degree_product == field.degree_over(base)?,
        parts: checks,
        condition1,
        condition2,
        condition3,
        direct_sum,
        degree_product,
    })
}

#[derive(Clone, Debug)]
pub struct NotModularWitness {
    /// `F^{p^i}` fails to be linearly disjoint from `K`.
    pub level: u32,
    pub certificate: DependenceCertificate,
    pub criterion: &'static str,
}

#[derive(Clone, Debug)]
pub enum ModularityVerdict {
    Modular {
        generators: Vec<RatFunc>,
        parts: Vec<IntermediateField>,
        degrees: Vec<u64>,
        conditions: ModularConditions,
    },
    NotModular(NotModularWitness),
    Inconclusive {
        candidates_tried: usize,
        disjoint_levels: u32,
    },
}

impl ModularityVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            ModularityVerdict::Modular { .. } => "Modular",
            ModularityVerdict::NotModular(_) => "NotModular",
            ModularityVerdict::Inconclusive { .. } => "Inconclusive",
        }
    }
}

/// `F^{p^i}` and `K` inside one ambient field whose base lies in both.
pub fn lifted_pair(field: &IntermediateField, base: &IntermediateField, i: u32) -> Result<(IntermediateField, IntermediateField)> {
    let amb = field.ambient();
    let exps: Vec<u32> = (0..amb.nvars())
        .map(|j| {
            let x = amb.var(j);
            (i + field.element_exponent(&x)).max(base.element_exponent(&x))
        })
        .collect();
    let lifted = AmbientField::with_exponents(amb.p(), amb.names().to_vec(), exps)?;
    let frob: Vec<RatFunc> = field.generators().iter().map(|g| g.frobenius(i)).collect();
    let mut kgens = base.generators().to_vec();
    kgens.extend(amb.base_generators());
    Ok((IntermediateField::closure(&lifted, &frob), IntermediateField::closure(&lifted, &kgens)))
}

/// Sweedler's criterion: the first level `i < exponent` where `F^{p^i}` and `K` are not
/// linearly disjoint over their intersection, with the dependence found there.
pub fn disjointness_prong(field: &IntermediateField, base: &IntermediateField) -> Result<Option<NotModularWitness>> {
    let exp = field.exponent_over(base)?;
    for i in 1..exp {
        let (fi, k) = lifted_pair(field, base, i)?;
        if let Disjointness::Dependence(certificate) = linear_disjointness(&fi, &k) {
            return Ok(Some(NotModularWitness { level: i, certificate, criterion: DISJOINTNESS_CRITERION }));
        }
    }
    Ok(None)
}

struct Search<'a> {
    field: &'a IntermediateField,
    base: &'a IntermediateField,
    candidates: Vec<(u32, RatFunc)>,
    budget: usize,
    tried: usize,
    max_depth: usize,
}

impl Search<'_> {
    fn run(&mut self, current: &IntermediateField, chosen: &mut Vec<RatFunc>) -> bool {
        if current.dim_over_base() == self.field.dim_over_base() {
            return true;
        }
        if chosen.len() == self.max_depth {
            return false;
        }
        let mut at_level = 0;
        for idx in 0..self.candidates.len() {
            if at_level == self.budget || self.tried >= self.budget * (self.max_depth + 1) {
                return false;
            }
            let (k_base, alpha) = self.candidates[idx].clone();
            if current.contains(&alpha) {
                continue;
            }
            at_level += 1;
            self.tried += 1;
            // K(α) is disjoint from the current compositum iff α keeps its exponent over it
            if current.element_exponent(&alpha) != k_base {
                continue;
            }
            let next = current.adjoin(core::slice::from_ref(&alpha));
            chosen.push(alpha);
            if self.run(&next, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Searches for `α_1..α_r` with `F = K(α_1) ⊗_K ... ⊗_K K(α_r)`, trying candidates of
/// largest exponent first. Returns the generators and the number of candidates tried.
pub fn decomposition_search(
    field: &IntermediateField,
    base: &IntermediateField,
    budget: usize,
    seed: u64,
) -> Result<(Option<Vec<RatFunc>>, usize)> {
    if !field.contains_field(base) {
        return Err(Error::NotASubfield("K is not contained in F"));
    }
    let pres = TriangularPresentation::new(field, base, None)?;
    let mut candidates: Vec<(u32, RatFunc)> = candidate_elements(field, base, &pres, seed, budget as u64)
        .into_iter()
        .map(|a| (base.element_exponent(&a), a))
        .collect();
    candidates.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    let max_depth = crate::cotangent::cartier_check(field, base)?.pi0_dim;
    let mut search = Search { field, base, candidates, budget, tried: 0, max_depth };
    let mut chosen = Vec::new();
    let found = search.run(base, &mut chosen);
    let _ = search.base;
    Ok((found.then_some(chosen), search.tried))
}

pub fn modularity_test(field: &IntermediateField, base: &IntermediateField, budget: usize, seed: u64) -> Result<ModularityVerdict> {
    if !field.contains_field(base) {
        return Err(Error::NotASubfield("K is not contained in F"));
    }
    if let Some(w) = disjointness_prong(field, base)? {
        return Ok(ModularityVerdict::NotModular(w));
    }
    let (found, tried) = decomposition_search(field, base, budget, seed)?;
    match found {
        Some(mut generators) => {
            generators.sort_by(|a, b| b.cmp(a));
            let parts: Vec<IntermediateField> =
                generators.iter().map(|g| base.adjoin(core::slice::from_ref(g))).collect();
            let degrees = parts.iter().map(|e| e.degree_over(base)).collect::<Result<Vec<_>>>()?;
            let conditions = verify_modular_conditions(field, base, &parts)?;
            Ok(ModularityVerdict::Modular { generators, parts, degrees, conditions })
        }
        None => Ok(ModularityVerdict::Inconclusive {
            candidates_tried: tried,
            disjoint_levels: field.exponent_over(base)?.saturating_sub(1),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposable_extension() {
        let a = AmbientField::standard(2, 2, 2).unwrap();
        let (x, y) = (a.var(0), a.var(1));
        let k = IntermediateField::closure(&a, &[x.pow(2), y.pow(4)]);
        let f = IntermediateField::full(&a);
        match modularity_test(&f, &k, DEFAULT_BUDGET, 1).unwrap() {
            ModularityVerdict::Modular { generators, degrees, conditions, .. } => {
                assert_eq!(degrees, alloc::vec![2, 4]);
                assert_eq!(generators, alloc::vec![x, y]);
                assert!(conditions.passed);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn exponent_one_is_modular() {
        let a = AmbientField::standard(2, 2, 1).unwrap();
        let f = IntermediateField::full(&a);
        let k = IntermediateField::base(&a);
        let v = modularity_test(&f, &k, DEFAULT_BUDGET, 1).unwrap();
        assert_eq!(v.label(), "Modular");
    }

    #[test]
    fn sweedler_is_not_modular() {
        let a = AmbientField::standard(2, 3, 2).unwrap();
        let (x, y, z) = (a.var(0), a.var(1), a.var(2));
        let u = x.mul(&z).add(&y);
        let k = IntermediateField::closure(&a, &[x.pow(2), y.pow(2)]);
        let f = k.adjoin(&[u.clone(), z.clone()]);
        match modularity_test(&f, &k, DEFAULT_BUDGET, 1).unwrap() {
            ModularityVerdict::NotModular(w) => {
                assert_eq!(w.level, 1);
                assert!(w.certificate.relation_value().is_zero());
                assert_eq!(w.certificate.elements.len(), 3);
            }
            other => panic!("{other:?}"),
        }
        let parts = [k.adjoin(&[u]), k.adjoin(&[z])];
        let c = verify_modular_conditions(&f, &k, &parts).unwrap();
        assert!(!c.condition3);
    }

    #[test]
    fn condition_failures() {
        let a = AmbientField::standard(2, 2, 1).unwrap();
        let f = IntermediateField::full(&a);
        let k = IntermediateField::base(&a);
        let c = verify_modular_conditions(&f, &k, &[f.clone()]).unwrap();
        assert!(!c.condition2);
        let c = verify_modular_conditions(&f, &k, &[]).unwrap();
        assert!(!c.condition3);
    }
}
