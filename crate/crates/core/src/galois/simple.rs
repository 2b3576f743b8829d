use alloc::vec::Vec;

use crate::cotangent::cartier_check;
use crate::error::{Error, Result};
use crate::funcfield::RatFunc;
use crate::random::{below, random_element, trial_rng};
use crate::tower::{IntermediateField, TriangularPresentation};

const RANDOM_CANDIDATES: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityReport {
    /// `F = K`: not simple, and not a counterexample either.
    pub trivial: bool,
    pub simple: bool,
    pub omega_dim: usize,
    /// A primitive element found by the explicit search.
    pub generator: Option<RatFunc>,
    /// The search finds a generator exactly when `dim Ω¹ = 1`.
    pub search_agrees: bool,
}

/// Basis elements, presentation monomials, then seeded random `K`-combinations of them.
pub(crate) fn candidate_elements(
    field: &IntermediateField,
    base: &IntermediateField,
    pres: &TriangularPresentation,
    seed: u64,
    random: u64,
) -> Vec<RatFunc> {
    let mut out: Vec<RatFunc> = Vec::new();
    out.extend(field.generators().iter().cloned());
    out.extend(field.elements().iter().cloned());
    let monomials: Vec<RatFunc> = pres.monomials().iter().map(|a| pres.eval_monomial(a)).collect();
    out.extend(monomials.iter().cloned());
    let ring = field.ambient().ring();
    for t in 0..random {
        let mut rng = trial_rng(seed, t);
        let count = 2 + below(&mut rng, 2);
        let parts: Vec<RatFunc> = (0..count)
            .map(|_| {
                let m = &monomials[below(&mut rng, monomials.len() as u32) as usize];
                random_element(&mut rng, base, 2).mul(m)
            })
            .collect();
        out.push(crate::funcfield::sum(ring, parts.iter()));
    }
    out.retain(|c| !base.contains(c));
    let mut seen = alloc::collections::BTreeSet::new();
    out.retain(|c| seen.insert(c.clone()));
    out
}

/// `F/K` is simple iff `dim Ω¹_{F/K} = 1`; cross-checked by searching for a primitive element.
pub fn is_simple(field: &IntermediateField, base: &IntermediateField) -> Result<SimplicityReport> {
    if !field.contains_field(base) {
        return Err(Error::NotASubfield("K is not contained in F"));
    }
    let c = cartier_check(field, base)?;
    if field.same_field(base) {
        return Ok(SimplicityReport { trivial: true, simple: false, omega_dim: 0, generator: None, search_agrees: true });
    }
    let degree = field.degree_over(base)?;
    let p = field.ambient().p() as u64;
    let pres = TriangularPresentation::new(field, base, None)?;
    // [K(α):K] = p^k with k least such that α^{p^k} ∈ K
    let generator = candidate_elements(field, base, &pres, crate::random::DEFAULT_SEED, RANDOM_CANDIDATES)
        .into_iter()
        .find(|a| p.pow(base.element_exponent(a)) == degree);
    let simple = c.pi0_dim == 1;
    Ok(SimplicityReport {
        trivial: false,
        simple,
        omega_dim: c.pi0_dim,
        search_agrees: generator.is_some() == simple,
        generator,
    })
}
