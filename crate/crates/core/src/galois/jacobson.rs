use alloc::vec::Vec;

use crate::algebroid::{derivation_module, derivations_vanishing_on, fixed_field, restricted_closure, Derivation, DerivationModule};
use crate::error::{Error, Result};
use crate::random::{below, random_element, random_element_outside, trial_rng};
use crate::tower::IntermediateField;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RoundTripReport {
    pub trials: u32,
    /// `F^{Der_E(F)} = E`.
    pub field_passes: u32,
    /// `Der_{F^g}(F) = g`.
    pub algebroid_passes: u32,
    /// `E_1 ⊆ E_2` implies `Der_{E_2}(F) ⊆ Der_{E_1}(F)`.
    pub reversal_passes: u32,
    pub passed: bool,
}

pub fn random_intermediate(
    rng: &mut rand_chacha::ChaCha8Rng,
    field: &IntermediateField,
    base: &IntermediateField,
) -> IntermediateField {
    let count = below(rng, 3);
    let mut gens = Vec::new();
    for _ in 0..count {
        if let Some(g) = random_element_outside(rng, field, base, 3) {
            gens.push(g);
        }
    }
    base.adjoin(&gens)
}

pub(crate) fn random_derivation(rng: &mut rand_chacha::ChaCha8Rng, module: &DerivationModule) -> Derivation {
    let pres = module.presentation();
    let mut d = Derivation::zero(pres);
    for b in module.basis() {
        if below(rng, 3) == 0 {
            continue;
        }
        let phi = random_element(rng, pres.field(), 2);
        d = d.add(&b.scale(&phi)).expect("same presentation");
    }
    d
}

pub fn jacobson_roundtrip(field: &IntermediateField, base: &IntermediateField, trials: u32, seed: u64) -> Result<RoundTripReport> {
    let exp = field.exponent_over(base)?;
    if exp > 1 {
        return Err(Error::ExponentTooLarge(exp));
    }
    let module = derivation_module(field, base)?;
    let pres = module.presentation();
    let mut r = RoundTripReport { trials, field_passes: 0, algebroid_passes: 0, reversal_passes: 0, passed: false };
    for t in 0..trials {
        let mut rng = trial_rng(seed, t as u64);
        let e = random_intermediate(&mut rng, field, base);
        let g = derivations_vanishing_on(&e, &module)?;
        r.field_passes += fixed_field(&g)?.same_field(&e) as u32;

        let count = 1 + below(&mut rng, 2);
        let seeds: Vec<Derivation> = (0..count).map(|_| random_derivation(&mut rng, &module)).collect();
        let h = restricted_closure(pres, &seeds)?;
        r.algebroid_passes += (derivations_vanishing_on(&fixed_field(&h)?, &module)? == h) as u32;

        let e2 = match random_element_outside(&mut rng, field, &e, 3) {
            Some(extra) => e.adjoin(&[extra]),
            None => e.clone(),
        };
        let g2 = derivations_vanishing_on(&e2, &module)?;
        r.reversal_passes += g2.is_subalgebroid_of(&g) as u32;
    }
    r.passed = r.field_passes == trials && r.algebroid_passes == trials && r.reversal_passes == trials;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::AmbientField;

    #[test]
    fn exponent_one_round_trips() {
        let a = AmbientField::standard(2, 2, 1).unwrap();
        let r = jacobson_roundtrip(&IntermediateField::full(&a), &IntermediateField::base(&a), 4, 3).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn rejects_higher_exponent() {
        let a = AmbientField::standard(2, 1, 2).unwrap();
        let r = jacobson_roundtrip(&IntermediateField::full(&a), &IntermediateField::base(&a), 1, 0);
        assert_eq!(r, Err(Error::ExponentTooLarge(2)));
    }
}
