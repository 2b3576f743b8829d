use alloc::vec::Vec;

use super::derivation::Derivation;
use super::lie::RestrictedLieAlgebroid;
use crate::error::{Error, Result};
use crate::random::{random_element, trial_rng};

/// `s_1, ..., s_{p-1}` with `i s_i` the coefficient of `t^{i-1}` in `ad(t D_1 + D_2)^{p-1}(D_1)`.
pub fn jacobson_terms(d1: &Derivation, d2: &Derivation) -> Result<Vec<Derivation>> {
    let pres = d1.presentation();
    let amb = pres.field().ambient();
    let p = amb.p();
    let ring = amb.ring();
    // coefficients of a polynomial in t
    let mut poly: Vec<Derivation> = alloc::vec![d1.clone()];
    for _ in 0..p - 1 {
        let mut next: Vec<Derivation> = alloc::vec![Derivation::zero(pres); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k] = next[k].add(&d2.bracket(c)?)?;
            next[k + 1] = next[k + 1].add(&d1.bracket(c)?)?;
        }
        poly = next;
    }
    (1..p)
        .map(|i| {
            let inv = crate::funcfield::RatFunc::constant(ring, ring.inv(i) as i64);
            Ok(poly[i as usize - 1].scale(&inv))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub trials: u32,
    pub scalar: u32,
    pub adjoint: u32,
    pub sum_formula: u32,
    pub passed: bool,
}

fn random_member(g: &RestrictedLieAlgebroid, rng: &mut rand_chacha::ChaCha8Rng) -> Result<Derivation> {
    let pres = g.presentation();
    let mut d = Derivation::zero(pres);
    for b in g.basis() {
        let phi = random_element(rng, pres.field(), 2);
        d = d.add(&b.scale(&phi))?;
    }
    Ok(d)
}

/// Checks, on seeded random members of `g`:
/// `(λD)^{[p]} = λ^p D^{[p]}` for `λ ∈ K`, `ad(D^{[p]}) = ad(D)^p`, and
/// `(D_1 + D_2)^{[p]} = D_1^{[p]} + D_2^{[p]} + sum_i s_i(D_1, D_2)`.
pub fn verify_restricted_axioms(g: &RestrictedLieAlgebroid, trials: u32, seed: u64) -> Result<AxiomReport> {
    let pres = g.presentation();
    let p = pres.field().ambient().p();
    if !matches!(p, 2 | 3 | 5) {
        return Err(Error::UnsupportedPrime(p));
    }
    let mut report = AxiomReport { trials, scalar: 0, adjoint: 0, sum_formula: 0, passed: true };
    if g.dim() == 0 {
        report.scalar = trials;
        report.adjoint = trials;
        report.sum_formula = trials;
        return Ok(report);
    }
    for t in 0..trials {
        let mut rng = trial_rng(seed, t as u64);
        let d1 = random_member(g, &mut rng)?;
        let d2 = random_member(g, &mut rng)?;
        let lambda = random_element(&mut rng, pres.base(), 2);

        let lhs = d1.scale(&lambda).p_power()?;
        let rhs = d1.p_power()?.scale(&lambda.pow(p as u64));
        report.scalar += (lhs == rhs) as u32;

        let dp = d1.p_power()?;
        let mut iterated = d2.clone();
        for _ in 0..p {
            iterated = d1.bracket(&iterated)?;
        }
        report.adjoint += (dp.bracket(&d2)? == iterated) as u32;

        let mut rhs = d1.p_power()?.add(&d2.p_power()?)?;
        for s in jacobson_terms(&d1, &d2)? {
            rhs = rhs.add(&s)?;
        }
        report.sum_formula += (d1.add(&d2)?.p_power()? == rhs) as u32;
    }
    report.passed = report.scalar == trials && report.adjoint == trials && report.sum_formula == trials;
    Ok(report)
}
