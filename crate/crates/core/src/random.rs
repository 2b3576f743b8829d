//! Seeded randomness for the property harnesses. Every trial gets its own stream,
//! derived from `(seed, trial index)`, so trials can run in any order.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::funcfield::{Monomial, Poly, RatFunc};
use crate::tower::{AmbientField, IntermediateField};

pub const DEFAULT_SEED: u64 = 42;

pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn below(rng: &mut ChaCha8Rng, n: u32) -> u32 {
    (rng.next_u64() % n as u64) as u32
}

/// Random polynomial with up to `terms` terms of degree at most `max_deg` in each variable.
pub fn random_poly(rng: &mut ChaCha8Rng, amb: &AmbientField, terms: u32, max_deg: u32) -> Poly {
    let ring = amb.ring();
    let p = amb.p();
    loop {
        let count = 1 + below(rng, terms);
        let t: Vec<(Monomial, u32)> = (0..count)
            .map(|_| {
                let e: Vec<u32> = (0..amb.nvars()).map(|_| below(rng, max_deg + 1)).collect();
                (Monomial::from_slice(&e), 1 + below(rng, p - 1))
            })
            .collect();
        let poly = Poly::from_terms(ring, t);
        if !poly.is_zero() {
            return poly;
        }
    }
}

/// Random nonzero rational function; a denominator appears with probability 1/4.
pub fn random_ratfunc(rng: &mut ChaCha8Rng, amb: &AmbientField, terms: u32, max_deg: u32) -> RatFunc {
    let num = random_poly(rng, amb, terms, max_deg);
    if below(rng, 4) == 0 {
        let den = random_poly(rng, amb, 2, 1);
        RatFunc::normalize(num, den).expect("nonzero denominator")
    } else {
        RatFunc::from_poly(num)
    }
}

/// Random `F_p`-combination of a few small elements of `field`: `1`, its generators and
/// products of two generators. The field's basis elements are avoided on purpose, since
/// they are products of every generator and far too large for the suites.
pub fn random_element(rng: &mut ChaCha8Rng, field: &IntermediateField, terms: u32) -> RatFunc {
    let amb = field.ambient();
    let ring = amb.ring();
    let gens = field.generators();
    let mut pool = alloc::vec![amb.one()];
    pool.extend(gens.iter().cloned());
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i..] {
            pool.push(a.mul(b));
        }
    }
    let count = 1 + below(rng, terms);
    let parts: Vec<RatFunc> = (0..count)
        .map(|_| {
            let k = below(rng, pool.len() as u32) as usize;
            pool[k].scale(1 + below(rng, amb.p() - 1))
        })
        .collect();
    crate::funcfield::sum(ring, parts.iter())
}

/// Random element of `field` outside `avoid`, if one is found within a few attempts.
pub fn random_element_outside(
    rng: &mut ChaCha8Rng,
    field: &IntermediateField,
    avoid: &IntermediateField,
    terms: u32,
) -> Option<RatFunc> {
    (0..16).map(|_| random_element(rng, field, terms)).find(|f| !avoid.contains(f))
}
