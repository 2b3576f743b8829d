//! Frobenius descent: the unique expansion `f = sum_a c_a(x^q) * x^a` of `f` in the
//! monomial basis `{x^a : 0 <= a_j < q_j}` of `A` over `B = F_p(x_1^{q_1}, ..., x_N^{q_N})`.
//!
//! With every `q_j = p^e` the substitution `c(x^q)` equals `c^{p^e}`, so this is
//! the classical decomposition `f = sum_a c_a^{p^e} x^a`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::poly::{Monomial, Poly};
use super::ratfunc::RatFunc;

/// Expansion of `f` over the sub-field `F_p(x_j^{q_j})`. Keys are the residue
/// exponent vectors `a`; only nonzero coordinates are present.
pub fn descend(f: &RatFunc, q: &[u64]) -> BTreeMap<Vec<u32>, RatFunc> {
    let ring = f.ring();
    let mut out = BTreeMap::new();
    if f.is_zero() {
        return out;
    }
    let (num, den_coord) = if let Some(d) = f.den().deflate(q) {
        (f.num().clone(), d)
    } else {
        // d^Q lies in F_p[x^Q] and Q is a multiple of every q_j
        let big_q = *q.iter().max().unwrap();
        let multiplier = f.den().pow(big_q - 1);
        let full = f.den().inflate(&alloc::vec![big_q; q.len()]);
        (f.num().mul(&multiplier), full.deflate(q).expect("d^Q is a q-power"))
    };
    let mut buckets: BTreeMap<Vec<u32>, Vec<(Monomial, u32)>> = BTreeMap::new();
    for (m, c) in num.terms() {
        let mut residue = Vec::with_capacity(q.len());
        let mut quotient = Monomial::one(ring.nvars());
        for (j, (&e, &qj)) in m.0.iter().zip(q).enumerate() {
            residue.push((e as u64 % qj) as u32);
            quotient.0[j] = (e as u64 / qj) as u32;
        }
        buckets.entry(residue).or_default().push((quotient, *c));
    }
    for (a, terms) in buckets {
        let p = Poly::from_terms(ring, terms);
        if p.is_zero() {
            continue;
        }
        let c = RatFunc::normalize(p, den_coord.clone()).expect("nonzero denominator");
        out.insert(a, c);
    }
    out
}

/// `frobenius_descent(f, e)`: uniform exponent `p^e` in every variable.
pub fn frobenius_descent(f: &RatFunc, e: u32) -> BTreeMap<Vec<u32>, RatFunc> {
    let q = (f.ring().p() as u64).pow(e);
    descend(f, &alloc::vec![q; f.ring().nvars()])
}

/// Rebuilds `sum_a c_a(x^q) x^a`. Coordinates sharing a denominator are summed as
/// polynomials first, so only one reduction runs per distinct denominator.
pub fn reassemble<'a, I>(ring: super::scalar::PolyRing, q: &[u64], coords: I) -> RatFunc
where
    I: IntoIterator<Item = (&'a Vec<u32>, &'a RatFunc)>,
{
    let mut groups: BTreeMap<&Poly, Poly> = BTreeMap::new();
    for (a, c) in coords {
        let num = c.num().inflate(q).mul_term(&Monomial::from_slice(a), 1);
        let acc = groups.entry(c.den()).or_insert_with(|| Poly::zero(ring));
        *acc = acc.add(&num);
    }
    let parts: Vec<RatFunc> = groups
        .into_iter()
        .filter(|(_, n)| !n.is_zero())
        .map(|(d, n)| RatFunc::normalize(n, d.inflate(q)).expect("nonzero denominator"))
        .collect();
    super::ratfunc::sum(ring, parts.iter())
}

/// `g` with `g^{p^e} = f`, if it exists in `F_p(x)`.
pub fn is_pe_power(f: &RatFunc, e: u32) -> Option<RatFunc> {
    let q = (f.ring().p() as u64).pow(e);
    f.deflate(&alloc::vec![q; f.ring().nvars()])
}
