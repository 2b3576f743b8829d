//! Multivariate polynomial gcd over `F_p`.
//!
//! Recursive content/primitive-part scheme: coefficients with respect to a main
//! variable are handled by recursion on fewer variables, primitive parts by a
//! primitive pseudo-remainder sequence. Univariate inputs use the Euclidean
//! algorithm over the field `F_p`.

use alloc::vec::Vec;

use super::poly::{Monomial, Poly};

/// Monic gcd under graded-lex order. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.make_monic();
    }
    if b.is_zero() {
        return a.make_monic();
    }
    let ring = a.ring();
    if a.is_constant() || b.is_constant() {
        return Poly::one(ring);
    }
    if a == b {
        return a.make_monic();
    }
    if a.is_monomial() || b.is_monomial() {
        let m = a.monomial_content().gcd(&b.monomial_content());
        return Poly::monomial(ring, m, 1);
    }
    // pull out the monomial content first; the remaining parts have none
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mg = ma.gcd(&mb);
    let a1 = strip(a, &ma);
    let b1 = strip(b, &mb);
    let g = gcd_no_monomial_content(&a1, &b1);
    if mg.is_one() {
        g
    } else {
        g.mul_term(&mg, 1)
    }
}

fn strip(a: &Poly, m: &Monomial) -> Poly {
    if m.is_one() {
        a.clone()
    } else {
        a.div_exact(&Poly::monomial(a.ring(), m.clone(), 1))
            .expect("monomial content divides")
    }
}

fn gcd_no_monomial_content(a: &Poly, b: &Poly) -> Poly {
    let ring = a.ring();
    if a.is_constant() || b.is_constant() {
        return Poly::one(ring);
    }
    if a == b {
        return a.make_monic();
    }
    let va = a.support_vars();
    let vb = b.support_vars();
    // a variable occurring in only one argument cannot occur in the gcd
    for v in 0..ring.nvars() {
        if va[v] != vb[v] {
            let (with, without) = if va[v] { (a, b) } else { (b, a) };
            let mut g = without.clone();
            for c in with.coefficients_in(v) {
                if c.is_zero() {
                    continue;
                }
                g = gcd(&g, &c);
                if g.is_constant() {
                    return Poly::one(ring);
                }
            }
            return g;
        }
    }
    let vars: Vec<usize> = (0..ring.nvars()).filter(|&v| va[v]).collect();
    if vars.len() == 1 {
        return univariate_gcd(a, b, vars[0]);
    }
    // main variable: smallest maximal degree
    let v = *vars
        .iter()
        .min_by_key(|&&v| (a.degree_in(v).max(b.degree_in(v)), v))
        .unwrap();
    let ca = a.coefficients_in(v);
    let cb = b.coefficients_in(v);
    let cont_a = content(&ca);
    let cont_b = content(&cb);
    let cont_g = gcd(&cont_a, &cont_b);
    let mut r0 = divide_all(&ca, &cont_a);
    let mut r1 = divide_all(&cb, &cont_b);
    if r0.len() < r1.len() {
        core::mem::swap(&mut r0, &mut r1);
    }
    loop {
        let r = pseudo_rem(&r0, &r1);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            r1 = alloc::vec![Poly::one(ring)];
            break;
        }
        let c = content(&r);
        r0 = r1;
        r1 = divide_all(&r, &c);
    }
    let pp = Poly::from_coefficients(ring, v, &divide_all(&r1, &content(&r1)));
    pp.mul(&cont_g).make_monic()
}

fn content(coeffs: &[Poly]) -> Poly {
    let ring = coeffs[0].ring();
    let mut g = Poly::zero(ring);
    // cheapest coefficients first
    let mut order: Vec<&Poly> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    order.sort_by_key(|c| (c.len(), c.total_degree()));
    for c in order {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn divide_all(coeffs: &[Poly], d: &Poly) -> Vec<Poly> {
    if d.is_one() {
        return coeffs.to_vec();
    }
    coeffs
        .iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

fn trim(v: &mut Vec<Poly>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Pseudo-remainder of dense univariate polynomials with polynomial coefficients.
fn pseudo_rem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let mut r: Vec<Poly> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (k, bk) in b.iter().enumerate() {
            if bk.is_zero() {
                continue;
            }
            let t = bk.mul(&lr);
            r[k + shift] = r[k + shift].sub(&t);
        }
        debug_assert!(r[dr].is_zero());
        trim(&mut r);
    }
    r
}

fn univariate_gcd(a: &Poly, b: &Poly, v: usize) -> Poly {
    let ring = a.ring();
    let to_dense = |f: &Poly| -> Vec<u32> {
        let mut d = alloc::vec![0u32; f.degree_in(v) as usize + 1];
        for (m, c) in f.terms() {
            d[m.0[v] as usize] = *c;
        }
        d
    };
    let mut x = to_dense(a);
    let mut y = to_dense(b);
    let strip = |d: &mut Vec<u32>| {
        while d.last() == Some(&0) {
            d.pop();
        }
    };
    while !y.is_empty() {
        // x mod y
        let dy = y.len() - 1;
        let inv = ring.inv(y[dy]);
        while x.len() > dy {
            let dx = x.len() - 1;
            let q = ring.mul(x[dx], inv);
            if q != 0 {
                for k in 0..=dy {
                    x[k + dx - dy] = ring.sub(x[k + dx - dy], ring.mul(q, y[k]));
                }
            }
            x.pop();
            strip(&mut x);
        }
        core::mem::swap(&mut x, &mut y);
    }
    let terms = x
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| {
            let mut m = Monomial::one(ring.nvars());
            m.0[v] = k as u32;
            (m, c)
        })
        .collect();
    Poly::from_terms(ring, terms).make_monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcfield::scalar::PolyRing;

    fn ring(p: u32, n: usize) -> PolyRing {
        PolyRing::new(p, n).unwrap()
    }

    #[test]
    fn shared_factor_is_recovered() {
        let r = ring(3, 3);
        let x = Poly::var(r, 0);
        let y = Poly::var(r, 1);
        let z = Poly::var(r, 2);
        let g = x.mul(&y).add(&z).add(&Poly::one(r));
        let a = g.mul(&x.add(&z.scale(2)));
        let b = g.mul(&y.mul(&y).sub(&x));
        assert_eq!(gcd(&a, &b), g.make_monic());
    }

    #[test]
    fn coprime_inputs() {
        let r = ring(2, 2);
        let x = Poly::var(r, 0);
        let y = Poly::var(r, 1);
        let a = x.mul(&x).add(&y);
        let b = x.add(&y).add(&Poly::one(r));
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn frobenius_powers_share_full_gcd() {
        let r = ring(2, 2);
        let x = Poly::var(r, 0);
        let y = Poly::var(r, 1);
        let f = x.add(&y);
        assert_eq!(gcd(&f.pow(4), &f.pow(2).mul(&x)), f.pow(2));
    }

    #[test]
    fn monomial_content() {
        let r = ring(5, 2);
        let x = Poly::var(r, 0);
        let y = Poly::var(r, 1);
        let a = x.pow(3).mul(&y).add(&x.pow(2).mul(&y.pow(2)));
        let b = x.pow(2).mul(&y.pow(3)).scale(3);
        assert_eq!(gcd(&a, &b), x.pow(2).mul(&y));
    }
}
