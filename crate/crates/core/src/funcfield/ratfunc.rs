//! Normalized rational functions in `F_p(x_1, ..., x_N)`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use super::gcd::gcd;
use super::poly::{Monomial, Poly};
use super::scalar::PolyRing;
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` monic under graded-lex.
/// Zero is `0 / 1`. Equal values have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Ord for RatFunc {
    fn cmp(&self, other: &Self) -> Ordering {
        self.num.cmp(&other.num).then_with(|| self.den.cmp(&other.den))
    }
}

impl PartialOrd for RatFunc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl RatFunc {
    /// Canonical form of `num / den`.
    pub fn normalize(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_nonzero(num, den))
    }

    fn normalize_nonzero(num: Poly, den: Poly) -> Self {
        let ring = num.ring();
        if num.is_zero() {
            return Self::zero(ring);
        }
        if let Some(c) = den.constant_value() {
            if c == 1 {
                return RatFunc { num, den };
            }
            let inv = ring.inv(c);
            return RatFunc { num: num.scale(inv), den: Poly::one(ring) };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let lc = den.leading_coeff();
        if lc == 1 {
            RatFunc { num, den }
        } else {
            let inv = ring.inv(lc);
            RatFunc { num: num.scale(inv), den: den.scale(inv) }
        }
    }

    pub fn zero(ring: PolyRing) -> Self {
        RatFunc { num: Poly::zero(ring), den: Poly::one(ring) }
    }

    pub fn one(ring: PolyRing) -> Self {
        RatFunc { num: Poly::one(ring), den: Poly::one(ring) }
    }

    pub fn constant(ring: PolyRing, c: i64) -> Self {
        RatFunc { num: Poly::constant(ring, c), den: Poly::one(ring) }
    }

    pub fn var(ring: PolyRing, i: usize) -> Self {
        RatFunc { num: Poly::var(ring, i), den: Poly::one(ring) }
    }

    pub fn from_poly(p: Poly) -> Self {
        let ring = p.ring();
        RatFunc { num: p, den: Poly::one(ring) }
    }

    pub fn monomial(ring: PolyRing, exps: &[u32]) -> Self {
        Self::from_poly(Poly::monomial(ring, Monomial::from_slice(exps), 1))
    }

    #[inline]
    pub fn ring(&self) -> PolyRing {
        self.num.ring()
    }

    #[inline]
    pub fn num(&self) -> &Poly {
        &self.num
    }

    #[inline]
    pub fn den(&self) -> &Poly {
        &self.den
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<u32> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn scale(&self, k: u32) -> Self {
        let k = k % self.ring().p();
        if k == 0 {
            return Self::zero(self.ring());
        }
        RatFunc { num: self.num.scale(k), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_signed(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_signed(other, true)
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Self {
        let combine = |a: &Poly, b: &Poly| if negate { a.sub(b) } else { a.add(b) };
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg() } else { other.clone() };
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { num: combine(&self.num, &other.num), den: self.den.clone() };
        }
        if self.den == other.den {
            return Self::normalize_nonzero(combine(&self.num, &other.num), self.den.clone());
        }
        // Henrici: with g = gcd(b, d), only gcd(n, g) can cancel
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            let n = combine(&self.num.mul(&other.den), &other.num.mul(&self.den));
            if n.is_zero() {
                return Self::zero(self.ring());
            }
            return RatFunc { num: n, den: self.den.mul(&other.den) };
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = other.den.div_exact(&g).expect("gcd divides");
        let n = combine(&self.num.mul(&d1), &other.num.mul(&b1));
        if n.is_zero() {
            return Self::zero(self.ring());
        }
        let h = gcd(&n, &g);
        let (n, g) = if h.is_one() {
            (n, g)
        } else {
            (n.div_exact(&h).expect("gcd divides"), g.div_exact(&h).expect("gcd divides"))
        };
        let den = b1.mul(&d1).mul(&g);
        let lc = den.leading_coeff();
        if lc == 1 {
            RatFunc { num: n, den }
        } else {
            let inv = self.ring().inv(lc);
            RatFunc { num: n.scale(inv), den: den.scale(inv) }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ring());
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { num: self.num.mul(&other.num), den: self.den.clone() };
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let div = |a: &Poly, g: &Poly| if g.is_one() { a.clone() } else { a.div_exact(g).expect("gcd divides") };
        let num = div(&self.num, &g1).mul(&div(&other.num, &g2));
        let den = div(&self.den, &g2).mul(&div(&other.den, &g1));
        let lc = den.leading_coeff();
        if lc == 1 {
            RatFunc { num, den }
        } else {
            let inv = self.ring().inv(lc);
            RatFunc { num: num.scale(inv), den: den.scale(inv) }
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lc = self.num.leading_coeff();
        let inv = self.ring().inv(lc);
        Ok(RatFunc { num: self.den.scale(inv), den: self.num.scale(inv) })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: u64) -> Self {
        RatFunc { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// `f^(p^k)`; stays canonical because Frobenius is injective on polynomials.
    pub fn frobenius(&self, k: u32) -> Self {
        RatFunc { num: self.num.frobenius(k), den: self.den.frobenius(k) }
    }

    /// Substitutes `x_j -> x_j^{q_j}`.
    pub fn inflate(&self, q: &[u64]) -> Self {
        RatFunc { num: self.num.inflate(q), den: self.den.inflate(q) }
    }

    pub fn deflate(&self, q: &[u64]) -> Option<Self> {
        Some(RatFunc { num: self.num.deflate(q)?, den: self.den.deflate(q)? })
    }

    /// Formal partial derivative by the quotient rule.
    pub fn partial_derivative(&self, var: usize) -> Self {
        let dn = self.num.derivative(var);
        if self.den.is_one() {
            return RatFunc { num: dn, den: self.den.clone() };
        }
        let dd = self.den.derivative(var);
        let n = dn.mul(&self.den).sub(&self.num.mul(&dd));
        Self::normalize_nonzero(n, self.den.mul(&self.den))
    }

    /// Evaluates at `x_j -> values[j]`.
    pub fn substitute(&self, values: &[RatFunc]) -> Result<Self> {
        let eval = |p: &Poly| -> RatFunc {
            let ring = values[0].ring();
            let mut acc = RatFunc::zero(ring);
            for (m, c) in p.terms() {
                let mut t = RatFunc::constant(ring, *c as i64);
                for (j, &e) in m.0.iter().enumerate() {
                    if e > 0 {
                        t = t.mul(&values[j].pow(e as u64));
                    }
                }
                acc = acc.add(&t);
            }
            acc
        };
        eval(&self.num).div(&eval(&self.den))
    }

    /// Total ordering used for deterministic tie-breaking among candidates.
    pub fn grlex_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
}

/// Sum of an iterator of rational functions.
pub fn sum<'a, I: IntoIterator<Item = &'a RatFunc>>(ring: PolyRing, it: I) -> RatFunc {
    let mut items: Vec<&RatFunc> = it.into_iter().filter(|f| !f.is_zero()).collect();
    match items.len() {
        0 => RatFunc::zero(ring),
        1 => items[0].clone(),
        _ => {
            // polynomials first, so most of the sum avoids fraction arithmetic
            items.sort_by_key(|f| !f.is_polynomial());
            let mut acc = RatFunc::zero(ring);
            let mut poly_acc = Poly::zero(ring);
            for f in items {
                if f.is_polynomial() {
                    poly_acc = poly_acc.add(f.num());
                } else {
                    acc = acc.add(f);
                }
            }
            acc.add(&RatFunc::from_poly(poly_acc))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u32, n: usize) -> PolyRing {
        PolyRing::new(p, n).unwrap()
    }

    #[test]
    fn zero_numerator_normalizes_to_zero() {
        let r = ring(5, 1);
        let x = Poly::var(r, 0);
        let f = RatFunc::normalize(x.mul(&x).sub(&x.mul(&x)), Poly::one(r)).unwrap();
        assert!(f.is_zero());
        assert!(f.den().is_one());
    }

    #[test]
    fn denominator_reducing_to_zero_is_rejected() {
        let r = ring(2, 1);
        let x = Poly::var(r, 0);
        let two = Poly::constant(r, 2);
        assert_eq!(RatFunc::normalize(x.scale(2), two), Err(Error::DivisionByZero));
    }

    #[test]
    fn common_factor_cancels() {
        // p = 2: (x^2 + x) y / (x + 1) = x y
        let r = ring(2, 2);
        let x = Poly::var(r, 0);
        let y = Poly::var(r, 1);
        let num = x.mul(&x).add(&x).mul(&y);
        let den = x.add(&Poly::one(r));
        let f = RatFunc::normalize(num.clone(), den.clone()).unwrap();
        assert_eq!(f, RatFunc::from_poly(x.mul(&y)));
        // cross-multiplication check
        assert_eq!(num.mul(f.den()), f.num().mul(&den));
    }

    #[test]
    fn derivative_examples() {
        let r = ring(2, 2);
        let x = RatFunc::var(r, 0);
        let y = RatFunc::var(r, 1);
        assert!(x.pow(2).partial_derivative(0).is_zero());
        assert_eq!(x.mul(&y).partial_derivative(0), y);
        let inv_x = x.inv().unwrap();
        assert_eq!(inv_x.partial_derivative(0), x.pow(2).inv().unwrap());
    }

    #[test]
    fn denominators_are_monic() {
        let r = ring(7, 1);
        let x = Poly::var(r, 0);
        let f = RatFunc::normalize(Poly::one(r), x.scale(3).add(&Poly::one(r))).unwrap();
        assert_eq!(f.den().leading_coeff(), 1);
        assert_eq!(f.num().constant_value(), Some(5));
    }
}
