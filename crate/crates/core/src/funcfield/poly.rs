//! Sparse multivariate polynomials over `F_p`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use smallvec::SmallVec;

use super::scalar::PolyRing;

/// Exponent vector. Ordered by graded lexicographic order with `x_1 > ... > x_N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_slice(e: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(e))
    }

    #[inline]
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(self.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn scale(&self, k: u64) -> Monomial {
        Monomial(self.0.iter().map(|&e| (e as u64 * k) as u32).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with terms sorted by descending graded-lex order and no zero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: PolyRing,
    terms: Vec<(Monomial, u32)>,
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.terms.iter();
        let mut b = other.terms.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => {
                    let o = ma.cmp(mb).then(ca.cmp(cb));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
            }
        }
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Poly {
    pub fn zero(ring: PolyRing) -> Self {
        Poly { ring, terms: Vec::new() }
    }

    pub fn constant(ring: PolyRing, c: i64) -> Self {
        let c = ring.reduce(c);
        if c == 0 {
            Self::zero(ring)
        } else {
            Poly { ring, terms: alloc::vec![(Monomial::one(ring.nvars()), c)] }
        }
    }

    pub fn one(ring: PolyRing) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: PolyRing, i: usize) -> Self {
        Poly { ring, terms: alloc::vec![(Monomial::var(ring.nvars(), i), 1)] }
    }

    pub fn monomial(ring: PolyRing, m: Monomial, c: u32) -> Self {
        let c = c % ring.p();
        if c == 0 {
            Self::zero(ring)
        } else {
            Poly { ring, terms: alloc::vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms (combines duplicates, drops zeros).
    pub fn from_terms(ring: PolyRing, mut terms: Vec<(Monomial, u32)>) -> Self {
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % ring.p();
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = ring.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        Poly { ring, terms: out }
    }

    #[inline]
    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1 == 1 && self.terms[0].0.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> u32 {
        self.terms.first().map(|t| t.1).unwrap_or(0)
    }

    pub fn constant_value(&self) -> Option<u32> {
        match self.terms.len() {
            0 => Some(0),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.0[var]).max().unwrap_or(0)
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<bool> {
        let mut used = alloc::vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for (u, &e) in used.iter_mut().zip(m.0.iter()) {
                *u |= e > 0;
            }
        }
        used
    }

    /// Componentwise minimum exponent over all terms.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::one(self.ring.nvars());
        };
        it.fold(first.clone(), |acc, (m, _)| acc.gcd(m))
    }

    pub fn neg(&self) -> Poly {
        let r = self.ring;
        Poly { ring: r, terms: self.terms.iter().map(|(m, c)| (m.clone(), r.neg(*c))).collect() }
    }

    pub fn scale(&self, k: u32) -> Poly {
        let k = k % self.ring.p();
        if k == 0 {
            return Poly::zero(self.ring);
        }
        let r = self.ring;
        Poly { ring: r, terms: self.terms.iter().map(|(m, c)| (m.clone(), r.mul(*c, k))).collect() }
    }

    pub fn make_monic(&self) -> Poly {
        match self.leading_coeff() {
            0 | 1 => self.clone(),
            lc => self.scale(self.ring.inv(lc)),
        }
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let r = self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            let cb = if negate { r.neg(*cb) } else { *cb };
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), *ca));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = r.add(*ca, cb);
                    if c != 0 {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (m, c) in &other.terms[j..] {
            out.push((m.clone(), if negate { r.neg(*c) } else { *c }));
        }
        Poly { ring: r, terms: out }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    pub fn mul_term(&self, m: &Monomial, c: u32) -> Poly {
        let r = self.ring;
        if c % r.p() == 0 {
            return Poly::zero(r);
        }
        Poly { ring: r, terms: self.terms.iter().map(|(tm, tc)| (tm.mul(m), r.mul(*tc, c))).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.ring);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, self.terms[0].1);
        }
        let r = self.ring;
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                prods.push((ma.mul(mb), r.mul(*ca, *cb)));
            }
        }
        Poly::from_terms(r, prods)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `f^(p^k)`. Exponents scale and coefficients are fixed by Frobenius on `F_p`.
    pub fn frobenius(&self, k: u32) -> Poly {
        let q = (self.ring.p() as u64).pow(k);
        Poly { ring: self.ring, terms: self.terms.iter().map(|(m, c)| (m.scale(q), *c)).collect() }
    }

    /// Substitutes `x_j -> x_j^{q_j}`. Preserves term order.
    pub fn inflate(&self, q: &[u64]) -> Poly {
        let terms: Vec<(Monomial, u32)> = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial(m.0.iter().zip(q).map(|(&e, &qj)| (e as u64 * qj) as u32).collect()), *c))
            .collect();
        Poly::with_order_of(self.ring, terms, q)
    }

    /// Uniform scaling keeps graded-lex order; anything else needs a re-sort.
    fn with_order_of(ring: PolyRing, terms: Vec<(Monomial, u32)>, q: &[u64]) -> Poly {
        if q.windows(2).all(|w| w[0] == w[1]) {
            Poly { ring, terms }
        } else {
            Poly::from_terms(ring, terms)
        }
    }

    /// Inverse of [`Poly::inflate`] when every exponent of `x_j` is divisible by `q_j`.
    pub fn deflate(&self, q: &[u64]) -> Option<Poly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = SmallVec::new();
            for (&x, &qj) in m.0.iter().zip(q) {
                if x as u64 % qj != 0 {
                    return None;
                }
                e.push((x as u64 / qj) as u32);
            }
            terms.push((Monomial(e), *c));
        }
        Some(Poly::with_order_of(self.ring, terms, q))
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let r = self.ring;
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let k = r.mul(*c, e % r.p());
            if k == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[var] -= 1;
            terms.push((m2, k));
        }
        // differentiation preserves relative grlex order only up to re-sorting
        Poly::from_terms(r, terms)
    }

    /// Division with remainder by `d` (graded-lex multivariate division).
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let r = self.ring;
        let (lm, lc) = d.terms[0].clone();
        let lc_inv = r.inv(lc);
        let mut rem_terms = Vec::new();
        let mut q_terms = Vec::new();
        let mut cur = self.clone();
        while let Some((m, c)) = cur.terms.first().cloned() {
            if lm.divides(&m) {
                let qm = lm.quotient_of(&m);
                let qc = r.mul(c, lc_inv);
                cur = cur.sub(&d.mul_term(&qm, qc));
                q_terms.push((qm, qc));
            } else {
                rem_terms.push(cur.terms.remove(0));
            }
        }
        (Poly::from_terms(r, q_terms), Poly { ring: r, terms: rem_terms })
    }

    /// Exact division; returns `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.constant_value() {
            return Some(self.scale(self.ring.inv(c)));
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let inv = self.ring.inv(*dc);
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                terms.push((dm.quotient_of(m), self.ring.mul(*c, inv)));
            }
            return Some(Poly { ring: self.ring, terms });
        }
        let (q, rem) = self.div_rem(d);
        if rem.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Coefficients with respect to `var`: index `k` holds the coefficient of `var^k`
    /// (a polynomial free of `var`).
    pub fn coefficients_in(&self, var: usize) -> Vec<Poly> {
        let deg = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Monomial, u32)>> = alloc::vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[var] as usize;
            let mut m2 = m.clone();
            m2.0[var] = 0;
            buckets[k].push((m2, *c));
        }
        // removing one variable keeps the remaining grlex order of the bucket only
        // up to degree shifts, so re-sort
        buckets.into_iter().map(|t| Poly::from_terms(self.ring, t)).collect()
    }

    /// Inverse of [`Poly::coefficients_in`].
    pub fn from_coefficients(ring: PolyRing, var: usize, coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let mut m2 = m.clone();
                m2.0[var] += k as u32;
                terms.push((m2, *v));
            }
        }
        Poly::from_terms(ring, terms)
    }
}
