use inseparable::algebroid::derivation_module;
use inseparable::funcfield::{descend, gcd, reassemble, Monomial, Poly, PolyRing, RatFunc};
use inseparable::galois::harness::random_pair;
use inseparable::random::{random_element, trial_rng};
use inseparable::tower::{AmbientField, IntermediateField};
use proptest::prelude::*;

const NVARS: usize = 2;

fn poly_strategy(p: u32) -> impl Strategy<Value = Vec<(Vec<u32>, u32)>> {
    prop::collection::vec((prop::collection::vec(0u32..4, NVARS), 1u32..p), 1..5)
}

fn build(ring: PolyRing, terms: &[(Vec<u32>, u32)]) -> Poly {
    Poly::from_terms(ring, terms.iter().map(|(e, c)| (Monomial::from_slice(e), *c)).collect())
}

fn ratfunc(ring: PolyRing, num: &[(Vec<u32>, u32)], den: &[(Vec<u32>, u32)]) -> Option<RatFunc> {
    let d = build(ring, den);
    if d.is_zero() {
        return None;
    }
    RatFunc::normalize(build(ring, num), d).ok()
}

fn prime() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_reduced_and_unique(p in prime(), a in poly_strategy(5), b in poly_strategy(5), c in poly_strategy(5)) {
        let ring = PolyRing::new(p, NVARS).unwrap();
        let (a, b, c) = (build(ring, &a), build(ring, &b), build(ring, &c));
        prop_assume!(!b.is_zero() && !c.is_zero());
        let f = RatFunc::normalize(a.clone(), b.clone()).unwrap();
        prop_assert!(gcd(f.num(), f.den()).is_one());
        let g = RatFunc::normalize(a.mul(&c), b.mul(&c)).unwrap();
        prop_assert_eq!(&f, &g);
        let again = RatFunc::normalize(f.num().clone(), f.den().clone()).unwrap();
        prop_assert_eq!(f, again);
    }

    #[test]
    fn gcd_divides_and_scales(p in prime(), a in poly_strategy(5), b in poly_strategy(5), c in poly_strategy(5)) {
        let ring = PolyRing::new(p, NVARS).unwrap();
        let (a, b, c) = (build(ring, &a), build(ring, &b), build(ring, &c));
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let g = gcd(&a, &b);
        prop_assert!(a.div_exact(&g).is_some());
        prop_assert!(b.div_exact(&g).is_some());
        prop_assert_eq!(gcd(&a.mul(&c), &b.mul(&c)), g.mul(&c).make_monic());
    }

    #[test]
    fn field_axioms(p in prime(), a in poly_strategy(5), b in poly_strategy(5), c in poly_strategy(5), d in poly_strategy(5)) {
        let ring = PolyRing::new(p, NVARS).unwrap();
        let (Some(f), Some(g)) = (ratfunc(ring, &a, &b), ratfunc(ring, &c, &d)) else { return Ok(()) };
        let h = ratfunc(ring, &b, &c).unwrap_or_else(|| RatFunc::one(ring));
        prop_assert_eq!(f.add(&g).mul(&h), f.mul(&h).add(&g.mul(&h)));
        prop_assert_eq!(f.add(&g).sub(&g), f.clone());
        if !f.is_zero() {
            prop_assert!(f.mul(&f.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn frobenius_is_additive(p in prime(), a in poly_strategy(5), b in poly_strategy(5), c in poly_strategy(5)) {
        let ring = PolyRing::new(p, NVARS).unwrap();
        let Some(f) = ratfunc(ring, &a, &b) else { return Ok(()) };
        let g = RatFunc::from_poly(build(ring, &c));
        prop_assert_eq!(f.add(&g).pow(p as u64), f.frobenius(1).add(&g.frobenius(1)));
    }

    #[test]
    fn derivatives_kill_p_powers_and_obey_leibniz(p in prime(), a in poly_strategy(5), b in poly_strategy(5), c in poly_strategy(5)) {
        let ring = PolyRing::new(p, NVARS).unwrap();
        let Some(f) = ratfunc(ring, &a, &b) else { return Ok(()) };
        let g = RatFunc::from_poly(build(ring, &c));
        for v in 0..NVARS {
            prop_assert!(f.pow(p as u64).partial_derivative(v).is_zero());
            let lhs = f.mul(&g).partial_derivative(v);
            let rhs = f.partial_derivative(v).mul(&g).add(&f.mul(&g.partial_derivative(v)));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn descent_round_trips(p in prop::sample::select(vec![2u32, 3]), a in poly_strategy(3), b in poly_strategy(3), e0 in 0u32..3, e1 in 0u32..3) {
        let ring = PolyRing::new(p, NVARS).unwrap();
        let Some(f) = ratfunc(ring, &a, &b) else { return Ok(()) };
        let q = [(p as u64).pow(e0), (p as u64).pow(e1)];
        let d = descend(&f, &q);
        prop_assert!(d.keys().all(|k| (k[0] as u64) < q[0] && (k[1] as u64) < q[1]));
        prop_assert_eq!(reassemble(ring, &q, d.iter()), f);
    }

    #[test]
    fn degrees_multiply_in_towers(seed in any::<u64>(), shape in 0usize..3) {
        let (p, n, e) = [(2, 2, 1), (2, 1, 2), (3, 2, 1)][shape];
        let amb = AmbientField::standard(p, n, e).unwrap();
        let mut rng = trial_rng(seed, 0);
        let (f, k) = random_pair(&mut rng, &amb);
        let mid_gen = random_element(&mut rng, &f, 2);
        let mid = k.adjoin(&[mid_gen.clone()]);
        let fk = f.degree_over(&k).unwrap();
        prop_assert_eq!(fk, f.degree_over(&mid).unwrap() * mid.degree_over(&k).unwrap());
        // [K(α):K] = p^k, k least with α^{p^k} ∈ K
        let k_exp = k.element_exponent(&mid_gen);
        prop_assert!(k.contains(&mid_gen.frobenius(k_exp)));
        prop_assert_eq!(mid.degree_over(&k).unwrap(), (p as u64).pow(k_exp));
    }

    #[test]
    fn basis_derivations_are_derivations(seed in any::<u64>(), shape in 0usize..3) {
        let (p, n, e) = [(2, 2, 1), (2, 1, 2), (3, 2, 1)][shape];
        let amb = AmbientField::standard(p, n, e).unwrap();
        let mut rng = trial_rng(seed, 0);
        let (f, k) = random_pair(&mut rng, &amb);
        let m = derivation_module(&f, &k).unwrap();
        let a = random_element(&mut rng, &f, 3);
        let b = random_element(&mut rng, &f, 3);
        let kappa = random_element(&mut rng, &k, 2);
        for d in m.basis() {
            let lhs = d.apply(&a.mul(&b)).unwrap();
            let rhs = a.mul(&d.apply(&b).unwrap()).add(&b.mul(&d.apply(&a).unwrap()));
            prop_assert_eq!(lhs, rhs);
            prop_assert!(d.apply(&kappa).unwrap().is_zero());
        }
        prop_assert!(IntermediateField::full(&amb).contains_field(&f));
    }
}
