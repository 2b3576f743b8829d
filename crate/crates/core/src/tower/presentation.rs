use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use spin::Mutex;

use super::field::IntermediateField;
use crate::error::{Error, Result};
use crate::funcfield::RatFunc;
use crate::linalg::{Echelon, Insert, SparseVec};

/// Polynomial in the presentation variables `X_1..X_n` with coefficients in `K`.
pub type KPoly = Vec<(Vec<u32>, RatFunc)>;

/// `F = K(u_1, ..., u_n)` with `u_i^{p^{e_i}} = c_i(u_1, ..., u_{i-1})`, each `e_i` minimal.
///
/// The monomials `u^a`, `a_i < p^{e_i}`, form a `K`-basis of `F`; expressing an element in
/// that basis is the workhorse behind every derivation evaluation, so partial derivatives
/// with respect to the `u_j` are memoized.
pub struct TriangularPresentation {
    field: IntermediateField,
    base: IntermediateField,
    gens: Vec<RatFunc>,
    exps: Vec<u32>,
    tails: Vec<KPoly>,
    monomials: Vec<Vec<u32>>,
    // column l + a * base_dim of the tracked echelon is kappa_l * u^a
    echelon: Echelon,
    ambient_vars: Option<Vec<usize>>,
    partials: Mutex<BTreeMap<RatFunc, Arc<Vec<RatFunc>>>>,
}

impl core::fmt::Debug for TriangularPresentation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("TriangularPresentation")
            .field("gens", &self.gens)
            .field("exps", &self.exps)
            .field("tails", &self.tails)
            .finish()
    }
}

impl TriangularPresentation {
    /// Presentation of `field` over `base`. Without explicit generators a greedy minimal
    /// generating list is used. Generators that are redundant given the earlier ones are dropped.
    pub fn new(field: &IntermediateField, base: &IntermediateField, gens: Option<&[RatFunc]>) -> Result<Self> {
        if !field.contains_field(base) {
            return Err(Error::NotASubfield("K is not contained in F"));
        }
        let gens: Vec<RatFunc> = match gens {
            Some(g) => {
                if g.iter().any(|u| !field.contains(u)) {
                    return Err(Error::NotInField);
                }
                g.to_vec()
            }
            None => minimal_generators(field, base)?,
        };
        let amb = field.ambient().clone();
        let ring = amb.ring();
        let p = amb.p() as u64;
        let kdim = base.dim_over_base();
        let mut echelon = Echelon::tracked(ring);
        let mut monomials: Vec<Vec<u32>> = alloc::vec![Vec::new()];
        let mut powers: Vec<RatFunc> = alloc::vec![amb.one()];
        for kappa in base.elements() {
            echelon.insert(amb.coords(kappa));
        }
        let mut kept: Vec<RatFunc> = Vec::new();
        let mut exps = Vec::new();
        let mut tails: Vec<Vec<(Vec<u32>, RatFunc)>> = Vec::new();
        for u in &gens {
            let mut e = 0u32;
            let mut pw = u.clone();
            while !echelon.contains(&amb.coords(&pw)) {
                pw = pw.frobenius(1);
                e += 1;
            }
            if e == 0 {
                continue;
            }
            let tail = express_with(&echelon, &amb, base, &monomials, &pw).expect("power lies in the previous stage");
            kept.push(u.clone());
            exps.push(e);
            tails.push(tail);
            let q = p.pow(e);
            let prev = monomials.len();
            let mut upow = amb.one();
            for k in 1..q {
                upow = upow.mul(u);
                for idx in 0..prev {
                    let mut a = monomials[idx].clone();
                    a.push(k as u32);
                    let val = powers[idx].mul(&upow);
                    for kappa in base.elements() {
                        let r = echelon.insert(amb.coords(&val.mul(kappa)));
                        debug_assert_eq!(r, Insert::Independent);
                    }
                    monomials.push(a);
                    powers.push(val);
                }
            }
            for a in monomials.iter_mut() {
                a.resize(kept.len(), 0);
            }
        }
        let n = kept.len();
        for a in monomials.iter_mut() {
            a.resize(n, 0);
        }
        for t in tails.iter_mut() {
            for (a, _) in t.iter_mut() {
                a.resize(n, 0);
            }
        }
        if monomials.len() * kdim != field.dim_over_base() {
            return Err(Error::GeneratorsInsufficient);
        }
        let ambient_vars = if base.is_base() {
            kept.iter()
                .map(|u| (0..amb.nvars()).find(|&j| *u == amb.var(j)))
                .collect::<Option<Vec<usize>>>()
        } else {
            None
        };
        Ok(TriangularPresentation {
            field: field.clone(),
            base: base.clone(),
            gens: kept,
            exps,
            tails,
            monomials,
            echelon,
            ambient_vars,
            partials: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn field(&self) -> &IntermediateField {
        &self.field
    }

    pub fn base(&self) -> &IntermediateField {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gens(&self) -> &[RatFunc] {
        &self.gens
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// `c_i` as a polynomial in `X_1..X_{i-1}` (exponent vectors have full length `n`).
    pub fn tail(&self, i: usize) -> &KPoly {
        &self.tails[i]
    }

    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }

    /// `[F : K] = prod p^{e_i}`.
    pub fn degree(&self) -> u64 {
        self.monomials.len() as u64
    }

    pub fn eval_monomial(&self, a: &[u32]) -> RatFunc {
        let amb = self.field.ambient();
        let mut out = amb.one();
        for (u, &k) in self.gens.iter().zip(a) {
            if k > 0 {
                out = out.mul(&u.pow(k as u64));
            }
        }
        out
    }

    pub fn eval(&self, poly: &KPoly) -> RatFunc {
        let ring = self.field.ambient().ring();
        let parts: Vec<RatFunc> = poly.iter().map(|(a, c)| c.mul(&self.eval_monomial(a))).collect();
        crate::funcfield::sum(ring, parts.iter())
    }

    /// `v = sum_a lambda_a u^a` with `lambda_a ∈ K`; only nonzero terms.
    pub fn express_in_basis(&self, v: &RatFunc) -> Result<KPoly> {
        express_with(&self.echelon, self.field.ambient(), &self.base, &self.monomials, v).ok_or(Error::NotInField)
    }

    /// `(∂v/∂u_1, ..., ∂v/∂u_n)`, computed from the basis expansion of `v`.
    pub fn partials(&self, v: &RatFunc) -> Result<Arc<Vec<RatFunc>>> {
        if let Some(hit) = self.partials.lock().get(v) {
            return Ok(hit.clone());
        }
        let out = Arc::new(match &self.ambient_vars {
            Some(vars) => {
                if !self.field.contains(v) {
                    return Err(Error::NotInField);
                }
                vars.iter().map(|&j| v.partial_derivative(j)).collect()
            }
            None => {
                let expansion = self.express_in_basis(v)?;
                self.partials_of_poly(&expansion)
            }
        });
        self.partials.lock().insert(v.clone(), out.clone());
        Ok(out)
    }

    /// Derivatives of a `K`-polynomial in the `X_j`, evaluated at `u`.
    pub fn partials_of_poly(&self, poly: &KPoly) -> Vec<RatFunc> {
        let amb = self.field.ambient();
        let ring = amb.ring();
        (0..self.len())
            .map(|j| {
                let parts: Vec<RatFunc> = poly
                    .iter()
                    .filter(|(a, _)| a[j] % amb.p() != 0)
                    .map(|(a, c)| {
                        let mut b = a.clone();
                        b[j] -= 1;
                        c.scale(a[j]).mul(&self.eval_monomial(&b))
                    })
                    .collect();
                crate::funcfield::sum(ring, parts.iter())
            })
            .collect()
    }

    /// Whether partial derivatives reduce to ambient partial derivatives.
    pub fn uses_ambient_partials(&self) -> bool {
        self.ambient_vars.is_some()
    }

    /// General basis-expansion path, bypassing any shortcut (for cross-checks).
    pub fn partials_by_expansion(&self, v: &RatFunc) -> Result<Vec<RatFunc>> {
        Ok(self.partials_of_poly(&self.express_in_basis(v)?))
    }
}

fn express_with(
    echelon: &Echelon,
    amb: &super::AmbientField,
    base: &IntermediateField,
    monomials: &[Vec<u32>],
    v: &RatFunc,
) -> Option<KPoly> {
    let ring = amb.ring();
    let kdim = base.dim_over_base();
    let coeffs: SparseVec = echelon.express(&amb.coords(v))?;
    let mut grouped: BTreeMap<usize, Vec<RatFunc>> = BTreeMap::new();
    for (idx, c) in coeffs {
        let (a, l) = (idx as usize / kdim, idx as usize % kdim);
        grouped.entry(a).or_default().push(amb.lift_scalar(&c).mul(&base.elements()[l]));
    }
    let mut out = Vec::new();
    for (a, parts) in grouped {
        let lambda = crate::funcfield::sum(ring, parts.iter());
        if !lambda.is_zero() {
            out.push((monomials[a].clone(), lambda));
        }
    }
    Some(out)
}

/// Greedy minimal generating list of `F` over `K`: starting from `K F^p`, adjoin the
/// smallest (graded-lex) candidate not yet reached until `F` is reached.
pub fn minimal_generators(field: &IntermediateField, base: &IntermediateField) -> Result<Vec<RatFunc>> {
    if !field.contains_field(base) {
        return Err(Error::NotASubfield("K is not contained in F"));
    }
    let frob: Vec<RatFunc> = field.generators().iter().map(|g| g.frobenius(1)).collect();
    let mut cur = base.adjoin(&frob);
    let mut candidates: Vec<&RatFunc> = field
        .generators()
        .iter()
        .chain(field.elements().iter())
        .filter(|c| !base.contains(c))
        .collect();
    candidates.sort();
    candidates.dedup();
    let mut out = Vec::new();
    for c in candidates {
        if cur.dim_over_base() == field.dim_over_base() {
            break;
        }
        if !cur.contains(c) {
            cur = cur.adjoin(core::slice::from_ref(c));
            out.push(c.clone());
        }
    }
    Ok(out)
}
