use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::complex::{cotangent_complex, homology, Homology, TwoTermComplex};
use crate::error::{Error, Result};
use crate::funcfield::{PolyRing, RatFunc};
use crate::linalg::Matrix;
use crate::tower::{IntermediateField, TriangularPresentation};

/// Chain map between two-term complexes, acting on row vectors:
/// degree-one class `a` goes to `a * deg1`, degree-zero vector `w` to `w * deg0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexMap {
    pub deg1: Matrix,
    pub deg0: Matrix,
}

impl ComplexMap {
    /// `J_source * deg0 = deg1 * J_target`.
    pub fn commutes(&self, ring: PolyRing, source: &TwoTermComplex, target: &TwoTermComplex) -> bool {
        source.jacobian.mul(ring, &self.deg0) == self.deg1.mul(ring, &target.jacobian)
    }

    /// Induced map on `π₁`, rows indexed by the source basis.
    pub fn on_pi1(&self, ring: PolyRing, source: &Homology, target: &Homology) -> Matrix {
        let rows: Vec<Vec<RatFunc>> = source
            .pi1_basis
            .iter()
            .map(|a| target.pi1_coords(&self.deg1.apply_row(ring, a)))
            .collect();
        Matrix::from_rows(ring, target.pi1_dim, &rows)
    }

    /// Induced map on `π₀`, rows indexed by the source basis.
    pub fn on_pi0(&self, ring: PolyRing, source: &Homology, target: &Homology) -> Matrix {
        let rows: Vec<Vec<RatFunc>> = source
            .pi0_basis
            .iter()
            .map(|&j| target.pi0_coords(&self.deg0.row(j)))
            .collect();
        Matrix::from_rows(ring, target.pi0_dim, &rows)
    }
}

/// Presentations for `K ⊆ E ⊆ F` where the `F/K` generators extend the `E/K` ones.
#[derive(Debug)]
pub struct TowerPresentations {
    pub ek: Arc<TriangularPresentation>,
    pub fe: Arc<TriangularPresentation>,
    pub fk: Arc<TriangularPresentation>,
    pub m: usize,
}

pub fn compatible_presentations(
    field: &IntermediateField,
    mid: &IntermediateField,
    base: &IntermediateField,
) -> Result<TowerPresentations> {
    if !field.contains_field(mid) || !mid.contains_field(base) {
        return Err(Error::NotATower);
    }
    let ek = TriangularPresentation::new(mid, base, None)?;
    let fe = TriangularPresentation::new(field, mid, None)?;
    let mut gens = ek.gens().to_vec();
    gens.extend(fe.gens().iter().cloned());
    let fk = TriangularPresentation::new(field, base, Some(&gens))?;
    if fk.len() != gens.len() {
        return Err(Error::PresentationMismatch);
    }
    Ok(TowerPresentations { m: ek.len(), ek: Arc::new(ek), fe: Arc::new(fe), fk: Arc::new(fk) })
}

#[derive(Debug)]
pub struct TowerMaps {
    pub presentations: TowerPresentations,
    pub ek: TwoTermComplex,
    pub fe: TwoTermComplex,
    pub fk: TwoTermComplex,
    /// `F ⊗_E L_{E/K} -> L_{F/K}`.
    pub inclusion: ComplexMap,
    /// `L_{F/K} -> L_{F/E}`.
    pub projection: ComplexMap,
    /// `J_{F/K} = [[J_E, 0], [B, J_{F/E}]]` exactly.
    pub block_structure: bool,
}

impl TowerMaps {
    /// Lower-left block `B` of `J_{F/K}`.
    pub fn coupling_block(&self, ring: PolyRing) -> Matrix {
        let m = self.presentations.m;
        let n = self.fk.n;
        let mut b = Matrix::zeros(ring, n - m, m);
        for i in m..n {
            for j in 0..m {
                b.set(i - m, j, self.fk.jacobian.get(i, j).clone());
            }
        }
        b
    }
}

pub fn tower_maps(field: &IntermediateField, mid: &IntermediateField, base: &IntermediateField) -> Result<TowerMaps> {
    let ring = field.ambient().ring();
    let presentations = compatible_presentations(field, mid, base)?;
    let ek = cotangent_complex(&presentations.ek);
    let fe = cotangent_complex(&presentations.fe);
    let fk = cotangent_complex(&presentations.fk);
    let m = presentations.m;
    let n = fk.n;
    let r = n - m;
    let mut block_structure = fe.n == r;
    for i in 0..n {
        for j in 0..n {
            let v = fk.jacobian.get(i, j);
            let expected_zero = i < m && j >= m;
            if expected_zero && !v.is_zero() {
                block_structure = false;
            }
            if i < m && j < m && v != ek.jacobian.get(i, j) {
                block_structure = false;
            }
            if block_structure && i >= m && j >= m && v != fe.jacobian.get(i - m, j - m) {
                block_structure = false;
            }
        }
    }
    let mut incl = Matrix::zeros(ring, m, n);
    for i in 0..m {
        incl.set(i, i, RatFunc::one(ring));
    }
    let mut proj = Matrix::zeros(ring, n, r);
    for i in 0..r {
        proj.set(m + i, i, RatFunc::one(ring));
    }
    let inclusion = ComplexMap { deg1: incl.clone(), deg0: incl };
    let projection = ComplexMap { deg1: proj.clone(), deg0: proj };
    if !inclusion.commutes(ring, &ek, &fk) || !projection.commutes(ring, &fk, &fe) {
        return Err(Error::PresentationMismatch);
    }
    Ok(TowerMaps { presentations, ek, fe, fk, inclusion, projection, block_structure })
}

type PolyMap = BTreeMap<Vec<u32>, RatFunc>;

fn add_term(p: &mut PolyMap, a: Vec<u32>, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match p.get_mut(&a) {
        Some(v) => {
            *v = v.add(&c);
            if v.is_zero() {
                p.remove(&a);
            }
        }
        None => {
            p.insert(a, c);
        }
    }
}

fn mul_poly(a: &PolyMap, b: &PolyMap) -> PolyMap {
    let mut out = PolyMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add_term(&mut out, e, ca.mul(cb));
        }
    }
    out
}

fn pow_poly(a: &PolyMap, k: u32, n: usize, ring: PolyRing) -> PolyMap {
    let mut out = PolyMap::new();
    out.insert(alloc::vec![0; n], RatFunc::one(ring));
    for _ in 0..k {
        out = mul_poly(&out, a);
    }
    out
}

/// `a^{p^f}`, termwise since Frobenius is additive.
fn frobenius_poly(a: &PolyMap, f: u32, p: u32) -> PolyMap {
    let q = p.pow(f);
    a.iter()
        .map(|(e, c)| (e.iter().map(|x| x * q).collect(), c.frobenius(f)))
        .collect()
}

/// Writes `g = sum_k h_k P_k + r` by reducing with the monic triangular `P_n, ..., P_1`
/// and returns `(h_1(u), ..., h_n(u))` together with the remainder.
fn triangular_division(pres: &TriangularPresentation, mut g: PolyMap) -> (Vec<RatFunc>, PolyMap) {
    let p = pres.field().ambient().p();
    let n = pres.len();
    let mut h = alloc::vec![RatFunc::zero(pres.field().ambient().ring()); n];
    for k in (0..n).rev() {
        let q = p.pow(pres.exps()[k]);
        let mut quotient = PolyMap::new();
        loop {
            let Some(a) = g.keys().filter(|a| a[k] >= q).max_by_key(|a| a[k]).cloned() else {
                break;
            };
            let c = g.remove(&a).unwrap();
            let mut b = a.clone();
            b[k] -= q;
            for (t, ct) in pres.tail(k) {
                let e: Vec<u32> = b.iter().zip(t).map(|(x, y)| x + y).collect();
                add_term(&mut g, e, c.mul(ct));
            }
            add_term(&mut quotient, b, c);
        }
        let poly: Vec<(Vec<u32>, RatFunc)> = quotient.into_iter().collect();
        h[k] = pres.eval(&poly);
    }
    (h, g)
}

/// `F ⊗_E L_{E/K} -> L_{F/K}` for arbitrary presentations of `E/K` and `F/K` over the same `K`.
///
/// Degree zero sends `dW_l` to `d(w_l)` written in the `dX_j`; degree one sends `[Q_l]` to the
/// class of `Q_l(A(X))` in `I/I^2`, where `A_l(X)` is the basis expansion of `w_l`.
pub fn base_change_map(pe: &TriangularPresentation, pf: &TriangularPresentation) -> Result<ComplexMap> {
    if !pe.base().same_field(pf.base()) || !pf.field().contains_field(pe.field()) {
        return Err(Error::NotATower);
    }
    let amb = pf.field().ambient();
    let ring = amb.ring();
    let p = amb.p();
    let n = pf.len();
    let s = pe.len();
    let mut deg0 = Matrix::zeros(ring, s, n);
    let mut deg1 = Matrix::zeros(ring, s, n);
    let mut lifts: Vec<PolyMap> = Vec::with_capacity(s);
    for (l, w) in pe.gens().iter().enumerate() {
        let expansion = pf.express_in_basis(w)?;
        for (j, v) in pf.partials_of_poly(&expansion).into_iter().enumerate() {
            deg0.set(l, j, v);
        }
        lifts.push(expansion.into_iter().collect());
    }
    for l in 0..s {
        let mut g = frobenius_poly(&lifts[l], pe.exps()[l], p);
        for (b, mu) in pe.tail(l) {
            let mut term = PolyMap::new();
            term.insert(alloc::vec![0; n], mu.clone());
            for (k, &bk) in b.iter().enumerate() {
                if bk > 0 {
                    term = mul_poly(&term, &pow_poly(&lifts[k], bk, n, ring));
                }
            }
            for (e, c) in term {
                add_term(&mut g, e, c.neg());
            }
        }
        let (h, rem) = triangular_division(pf, g);
        if !rem.is_empty() {
            return Err(Error::PresentationMismatch);
        }
        for (j, v) in h.into_iter().enumerate() {
            deg1.set(l, j, v);
        }
    }
    Ok(ComplexMap { deg1, deg0 })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectSumReport {
    pub pi0_parts: Vec<usize>,
    pub pi1_parts: Vec<usize>,
    pub pi0_target: usize,
    pub pi1_target: usize,
    pub pi0_rank: usize,
    pub pi1_rank: usize,
    pub commutes: bool,
    pub isomorphism: bool,
}

/// Whether `⊕_i F ⊗_{E_i} L_{E_i/K} -> L_{F/K}` is an isomorphism on `π₀` and `π₁`.
pub fn direct_sum_compare(
    field: &IntermediateField,
    base: &IntermediateField,
    parts: &[IntermediateField],
) -> Result<DirectSumReport> {
    if !field.contains_field(base) {
        return Err(Error::NotASubfield("K is not contained in F"));
    }
    let ring = field.ambient().ring();
    let pf = TriangularPresentation::new(field, base, None)?;
    let cf = cotangent_complex(&pf);
    let hf = homology(&cf, ring);
    let mut pi0_rows: Vec<Vec<RatFunc>> = Vec::new();
    let mut pi1_rows: Vec<Vec<RatFunc>> = Vec::new();
    let mut pi0_parts = Vec::new();
    let mut pi1_parts = Vec::new();
    let mut commutes = true;
    for e in parts {
        if !field.contains_field(e) || !e.contains_field(base) {
            return Err(Error::NotATower);
        }
        let pe = TriangularPresentation::new(e, base, None)?;
        let ce = cotangent_complex(&pe);
        let he = homology(&ce, ring);
        let map = base_change_map(&pe, &pf)?;
        commutes &= map.commutes(ring, &ce, &cf);
        let m0 = map.on_pi0(ring, &he, &hf);
        let m1 = map.on_pi1(ring, &he, &hf);
        for i in 0..m0.nrows() {
            pi0_rows.push(m0.row(i));
        }
        for i in 0..m1.nrows() {
            pi1_rows.push(m1.row(i));
        }
        pi0_parts.push(he.pi0_dim);
        pi1_parts.push(he.pi1_dim);
    }
    let pi0_rank = Matrix::from_rows(ring, hf.pi0_dim, &pi0_rows).rank(ring);
    let pi1_rank = Matrix::from_rows(ring, hf.pi1_dim, &pi1_rows).rank(ring);
    let iso0 = pi0_rows.len() == hf.pi0_dim && pi0_rank == hf.pi0_dim;
    let iso1 = pi1_rows.len() == hf.pi1_dim && pi1_rank == hf.pi1_dim;
    Ok(DirectSumReport {
        pi0_parts,
        pi1_parts,
        pi0_target: hf.pi0_dim,
        pi1_target: hf.pi1_dim,
        pi0_rank,
        pi1_rank,
        commutes,
        isomorphism: commutes && iso0 && iso1,
    })
}
