use alloc::sync::Arc;
use alloc::vec::Vec;

use super::derivation::{Derivation, DerivationModule};
use crate::error::{Error, Result};
use crate::funcfield::RatFunc;
use crate::linalg::{dense_to_sparse, sparse_to_dense, Echelon, Insert, Matrix, SparseVec};
use crate::tower::{IntermediateField, TriangularPresentation};

/// An `F`-subspace `g ⊆ Der_K(F)` with its closure flags. The anchor is the inclusion.
#[derive(Clone, Debug)]
pub struct RestrictedLieAlgebroid {
    pres: Arc<TriangularPresentation>,
    basis: Vec<Derivation>,
    pub bracket_closed: bool,
    pub p_closed: bool,
}

impl PartialEq for RestrictedLieAlgebroid {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.pres, &other.pres) && self.basis == other.basis
    }
}

fn echelonize(pres: &Arc<TriangularPresentation>, ds: &[Derivation]) -> (Echelon, Vec<Derivation>) {
    let ring = pres.field().ambient().ring();
    let mut e = Echelon::new(ring);
    for d in ds {
        e.insert(dense_to_sparse(d.values()));
    }
    let basis = rows_to_derivations(pres, e.rows());
    (e, basis)
}

fn rows_to_derivations(pres: &Arc<TriangularPresentation>, rows: &[SparseVec]) -> Vec<Derivation> {
    let ring = pres.field().ambient().ring();
    rows.iter()
        .map(|r| Derivation::new_unchecked(pres, sparse_to_dense(ring, r, pres.len())))
        .collect()
}

impl RestrictedLieAlgebroid {
    /// `F`-span of `ds` with the closure flags evaluated.
    pub fn span(pres: &Arc<TriangularPresentation>, ds: &[Derivation]) -> Result<Self> {
        for d in ds {
            if !Arc::ptr_eq(d.presentation(), pres) {
                return Err(Error::PresentationMismatch);
            }
        }
        let (e, basis) = echelonize(pres, ds);
        let mut g = RestrictedLieAlgebroid { pres: pres.clone(), basis, bracket_closed: false, p_closed: false };
        let (b, p) = g.closure_flags(&e)?;
        g.bracket_closed = b;
        g.p_closed = p;
        Ok(g)
    }

    fn closure_flags(&self, e: &Echelon) -> Result<(bool, bool)> {
        let mut bracket = true;
        let mut p = true;
        for (i, d1) in self.basis.iter().enumerate() {
            for d2 in &self.basis[i + 1..] {
                if !e.contains(&dense_to_sparse(d1.bracket(d2)?.values())) {
                    bracket = false;
                }
            }
            if !e.contains(&dense_to_sparse(d1.p_power()?.values())) {
                p = false;
            }
        }
        Ok((bracket, p))
    }

    pub fn presentation(&self) -> &Arc<TriangularPresentation> {
        &self.pres
    }

    pub fn basis(&self) -> &[Derivation] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, d: &Derivation) -> bool {
        let (e, _) = echelonize(&self.pres, &self.basis);
        e.contains(&dense_to_sparse(d.values()))
    }

    pub fn is_subalgebroid_of(&self, other: &RestrictedLieAlgebroid) -> bool {
        let (e, _) = echelonize(&other.pres, &other.basis);
        self.basis.iter().all(|d| e.contains(&dense_to_sparse(d.values())))
    }
}

/// Smallest `F`-subspace containing `seed`, closed under bracket and `p`-th power.
pub fn restricted_closure(pres: &Arc<TriangularPresentation>, seed: &[Derivation]) -> Result<RestrictedLieAlgebroid> {
    for d in seed {
        if !Arc::ptr_eq(d.presentation(), pres) {
            return Err(Error::PresentationMismatch);
        }
    }
    let (mut e, mut basis) = echelonize(pres, seed);
    loop {
        let before = e.rank();
        let mut extra = Vec::new();
        for (i, d1) in basis.iter().enumerate() {
            for d2 in &basis[i + 1..] {
                extra.push(d1.bracket(d2)?);
            }
            extra.push(d1.p_power()?);
        }
        for d in extra {
            e.insert(dense_to_sparse(d.values()));
        }
        basis = rows_to_derivations(pres, e.rows());
        if e.rank() == before {
            break;
        }
    }
    Ok(RestrictedLieAlgebroid { pres: pres.clone(), basis, bracket_closed: true, p_closed: true })
}

/// `F^g`: common kernel of the basis derivations, as `B`-linear maps on `F`.
pub fn fixed_field(g: &RestrictedLieAlgebroid) -> Result<IntermediateField> {
    let field = g.pres.field();
    let amb = field.ambient();
    let ring = amb.ring();
    let width = amb.dim() as u32;
    let mut e = Echelon::tracked(ring);
    let mut kernel: Vec<RatFunc> = Vec::new();
    for f in field.elements() {
        let mut row: SparseVec = Vec::new();
        for (k, d) in g.basis.iter().enumerate() {
            let image = d.apply(f)?;
            row.extend(amb.coords(&image).into_iter().map(|(i, c)| (i + k as u32 * width, c)));
        }
        if let Insert::Dependent(Some(rel)) = e.insert(row) {
            let parts: Vec<RatFunc> = rel
                .iter()
                .map(|(i, c)| amb.lift_scalar(c).mul(&field.elements()[*i as usize]))
                .collect();
            kernel.push(crate::funcfield::sum(ring, parts.iter()));
        }
    }
    Ok(IntermediateField::from_basis(amb, &kernel))
}

/// `Der_E(F) ⊆ Der_K(F)`: derivations killing every generator of `E`.
pub fn derivations_vanishing_on(e: &IntermediateField, module: &DerivationModule) -> Result<RestrictedLieAlgebroid> {
    let pres = module.presentation();
    if !pres.field().contains_field(e) || !e.contains_field(pres.base()) {
        return Err(Error::NotATower);
    }
    let ring = pres.field().ambient().ring();
    let gens: Vec<&RatFunc> = e.generators().iter().filter(|g| !pres.base().contains(g)).collect();
    let mut rows = Vec::with_capacity(gens.len());
    for g in &gens {
        let row = module.basis().iter().map(|d| d.apply(g)).collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    let m = Matrix::from_rows(ring, module.dim(), &rows);
    let ds: Vec<Derivation> = if gens.is_empty() {
        module.basis().to_vec()
    } else {
        m.right_kernel(ring)
            .into_iter()
            .map(|c| {
                let values = (0..pres.len())
                    .map(|j| {
                        let parts: Vec<RatFunc> =
                            c.iter().zip(module.basis()).map(|(ck, d)| ck.mul(&d.values()[j])).collect();
                        crate::funcfield::sum(ring, parts.iter())
                    })
                    .collect();
                Derivation::new_unchecked(pres, values)
            })
            .collect()
    };
    RestrictedLieAlgebroid::span(pres, &ds)
}
