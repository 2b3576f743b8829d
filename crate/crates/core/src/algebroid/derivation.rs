use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::cotangent::{cotangent_complex, TwoTermComplex};
use crate::error::{Error, Result};
use crate::funcfield::RatFunc;
use crate::tower::{IntermediateField, TriangularPresentation};

/// A `K`-derivation of `F`, given by its values `d_j = D(u_j)` on the presentation generators.
#[derive(Clone, Debug)]
pub struct Derivation {
    pres: Arc<TriangularPresentation>,
    values: Vec<RatFunc>,
}

impl PartialEq for Derivation {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.pres, &other.pres) && self.values == other.values
    }
}

impl Derivation {
    /// Checks `J d = 0`, the condition for the values to extend to a derivation.
    pub fn new(pres: &Arc<TriangularPresentation>, values: Vec<RatFunc>) -> Result<Self> {
        if values.len() != pres.len() {
            return Err(Error::DimensionMismatch { expected: pres.len(), found: values.len() });
        }
        let d = Derivation { pres: pres.clone(), values };
        if !d.satisfies_jacobian() {
            return Err(Error::NotADerivation);
        }
        Ok(d)
    }

    pub(crate) fn new_unchecked(pres: &Arc<TriangularPresentation>, values: Vec<RatFunc>) -> Self {
        Derivation { pres: pres.clone(), values }
    }

    pub fn zero(pres: &Arc<TriangularPresentation>) -> Self {
        let z = pres.field().ambient().zero();
        Derivation { pres: pres.clone(), values: alloc::vec![z; pres.len()] }
    }

    pub fn presentation(&self) -> &Arc<TriangularPresentation> {
        &self.pres
    }

    pub fn values(&self) -> &[RatFunc] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn satisfies_jacobian(&self) -> bool {
        let ring = self.pres.field().ambient().ring();
        let j = cotangent_complex(&self.pres).jacobian;
        (0..j.nrows()).all(|i| {
            let parts: Vec<RatFunc> = (0..j.ncols()).map(|k| j.get(i, k).mul(&self.values[k])).collect();
            crate::funcfield::sum(ring, parts.iter()).is_zero()
        })
    }

    fn check_same(&self, other: &Derivation) -> Result<()> {
        if Arc::ptr_eq(&self.pres, &other.pres) {
            Ok(())
        } else {
            Err(Error::PresentationMismatch)
        }
    }

    /// `D(f) = sum_j d_j ∂f/∂u_j`.
    pub fn apply(&self, f: &RatFunc) -> Result<RatFunc> {
        let ring = self.pres.field().ambient().ring();
        let partials = self.pres.partials(f)?;
        let parts: Vec<RatFunc> = partials
            .iter()
            .zip(&self.values)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| a.mul(b))
            .collect();
        Ok(crate::funcfield::sum(ring, parts.iter()))
    }

    pub fn add(&self, other: &Derivation) -> Result<Derivation> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a.add(b)).collect();
        Ok(Derivation { pres: self.pres.clone(), values })
    }

    pub fn sub(&self, other: &Derivation) -> Result<Derivation> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a.sub(b)).collect();
        Ok(Derivation { pres: self.pres.clone(), values })
    }

    /// `phi * D` for `phi ∈ F`.
    pub fn scale(&self, phi: &RatFunc) -> Derivation {
        Derivation { pres: self.pres.clone(), values: self.values.iter().map(|v| v.mul(phi)).collect() }
    }

    /// `[D_1, D_2](u_j) = D_1(D_2(u_j)) - D_2(D_1(u_j))`.
    pub fn bracket(&self, other: &Derivation) -> Result<Derivation> {
        self.check_same(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(d1, d2)| Ok(self.apply(d2)?.sub(&other.apply(d1)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Derivation { pres: self.pres.clone(), values })
    }

    /// `D^{[p]} = D∘...∘D` (`p` times), evaluated on the generators.
    pub fn p_power(&self) -> Result<Derivation> {
        let p = self.pres.field().ambient().p();
        let values = self
            .pres
            .gens()
            .iter()
            .map(|u| {
                let mut v = u.clone();
                for _ in 0..p {
                    if v.is_zero() {
                        break;
                    }
                    v = self.apply(&v)?;
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Derivation { pres: self.pres.clone(), values })
    }
}

/// `Der_K(F)` as the right kernel of the Jacobian.
#[derive(Clone, Debug)]
pub struct DerivationModule {
    pres: Arc<TriangularPresentation>,
    complex: TwoTermComplex,
    basis: Vec<Derivation>,
}

impl DerivationModule {
    pub fn new(pres: &Arc<TriangularPresentation>) -> Self {
        let ring = pres.field().ambient().ring();
        let complex = cotangent_complex(pres);
        let basis = complex
            .jacobian
            .right_kernel(ring)
            .into_iter()
            .map(|v| Derivation::new_unchecked(pres, v))
            .collect();
        DerivationModule { pres: pres.clone(), complex, basis }
    }

    pub fn presentation(&self) -> &Arc<TriangularPresentation> {
        &self.pres
    }

    pub fn complex(&self) -> &TwoTermComplex {
        &self.complex
    }

    pub fn basis(&self) -> &[Derivation] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `d` on the (reduced echelon) basis.
    pub fn coordinates(&self, d: &Derivation) -> Vec<RatFunc> {
        self.basis
            .iter()
            .map(|b| {
                let pivot = b.values.iter().position(|x| !x.is_zero()).unwrap();
                d.values[pivot].clone()
            })
            .collect()
    }
}

/// `Der_K(F)` with the default presentation of `F/K`.
pub fn derivation_module(field: &IntermediateField, base: &IntermediateField) -> Result<DerivationModule> {
    let pres = Arc::new(TriangularPresentation::new(field, base, None)?);
    Ok(DerivationModule::new(&pres))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::AmbientField;

    fn plane(p: u32) -> (Arc<AmbientField>, Arc<TriangularPresentation>) {
        let a = AmbientField::standard(p, 2, 1).unwrap();
        let f = IntermediateField::full(&a);
        let k = IntermediateField::base(&a);
        let pres = TriangularPresentation::new(&f, &k, Some(&[a.var(0), a.var(1)])).unwrap();
        (a, Arc::new(pres))
    }

    #[test]
    fn module_dimensions() {
        let (_, pres) = plane(2);
        assert_eq!(DerivationModule::new(&pres).dim(), 2);
        let a = AmbientField::standard(3, 2, 2).unwrap();
        let (x, y) = (a.var(0), a.var(1));
        let k = IntermediateField::closure(&a, &[x.pow(3), y.pow(3).add(&x)]);
        let f = IntermediateField::full(&a);
        let m = derivation_module(&f, &k).unwrap();
        assert_eq!(m.dim(), 1);
        let pres = Arc::new(TriangularPresentation::new(&f, &k, Some(&[x, y])).unwrap());
        let m = DerivationModule::new(&pres);
        assert_eq!(m.dim(), 1);
        assert!(m.basis()[0].values()[0].is_zero());
        assert_eq!(derivation_module(&f, &f).unwrap().dim(), 0);
    }

    #[test]
    fn application_examples() {
        let (a, pres) = plane(2);
        let (x, y) = (a.var(0), a.var(1));
        let dy = Derivation::new(&pres, alloc::vec![a.zero(), a.one()]).unwrap();
        assert!(dy.apply(&x.mul(&y.pow(2))).unwrap().is_zero());
        assert_eq!(dy.apply(&x.div(&y).unwrap()).unwrap(), x.div(&y.pow(2)).unwrap());
        assert!(dy.apply(&x.pow(2).add(&y.pow(2))).unwrap().is_zero());
    }

    #[test]
    fn bracket_and_p_power_examples() {
        let (a, pres) = plane(2);
        let x = a.var(0);
        let dx = Derivation::new(&pres, alloc::vec![a.one(), a.zero()]).unwrap();
        let dy = Derivation::new(&pres, alloc::vec![a.zero(), a.one()]).unwrap();
        let xdy = dy.scale(&x);
        assert_eq!(dx.bracket(&xdy).unwrap(), dy);
        assert!(dx.bracket(&dx).unwrap().is_zero());
        assert!(dx.p_power().unwrap().is_zero());
        assert!(xdy.p_power().unwrap().is_zero());
        let xdx = dx.scale(&x);
        assert_eq!(xdx.p_power().unwrap(), xdx);
    }

    #[test]
    fn euler_operator_is_p_idempotent() {
        for p in [3u32, 5] {
            let a = AmbientField::standard(p, 1, 2).unwrap();
            let f = IntermediateField::full(&a);
            let k = IntermediateField::base(&a);
            let pres = Arc::new(TriangularPresentation::new(&f, &k, None).unwrap());
            let xdx = Derivation::new(&pres, alloc::vec![a.var(0)]).unwrap();
            assert_eq!(xdx.p_power().unwrap(), xdx);
        }
    }

    #[test]
    fn rejects_non_derivations() {
        let a = AmbientField::standard(3, 2, 2).unwrap();
        let (x, y) = (a.var(0), a.var(1));
        let k = IntermediateField::closure(&a, &[x.pow(3), y.pow(3).add(&x)]);
        let f = IntermediateField::full(&a);
        let pres = Arc::new(TriangularPresentation::new(&f, &k, Some(&[x, y])).unwrap());
        assert_eq!(Derivation::new(&pres, alloc::vec![a.one(), a.zero()]), Err(Error::NotADerivation));
    }
}
