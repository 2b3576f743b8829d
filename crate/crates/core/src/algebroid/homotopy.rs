use super::derivation::DerivationModule;
use super::lie::derivations_vanishing_on;
use crate::cotangent::cartier_check;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::tower::IntermediateField;

/// Homotopy groups of the algebroid attached to `K ⊆ E ⊆ F`, with the dual convention
/// `π₁(L^∨[1]) = (π₀ L)^∨` and `π₀(L^∨[1]) = (π₁ L)^∨`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebroidHomotopyData {
    /// `dim Ω¹_{F/E}`.
    pub pi1_dim: usize,
    /// `dim Υ_{F/E}`.
    pub pi0_dim: usize,
    /// `Der_E(F) -> Der_K(F)` in coordinates; rows index a basis of `Der_E(F)`.
    pub anchor_pi1: Matrix,
    /// `dim Ω¹_{E/K}`.
    pub fib_pi0_dim: usize,
    /// `dim Υ_{E/K}`.
    pub fib_pi1_dim: usize,
    pub vanishing_outside_01: bool,
}

pub fn galois_homotopy_data(e: &IntermediateField, module: &DerivationModule) -> Result<AlgebroidHomotopyData> {
    let pres = module.presentation();
    let ring = pres.field().ambient().ring();
    let g = derivations_vanishing_on(e, module)?;
    let rows: alloc::vec::Vec<_> = g.basis().iter().map(|d| module.coordinates(d)).collect();
    let anchor_pi1 = Matrix::from_rows(ring, module.dim(), &rows);
    let fe = cartier_check(pres.field(), e)?;
    let ek = cartier_check(e, pres.base())?;
    Ok(AlgebroidHomotopyData {
        pi1_dim: g.dim(),
        pi0_dim: fe.pi1_dim,
        anchor_pi1,
        fib_pi0_dim: ek.pi0_dim,
        fib_pi1_dim: ek.pi1_dim,
        vanishing_outside_01: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::derivation_module;
    use crate::tower::AmbientField;

    #[test]
    fn extreme_and_middle_fields() {
        let a = AmbientField::standard(2, 1, 2).unwrap();
        let f = IntermediateField::full(&a);
        let k = IntermediateField::base(&a);
        let m = derivation_module(&f, &k).unwrap();
        let top = galois_homotopy_data(&f, &m).unwrap();
        assert_eq!((top.pi1_dim, top.pi0_dim, top.fib_pi0_dim, top.fib_pi1_dim), (0, 0, 1, 1));
        let bottom = galois_homotopy_data(&k, &m).unwrap();
        assert_eq!((bottom.pi1_dim, bottom.pi0_dim, bottom.fib_pi0_dim, bottom.fib_pi1_dim), (1, 1, 0, 0));
        let mid = IntermediateField::closure(&a, &[a.var(0).pow(2)]);
        let d = galois_homotopy_data(&mid, &m).unwrap();
        assert_eq!((d.pi1_dim, d.pi0_dim, d.fib_pi0_dim, d.fib_pi1_dim), (1, 1, 1, 1));
        assert_eq!(d.anchor_pi1.rank(a.ring()), 1);
    }
}
