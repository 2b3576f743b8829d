use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::cotangent::{cartier_check, euler_check, six_term};
use crate::error::Result;
use crate::tower::{AmbientField, IntermediateField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainLevel {
    /// `F / F^{p^i}` (with `B` adjoined).
    pub i: u32,
    pub pi0_dim: usize,
    pub pi1_dim: usize,
    pub der_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainLink {
    /// Tower `F^{p^{i+1}} ⊆ F^{p^i} ⊆ F`.
    pub i: u32,
    pub dims: [usize; 6],
    pub exact: bool,
    pub euler: bool,
    /// `π₁(L_{F/F^{p^{i+1}}}) -> π₁(L_{F/F^{p^i}})` vanishes.
    pub zero_map: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusChainReport {
    pub expected_dim: usize,
    pub levels: Vec<ChainLevel>,
    pub links: Vec<ChainLink>,
    pub passed: bool,
}

/// `B F^{p^i} = F_p(x_j^{p^{min(i, e_j)}})`.
pub fn frobenius_level(amb: &Arc<AmbientField>, i: u32) -> IntermediateField {
    let p = amb.p() as u64;
    let gens: Vec<_> = (0..amb.nvars())
        .map(|j| amb.var(j).pow(p.pow(i.min(amb.exponents()[j]))))
        .collect();
    IntermediateField::closure(amb, &gens)
}

/// The chain `F^{p^e} ⊂ ... ⊂ F^p ⊂ F` for the full ambient field `F`.
pub fn frobenius_chain_report(amb: &Arc<AmbientField>) -> Result<FrobeniusChainReport> {
    let f = IntermediateField::full(amb);
    let e = amb.max_exponent();
    let fields: Vec<IntermediateField> = (0..=e).map(|i| frobenius_level(amb, i)).collect();
    let expected_dim = amb.nvars();
    let mut levels = Vec::new();
    let mut passed = true;
    for i in 1..=e {
        let c = cartier_check(&f, &fields[i as usize])?;
        let der = crate::algebroid::derivation_module(&f, &fields[i as usize])?.dim();
        let want = amb.exponents().iter().filter(|&&ej| ej >= i).count();
        passed &= c.pi0_dim == want && c.pi1_dim == want && der == want;
        levels.push(ChainLevel { i, pi0_dim: c.pi0_dim, pi1_dim: c.pi1_dim, der_dim: der });
    }
    let mut links = Vec::new();
    for i in 1..e {
        let s = six_term(&f, &fields[i as usize], &fields[i as usize + 1])?;
        let link = ChainLink {
            i,
            dims: s.dims,
            exact: s.is_exact(),
            euler: euler_check(&s.dims),
            zero_map: s.maps[1].is_zero(),
        };
        passed &= link.exact && link.euler && link.zero_map;
        links.push(link);
    }
    Ok(FrobeniusChainReport { expected_dim, levels, links, passed })
}
