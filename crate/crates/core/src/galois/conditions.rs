use crate::algebroid::{AlgebroidHomotopyData, DerivationModule};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConditionDims {
    pub pi0_dim: usize,
    pub pi1_dim: usize,
    pub anchor_rank: usize,
    pub target_dim: usize,
}

/// Injectivity, vanishing outside degrees 0 and 1, and balance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub injectivity: bool,
    pub vanishing: bool,
    pub balance: bool,
    pub dims: ConditionDims,
    pub verdict: bool,
}

pub fn check_essential_image(data: &AlgebroidHomotopyData, module: &DerivationModule) -> Result<ConditionReport> {
    let ring = module.presentation().field().ambient().ring();
    if data.anchor_pi1.ncols() != module.dim() {
        return Err(Error::DimensionMismatch { expected: module.dim(), found: data.anchor_pi1.ncols() });
    }
    if data.anchor_pi1.nrows() != data.pi1_dim {
        return Err(Error::DimensionMismatch { expected: data.pi1_dim, found: data.anchor_pi1.nrows() });
    }
    let anchor_rank = data.anchor_pi1.rank(ring);
    let injectivity = anchor_rank == data.pi1_dim;
    let vanishing = data.vanishing_outside_01;
    let balance = data.pi0_dim == data.pi1_dim;
    Ok(ConditionReport {
        injectivity,
        vanishing,
        balance,
        dims: ConditionDims { pi0_dim: data.pi0_dim, pi1_dim: data.pi1_dim, anchor_rank, target_dim: module.dim() },
        verdict: injectivity && vanishing && balance,
    })
}
