use alloc::sync::Arc;

use super::jacobson::{jacobson_roundtrip, RoundTripReport};
use super::modular::{modularity_test, ModularityVerdict};
use super::simple::{is_simple, SimplicityReport};
use crate::algebroid::derivation_module;
use crate::cotangent::{cotangent_complex_of, homology};
use crate::error::{Error, Result};
use crate::funcfield::RatFunc;
use crate::tower::{IntermediateField, TriangularPresentation};

const ROUNDTRIP_SAMPLE: u32 = 4;

#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub degree: u64,
    pub exponent: u32,
    pub presentation: Arc<TriangularPresentation>,
    pub min_generators: usize,
    pub pi0_dim: usize,
    pub pi1_dim: usize,
    pub der_dim: usize,
    pub cartier_equal: bool,
    pub simplicity: SimplicityReport,
    pub modularity: ModularityVerdict,
    /// Only for exponent one.
    pub roundtrip: Option<RoundTripReport>,
}

impl AnalysisReport {
    pub fn generators(&self) -> &[RatFunc] {
        self.presentation.gens()
    }
}

pub fn analyze(field: &IntermediateField, base: &IntermediateField, seed: u64, budget: usize) -> Result<AnalysisReport> {
    if !field.contains_field(base) {
        return Err(Error::NotASubfield("K is not contained in F"));
    }
    let ring = field.ambient().ring();
    let (presentation, complex) = cotangent_complex_of(field, base)?;
    let h = homology(&complex, ring);
    let exponent = field.exponent_over(base)?;
    let roundtrip = if exponent == 1 {
        Some(jacobson_roundtrip(field, base, ROUNDTRIP_SAMPLE, seed)?)
    } else {
        None
    };
    Ok(AnalysisReport {
        degree: field.degree_over(base)?,
        exponent,
        min_generators: h.pi0_dim,
        pi0_dim: h.pi0_dim,
        pi1_dim: h.pi1_dim,
        der_dim: derivation_module(field, base)?.dim(),
        cartier_equal: h.pi0_dim == h.pi1_dim,
        simplicity: is_simple(field, base)?,
        modularity: modularity_test(field, base, budget, seed)?,
        roundtrip,
        presentation,
    })
}
