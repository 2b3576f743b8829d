//! Theorem-level checks: essential-image conditions, simplicity, the Jacobson
//! correspondence, Frobenius chains and modularity.

mod analyze;
mod conditions;
mod frobenius;
pub mod harness;
mod jacobson;
mod modular;
mod simple;

pub use analyze::{analyze, AnalysisReport};
pub use conditions::{check_essential_image, ConditionDims, ConditionReport};
pub use frobenius::{frobenius_chain_report, frobenius_level, ChainLevel, ChainLink, FrobeniusChainReport};
pub use jacobson::{jacobson_roundtrip, RoundTripReport};
pub use modular::{
    decomposition_search, disjointness_prong, lifted_pair, modularity_test, verify_modular_conditions, ModularConditions,
    ModularityVerdict, NotModularWitness, PartCheck, DEFAULT_BUDGET, DISJOINTNESS_CRITERION,
};
pub use simple::{is_simple, SimplicityReport};
