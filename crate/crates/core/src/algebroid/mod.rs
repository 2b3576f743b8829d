//! Derivations of `F/K` on presentation generators, restricted Lie algebroids inside
//! `Der_K(F)`, fixed fields and homotopy-level algebroid data.

mod axioms;
mod derivation;
mod homotopy;
mod lie;

pub use axioms::{jacobson_terms, verify_restricted_axioms, AxiomReport};
pub use derivation::{derivation_module, Derivation, DerivationModule};
pub use homotopy::{galois_homotopy_data, AlgebroidHomotopyData};
pub use lie::{derivations_vanishing_on, fixed_field, restricted_closure, RestrictedLieAlgebroid};
