//! Fields sandwiched between `B = F_p(x^q)` and `A = F_p(x)`, their lattice operations
//! and triangular presentations.

mod ambient;
mod disjoint;
mod field;
mod presentation;

pub use ambient::{standard_names, AmbientField};
pub use disjoint::{linear_disjointness, DependenceCertificate, Disjointness};
pub use field::IntermediateField;
pub use presentation::{minimal_generators, KPoly, TriangularPresentation};
