//! Two-term cotangent complexes `L_{F/K}`, their homology, maps induced by towers
//! and the six-term homology sequence of `K ⊆ E ⊆ F`.

mod complex;
mod maps;
mod six_term;

pub use complex::{cartier_check, cotangent_complex, cotangent_complex_of, homology, CartierReport, Homology, TwoTermComplex};
pub use maps::{
    base_change_map, compatible_presentations, direct_sum_compare, tower_maps, ComplexMap, DirectSumReport,
    TowerMaps, TowerPresentations,
};
pub use six_term::{euler_check, six_term, SixTermSequence};
