//! Bounded complexes, minimal projective complexes and the derived Nakayama functor.
//!
//! Complexes of projectives carry their differentials as matrices of
//! algebra elements, which makes Gaussian elimination and chain map
//! equations direct. Module-level complexes are used for injective terms
//! and cohomology.

mod complex;
mod homotopy;
mod minimal;
mod nakayama;
mod replace;

pub use complex::{elements_to_map, map_to_elements, BoundedComplex, ProjComplex};
pub use homotopy::{complex_iso, hom_dim};
pub use minimal::minimal_form;
pub use nakayama::{
    cy_check, cy_report, derived_nakayama, finite_global_dimension, nakayama_entry, nakayama_power,
    termwise_nakayama, CyReport, Dynkin,
};
pub use replace::{projective_replacement, truncated_replacement};

#[cfg(test)]
mod tests;
