//! Almost split sequences, knitting and (stable) Auslander algebras.

mod auslander;
mod knit;
mod sequence;

pub use auslander::{
    auslander_algebra, quotient_endomorphism_algebra, rigid_locus, stable_auslander_algebra,
    StableQuotientSpec,
};
pub use knit::{
    ar_quiver, enumerate_indecomposables, ARQuiver, DEFAULT_MAX_COUNT, DEFAULT_MAX_DIM,
};
pub use sequence::{almost_split_sequence, pushout};
