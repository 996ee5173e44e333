//! Finite-dimensional representations, homological algebra and AR translates.

mod decompose;
mod duality;
mod hom;
mod module;
mod resolution;
mod ses;
mod stable;

pub use decompose::{
    decompose, decompose_grouped, decompose_with_maps, end_radical, is_indecomposable,
    is_isomorphic, is_isomorphic_indecomposable, iso_witness, Summand,
};
pub use duality::{tau, tau_inverse, transpose};
pub use hom::{hom_basis, hom_space, HomSpace};
pub use module::{Module, ModuleMap};
pub use resolution::{
    chain_lift, ext, ext_space, generator_images, generator_index, global_dimension, is_injective,
    is_projective, lift_to_covers, map_from_generators, minimal_projective_resolution, proj_sum,
    projective_cover, resolve, restrict_to_kernels, syzygy_map, yoneda_product,
    yoneda_product_fixed, Cover, ExtSpace, Resolution,
};
pub use ses::ShortExactSeq;
pub use stable::{stable_hom, StableHom};
