//! Quivers with relations and their finite-dimensional path algebras.

mod algebra;
mod compare;
mod quiver;
mod structure;

pub use algebra::{build_algebra, presented, Algebra, BasisPath, BuildOptions, Sparse};
pub use compare::{profile_isomorphic, profile_isomorphic_ungraded, profile_match};
pub use quiver::{Arrow, ParseError, Quiver, Relation};
pub use structure::{from_structure, from_structure_with_arrows, veronese, FdAlgebra, RadElem};

#[cfg(test)]
mod tests;
