//! Exact computations with finite-dimensional algebras given by quivers with
//! relations: module categories, Auslander-Reiten theory, Yoneda categories
//! over finite degree windows and bounded complexes.
//!
//! Everything is generic over the [`scalar::Scalar`] field; the aliases below
//! fix the rationals.

pub mod arknit;
pub mod catalog;
pub mod derivedx;
pub mod error;
pub mod exactla;
pub mod presalg;
pub mod repmod;
pub mod scalar;
pub mod yoncat;

pub use error::{Error, Result};
pub use scalar::{Fp, Rat, Scalar};

pub type QMatrix = exactla::Matrix<Rat>;
pub type QAlgebra = presalg::Algebra<Rat>;
pub type QModule = repmod::Module<Rat>;
pub type QModuleMap = repmod::ModuleMap<Rat>;
pub type QComplex = derivedx::BoundedComplex<Rat>;
pub type QYonedaWindow = yoncat::YonedaWindow<Rat>;
