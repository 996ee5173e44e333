//! The Yoneda category over a finite degree window and its module category.

mod cm;
mod stdres;
mod tilting;
mod umod;
mod window;

pub use cm::{CmEnumeration, GorensteinReport, DEFAULT_MAX_CLASSES, PERIODICITY_SHIFT};
pub use stdres::StdResolution;
pub use tilting::{HeartReport, OrthogonalityReport, TMembership, TiltingReport};
pub use umod::Presentation;
pub use window::{GradedArrow, UModule, UModuleMap, YonedaWindow};

#[cfg(test)]
mod stdres_tests;
#[cfg(test)]
mod tests;
