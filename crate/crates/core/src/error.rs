use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("relation is not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("ideal is not admissible: {0}")]
    NotAdmissible(String),
    #[error("selected span is not finite: {0}")]
    NotFinite(String),
    #[error("structure is not generated by its radical layer: {0}")]
    NotGenerated(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("endomorphism ring does not split over the base field; try enlarging the field")]
    NonSplitEndo,
    #[error("radical of the endomorphism ring is unavailable in characteristic {0}")]
    RadicalUnavailable(u64),
    #[error("module is not indecomposable")]
    NotIndecomposable,
    #[error("module is projective")]
    ProjectiveInput,
    #[error("bound exceeded: {what} > {limit}")]
    BoundExceeded { what: String, limit: usize },
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    #[error("module is not finitely presented inside the window: {0}")]
    NotFinitelyPresented(String),
    #[error("global dimension exceeds {0}")]
    InfiniteGlobalDimension(usize),
    #[error("presentation is not radical: {0}")]
    NonRadicalPresentation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
