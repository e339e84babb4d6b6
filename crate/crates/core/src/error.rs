use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a finite Coxeter system: {0}")]
    NotFinite(String),
    #[error("not a crystallographic Cartan matrix: {0}")]
    NotCrystallographic(String),
    #[error("vector {0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension {dim} exceeds the configured maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error("elements are not comparable in Bruhat order")]
    NotComparable,
    #[error("the subword complex is empty (target is not below the Demazure product)")]
    EmptyComplex,
    #[error("position {0} is not in the facet")]
    NotInFacet(usize),
    #[error("position {0} is not flippable")]
    NotFlippable(usize),
    #[error("{0} is not a facet of the subword complex")]
    NotAFacet(String),
    #[error("no Bruhat cover: {0}")]
    NoCover(String),
    #[error("functional is negative on the Bruhat cone ray {0:?}")]
    FunctionalNotNonnegative(Vec<i64>),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}
