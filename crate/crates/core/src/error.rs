use thiserror::Error;

use crate::report::AxiomReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("table is not square or has entries out of range: {0}")]
    InvalidTable(String),
    #[error("not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("no two-sided unit")]
    NoUnit,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("size {size} exceeds the limit {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("result depends on the choice of representatives: {0}")]
    RepresentativeDependence(String),
    #[error("precondition failed:\n{0}")]
    PreconditionFailed(AxiomReport),
    #[error("carrier sizes differ: {0} vs {1}")]
    CarrierMismatch(usize, usize),
    #[error("not an {0}-quandle")]
    NotAnNQuandle(usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("codomain algebra is not commutative at basis pair ({0}, {1})")]
    NonCommutativeCodomain(usize, usize),
    #[error("k = {k} exceeds n = {n}")]
    KTooLarge { k: usize, n: usize },
    #[error("function is not invariant: {0}")]
    NotInvariant(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("line {line}, column {column}: expected {expected}")]
    Parse { line: usize, column: usize, expected: String },
    #[error("expected a `{expected}` file, found `{found}`")]
    KindMismatch { expected: String, found: String },
}
