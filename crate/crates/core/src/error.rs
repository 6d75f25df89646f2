use thiserror::Error;

use crate::rootsys::Root;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),

    #[error("{0} is not a root of this system")]
    NotARoot(Root),

    #[error("dimension mismatch: expected length {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid Hermitian marking at node {node}: root {witness} has coefficient {coefficient}")]
    InvalidMarking {
        node: usize,
        witness: Root,
        coefficient: i64,
    },

    #[error("generators are linearly dependent (relation {relation:?})")]
    LinearlyDependent { relation: Vec<i64> },

    #[error("difference of {0} and {1} is a root")]
    DifferenceIsRoot(Root, Root),

    #[error("node cannot carry a Hermitian structure: {0}")]
    NotHermitianNode(String),

    #[error("diagram component has {0} noncompact nodes")]
    MultipleNoncompact(usize),

    #[error("Weyl group search budget exceeded after {explored} states")]
    SearchBudgetExceeded { explored: usize },

    #[error("diagonal entries sum to {0}, not zero")]
    NonTraceless(i64),

    #[error("embedding has {provided} coroot images but {required} are needed")]
    IncompleteEmbedding { provided: usize, required: usize },

    #[error("unsupported ambient algebra {0}")]
    UnsupportedAmbient(String),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("roots of different lengths: {0}")]
    MixedLengthUnsupported(String),

    #[error("catalog row failed validation: {0}")]
    CatalogRow(String),

    #[error("cannot parse real form name {0:?}")]
    BadName(String),
}

impl Error {
    /// The variant name, e.g. `"LinearlyDependent"`.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidCartan(_) => "InvalidCartan",
            Error::NotFiniteType(_) => "NotFiniteType",
            Error::NotARoot(_) => "NotARoot",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::InvalidMarking { .. } => "InvalidMarking",
            Error::LinearlyDependent { .. } => "LinearlyDependent",
            Error::DifferenceIsRoot(..) => "DifferenceIsRoot",
            Error::NotHermitianNode(_) => "NotHermitianNode",
            Error::MultipleNoncompact(_) => "MultipleNoncompact",
            Error::SearchBudgetExceeded { .. } => "SearchBudgetExceeded",
            Error::NonTraceless(_) => "NonTraceless",
            Error::IncompleteEmbedding { .. } => "IncompleteEmbedding",
            Error::UnsupportedAmbient(_) => "UnsupportedAmbient",
            Error::ParameterOutOfRange(_) => "ParameterOutOfRange",
            Error::MixedLengthUnsupported(_) => "MixedLengthUnsupported",
            Error::CatalogRow(_) => "CatalogRow",
            Error::BadName(_) => "BadName",
        }
    }
}
