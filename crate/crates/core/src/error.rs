use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("unsupported representation: {0}")]
    UnsupportedRepresentation(String),
    #[error("closure exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("closure needs at least one generator")]
    NoGenerators,
    #[error("groups larger than {max} elements are not supported (got {got})")]
    TooLarge { got: usize, max: usize },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("map is not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("no element labelled {0:?}")]
    LabelNotFound(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("relation does not hold in the realization: {0}")]
    RelationFailed(String),
    #[error("variant selection failed: {0}")]
    Selection(String),
}

pub type Result<T> = std::result::Result<T, Error>;
