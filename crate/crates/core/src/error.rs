use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("field mismatch between operands")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("invalid quiver: {0}")]
    Quiver(String),
    #[error("relation {index} is not parallel: {msg}")]
    NonParallel { index: usize, msg: String },
    #[error("ideal is not admissible: {0}")]
    NotAdmissible(String),
    #[error("path basis is not finite within path-length cap {cap}")]
    BasisCap { cap: usize },
    #[error("ill-formed path: {0}")]
    IllFormedPath(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown module {0}")]
    UnknownModule(String),
    #[error("representation violates relation {0}")]
    RelationViolated(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("could not split module: {0}")]
    Split(String),
    #[error("not an injective module: {0}")]
    NotInjective(String),
    #[error("approximation is not injective at stage {stage}")]
    ApproxNotInjective { stage: usize },
    #[error("not a direct summand: {0}")]
    NotSummand(String),
    #[error("indecomposable enumeration unavailable: {0}")]
    EnumerationUnavailable(String),
    #[error("algebra is not Gorenstein within cap {0}")]
    NotGorenstein(usize),
    #[error("internal consistency failure: {0}")]
    Defect(String),
}
