use thiserror::Error;

/// Errors produced while building or checking root data and bracket tables.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("illegal Cartan type: {0}")]
    IllegalType(String),

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("type {0} has no diagram automorphism satisfying the folding conditions")]
    NoFoldableSymmetry(String),

    #[error("invalid diagram automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("invalid sign function: {0}")]
    InvalidEpsilon(String),

    #[error("degenerate root pair: beta = \u{b1}alpha")]
    DegeneratePair,

    #[error("not a root: {0}")]
    NotARoot(String),

    #[error("type {0} is not simply laced")]
    NotSimplyLaced(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("folding precondition violated: {0}")]
    FoldingPreconditionViolated(String),

    #[error("no representative pair with a root sum: {0}")]
    RepresentativeNotFound(String),

    #[error("incompatible tables: {0}")]
    IncompatibleTables(String),

    #[error("malformed table document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
