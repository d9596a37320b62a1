use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vector is not in the span of the given basis")]
    NotInSpan,

    #[error("edge-loop at vertex {0}")]
    EdgeLoop(String),

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("unknown edge {0:?}")]
    UnknownEdge(String),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("structural violation: {0}")]
    Structural(String),

    #[error("input module fails the defining relations ({0} failures)")]
    RelationFailure(usize),

    #[error("parameters are not generic at vertex {vertex}: {detail}")]
    NotGeneric { vertex: String, detail: String },

    #[error("mixed cyclotomic orders {0} and {1}")]
    MixedOrders(u32, u32),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("not a quiver automorphism: {0}")]
    NotAutomorphism(String),

    #[error("not an intertwiner: {0}")]
    NotIntertwiner(String),

    #[error("inconsistent character table: {0}")]
    CharacterTable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
