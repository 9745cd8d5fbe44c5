use thiserror::Error;

use crate::face::{Face, Vertex};

/// Errors raised while building or transforming a [`SimplicialComplex`](crate::SimplicialComplex).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("a complex needs at least one face")]
    EmptyInput,
    #[error("a face needs at least one vertex")]
    EmptyFace,
    #[error("vertex {0} appears twice in a face")]
    DuplicateVertex(Vertex),
    #[error("vertex ids must be positive, found 0")]
    NonPositiveVertex,
    #[error("face {0} is not in the complex")]
    FaceAbsent(Face),
    #[error("vertex {0} is not in the complex")]
    VertexAbsent(Vertex),
    #[error("vertex {0} is already used by the complex")]
    VertexCollision(Vertex),
    #[error("operation needs a pure complex")]
    NotPure,
    #[error("vertex map is not defined on vertex {0}")]
    MapNotTotal(Vertex),
    #[error("vertex map identifies two vertices of face {0}")]
    QuotientUnsafe(Face),
    #[error("contracting edge {0} violates the link condition")]
    LinkConditionViolated(Face),
    #[error("{0}")]
    InvalidArgument(String),
}

/// Facet-file parse failure, reported with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}
