// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::color::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid sign {0}, expected 1 or -1")]
    InvalidSign(i64),

    #[error("{what}: expected {expected} entries, got {got}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("{0}")]
    Precondition(String),

    #[error("graph is not a {0}")]
    WrongShape(&'static str),

    #[error("signed graph is unbalanced")]
    Unbalanced,

    #[error("graph has no edges")]
    Edgeless,

    #[error("coloring does not match the graph: {0}")]
    ShapeMismatch(String),

    #[error("color {color} used twice at vertex {vertex}")]
    ColorCollision { vertex: usize, color: i32 },

    #[error("coloring uses color 0")]
    UsesZero,

    #[error("coloring failed verification with {} violation(s)", .0.len())]
    InvalidColoring(Vec<Violation>),

    #[error("{what} is {actual}, above the limit of {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("no coloring with {0} colors exists although at most max-degree + 1 should suffice")]
    BoundViolated(usize),

    #[error("projection undefined: {0}")]
    UndefinedProjection(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("construction invariant broken: {0}")]
    Construction(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn construction(msg: impl Into<String>) -> Self {
        Error::Construction(msg.into())
    }
}
