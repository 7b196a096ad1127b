use thiserror::Error;

use crate::graph::{Edge, Vertex};
use crate::planarity::SubdivisionWitness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("edge {0} is not in the graph")]
    UnknownEdge(Edge),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl GraphError {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        GraphError::Parse {
            line,
            msg: msg.into(),
        }
    }
}

/// Failures of the decomposition and decision procedures.
#[derive(Debug, Clone, Error)]
pub enum ClassError {
    /// The input contains a subdivision of K3,3 and lies outside the class
    /// the decision procedure covers.
    #[error("graph contains a K3,3 subdivision")]
    K33Found(Box<SubdivisionWitness>),
    #[error("graph is planar")]
    Planar,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no M-graph subdivision exists")]
    NoM,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("malformed rotation: {0}")]
    MalformedRotation(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("catalog line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("catalog entry {name}: {reason}")]
    Invalid { name: String, reason: String },
}
