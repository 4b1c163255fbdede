//! Crate error type.

use crate::graph::NodeRef;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// TNTP input could not be parsed; reports the 1-based line number.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A scenario config file was malformed or inconsistent.
    #[error("config error: {0}")]
    Config(String),

    /// Graph construction rejected its input.
    #[error("graph error: {0}")]
    Graph(String),

    /// A graph required to be strongly connected is not; `witness` is a
    /// node pair (u, v) with no directed path u -> v.
    #[error("graph is not strongly connected: no path from {from:?} to {to:?}")]
    NotStronglyConnected { from: NodeRef, to: NodeRef },

    /// A node reference does not exist in the graph it was used with.
    #[error("invalid node reference {0:?}")]
    InvalidNode(NodeRef),

    /// Operation argument outside its domain (negative flow, zero speed, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// LP assembly rejected an inconsistent model configuration.
    #[error("model error: {0}")]
    Model(String),

    /// The LP has no feasible point.
    #[error("problem is infeasible")]
    Infeasible,

    /// The LP is unbounded below.
    #[error("problem is unbounded")]
    Unbounded,

    /// The solver stopped without a usable certificate; distinct from a
    /// genuine infeasibility verdict.
    #[error("numerical failure in solver: {0}")]
    NumericalFailure(String),

    /// A shortest-path target cannot be reached under the given mode mask.
    #[error("node {0:?} is unreachable")]
    Unreachable(NodeRef),

    /// Metrics requested on a solution with no demand or no flow.
    #[error("metrics error: {0}")]
    Metrics(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
