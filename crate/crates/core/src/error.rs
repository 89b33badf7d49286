// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::pipeline::DcsResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("node set is empty")]
    EmptyNodeSet,

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("node index {index} is out of range for a graph with {len} nodes")]
    NodeOutOfRange { index: usize, len: usize },

    #[error("node {index} is not a member of the subset")]
    NotInSubset { index: usize },

    #[error("unknown node label `{0}`")]
    UnknownLabel(String),

    #[error("self-loop on `{0}` is not allowed")]
    SelfLoop(String),

    #[error("edge weight must be finite and strictly positive, got {0}")]
    InvalidWeight(f64),

    #[error("physical network edge ({source_label}, {target_label}) has weight {weight}; physical edges must have weight 1")]
    NonUnitPhysicalWeight {
        source_label: String,
        target_label: String,
        weight: f64,
    },

    #[error("invalid correspondence: {0}")]
    InvalidCorrespondence(String),

    #[error("gap threshold must be at least 1")]
    InvalidDelta,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("instance has {size} nodes, above the limit of {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("alignment graph has no edges; no multi-node candidate exists")]
    NoFeasibleSubgraph,

    #[error("selected nodes span different physical components and cannot be joined")]
    IrreparableDisconnection { partial: Option<Box<DcsResult>> },

    #[error("users without check-ins: {}", .0.join(", "))]
    MissingCheckins(Vec<String>),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
