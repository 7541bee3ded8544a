use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The (z, t) pair does not describe a member of the family.
    #[error("invalid network spec: {0}")]
    InvalidSpec(String),

    #[error("address error: {0}")]
    Address(String),

    /// Materializing the graph would exceed the configured node cap.
    #[error("network too large: {nodes} nodes exceeds the cap of {cap}")]
    TooLarge { nodes: String, cap: u64 },

    #[error("graph is disconnected: node {node} unreachable from {source_node}")]
    Disconnected { source_node: u64, node: u64 },

    #[error("malformed edge list at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal error: {0}")]
    Internal(String),
}
