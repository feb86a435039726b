//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input document (GraphML, JSON, or structural violations
    /// such as self-loops and out-of-range coordinates).
    #[error("parse error: {0}")]
    Parse(String),

    /// The topology has no nodes at all.
    #[error("topology has no nodes")]
    EmptyTopology,

    /// The graph is not connected; delays would be infinite.
    #[error("topology is disconnected: node {unreachable} is unreachable from node {root}")]
    Disconnected { root: usize, unreachable: usize },

    /// An edge latency must be derived from coordinates but a node has none.
    #[error("node '{0}' has no coordinates and an incident edge lacks an explicit latency")]
    MissingCoordinates(String),

    /// Caller-supplied parameter out of range (bad counts, indices, ranges).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Exhaustive enumeration refused because it would exceed the cap.
    #[error("enumeration needs {needed} placements, above the cap of {cap}")]
    CapExceeded { needed: u128, cap: u128 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
