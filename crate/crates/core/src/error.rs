use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("format error: {0}")]
    Format(String),

    #[error("graph is not strongly connected")]
    NotStronglyConnected,

    #[error("SCC rank {rank} out of range (graph has {count} components)")]
    RankOutOfRange { rank: usize, count: usize },

    #[error("delta {delta} out of range [1, {edges}]")]
    DeltaOutOfRange { delta: usize, edges: usize },

    #[error("invalid seed list: {0}")]
    InvalidSeeds(String),

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("no bad-instance SAP")]
    NoBadInstanceSap,

    #[error("unknown method: {0}")]
    UnknownMethod(String),

    #[error("cross-check mismatch on query {index}: engine answered {engine}, ground truth {truth}")]
    CrossCheck {
        index: usize,
        engine: bool,
        truth: bool,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
