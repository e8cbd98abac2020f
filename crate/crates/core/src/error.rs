use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(usize, usize),

    #[error("vertex {vertex} has degree {degree}, above the bound t+1 = {bound}")]
    DegreeBound {
        vertex: usize,
        degree: usize,
        bound: usize,
    },

    #[error("edge ({u}, {v}) has negative weight {weight}")]
    NegativeWeight { u: usize, v: usize, weight: i64 },

    #[error("invalid parameters: {0}")]
    Parameters(String),

    #[error("weights are not vertex-induced on subgraph {subgraph}: edge ({u}, {v})")]
    NotVertexInduced { subgraph: usize, u: usize, v: usize },

    #[error("no feasible matching exists")]
    Infeasible,

    #[error("instance too large for exhaustive search: {0}")]
    InstanceTooLarge(String),

    #[error("weights too large for exact 63-bit arithmetic: {0}")]
    Overflow(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
