use thiserror::Error;

use crate::graph6::Graph6Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    OrderOverflow(usize),

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("parity violation: {0}")]
    Parity(String),

    #[error("range violation: {0}")]
    Range(String),

    #[error("invalid pattern: {0}")]
    Pattern(String),

    #[error("invalid construction spec: {0}")]
    Construction(String),

    #[error(transparent)]
    Graph6(#[from] Graph6Error),

    #[error("task outside the feasibility envelope: {reason} (estimated {estimate})")]
    Infeasible { reason: String, estimate: String },

    #[error("binomial coefficient C({n}, {k}) overflows 64 bits")]
    Overflow { n: u64, k: u64 },
}

impl Error {
    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }

    pub(crate) fn parity(msg: impl Into<String>) -> Self {
        Error::Parity(msg.into())
    }
}
