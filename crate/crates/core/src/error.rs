use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} is outside 0..{order}")]
    InvalidVertex { vertex: usize, order: usize },

    #[error("vertex set over {found} vertices used with a graph of order {expected}")]
    HostMismatch { expected: usize, found: usize },

    #[error("graph order {order} exceeds the {what} cap of {cap}")]
    CapExceeded {
        what: &'static str,
        order: usize,
        cap: usize,
    },

    #[error("edge ({0}, {1}) lies inside one side of the bipartition")]
    NotBipartite(usize, usize),

    #[error("the two sides of the bipartition do not partition the vertex set")]
    BadPartition,

    #[error("the source and target sets overlap")]
    Overlap,

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: &'static str },

    #[error("Larson decomposition violates clause {clause}: {detail}")]
    LarsonViolation { clause: u8, detail: String },

    #[error("invalid generator argument: {0}")]
    BadArgument(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, order: usize, cap: usize) -> Self {
        Error::CapExceeded { what, order, cap }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
