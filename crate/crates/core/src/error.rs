use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graphs must have between 1 and 64 vertices, got {0}")]
    VertexCount(usize),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("malformed edge list: {0}")]
    EdgeList(String),

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("force {forcer}->{target} is not valid at step {step}")]
    InvalidForce {
        forcer: usize,
        target: usize,
        step: usize,
    },

    #[error("vertex {target} is forced more than once in step {step}")]
    DuplicateTarget { target: usize, step: usize },

    #[error("schedule stopped with {remaining} white vertices left")]
    IncompleteSchedule { remaining: usize },

    #[error("initial set is not a forcing set")]
    NotForcingSet,

    #[error("vertex set is not a component of the graph minus the forcing set")]
    NotAComponent,

    #[error("no boundary vertex has a neighbor outside the component and boundary")]
    NoPivot,

    #[error("closed neighborhood of vertex {0} never saturates")]
    NeverSaturates(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph contains a claw")]
    NotClawFree,

    #[error("forcing set complement is already connected")]
    ComplementConnected,

    #[error("vertex {0} never turns blue")]
    Unreached(usize),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("{what} supports at most {max} vertices, got {n}")]
    OutOfRange {
        what: &'static str,
        max: usize,
        n: usize,
    },

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
