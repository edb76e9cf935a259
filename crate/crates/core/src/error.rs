use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("endpoint {0} lies outside [0, 1]")]
    OutOfRange(String),

    #[error("interval [{left}, {right}] has its left endpoint after its right endpoint")]
    MalformedInterval { left: String, right: String },

    #[error("cannot parse `{0}` as an exact rational")]
    ParseRational(String),

    #[error("an instance needs at least one agent")]
    NoAgents,

    #[error("agent {agent} does not value a single prefix [0, x]")]
    NotPrefixForm { agent: usize },

    #[error("expected {expected} agents, found {found}")]
    ShapeMismatch { expected: usize, found: usize },

    #[error("{mechanism} divides a {expected}, but the instance is a {found}")]
    WrongResource {
        mechanism: &'static str,
        expected: &'static str,
        found: &'static str,
    },

    #[error("no agent with index {0}")]
    NoSuchAgent(usize),

    #[error("{0:?} is not a permutation of the agent indices")]
    InvalidPermutation(Vec<usize>),

    #[error("pieces of agents {first} and {second} overlap on a set of positive length")]
    OverlappingPieces { first: usize, second: usize },

    #[error("the pieces leave part of [0, 1] unallocated")]
    Incomplete,

    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),

    #[error("{cells} grid cells give 2^{cells} reports, above the cap of 2^{cap}")]
    SearchSpaceTooLarge { cells: usize, cap: usize },

    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
}
