use thiserror::Error;

/// Errors surfaced by the library operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("edge set is not a subgraph: {0}")]
    InvalidSubgraph(String),
    #[error("matrix has an empty row; transpose would have an unsupported column")]
    InvalidTranspose,
    #[error("instance too large: {what} has size {size}, cap is {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("type graph leaves column {} uncovered", .0 + 1)]
    InvalidType(usize),
    #[error("type is infeasible; no witness point exists")]
    NoWitness,
    #[error("operation requires a sufficiently generic matrix")]
    RequiresGeneric,
    #[error("arrangement is not graphic: column {0} does not have exactly two finite entries")]
    NotGraphic(usize),
    #[error("ideal has a non-squarefree generator")]
    NotSquarefree,
    #[error("variable x_{}_{} is outside the support", .0 + 1, .1 + 1)]
    WeightUndefined(usize, usize),
    #[error("failed to find a generic lift within the retry budget")]
    GenericityFailure,
}
