use thiserror::Error;

/// Errors surfaced by the construction and estimation routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("requested depth {requested} exceeds tree depth {available}")]
    DepthOverflow { requested: usize, available: usize },

    #[error("singular evaluation: x = {x} coincides with an atom and gamma = 0")]
    SingularEvaluation { x: f64 },

    #[error("invalid height: {0}")]
    InvalidHeight(f64),

    #[error("infeasible target {target}: truncated supremum is {supremum} (raise depth)")]
    InfeasibleTarget { target: f64, supremum: f64 },

    #[error("no admissible c on the supplied grid over k <= {k_max} (widen grid or raise depth)")]
    NoAdmissibleC { k_max: usize },

    #[error("omega mass of the test cube is zero")]
    ZeroOmegaMass,

    #[error("partition pieces overlap or leave the parent set")]
    OverlappingPartition,

    #[error("empty candidate family")]
    EmptyFamily,

    #[error("root bracketing failed: {0}")]
    BracketingFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
