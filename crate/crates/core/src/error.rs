use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("graph needs at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameters for family `{family}`: {reason}")]
    BadParams { family: String, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is not regular (degrees range {min}..={max})")]
    NotRegular { min: usize, max: usize },

    #[error("graph is not highly symmetric: E_{a}T_{b} = {forward} but E_{b}T_{a} = {backward}")]
    NotHighlySymmetric {
        a: usize,
        b: usize,
        forward: f64,
        backward: f64,
    },

    #[error("singular linear system: {system}")]
    Singular { system: String },

    #[error("eigensolver failed: {context}")]
    EigenFailure { context: String },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub(crate) fn bad_params(family: &str, reason: impl Into<String>) -> Self {
        Error::BadParams {
            family: family.to_string(),
            reason: reason.into(),
        }
    }
}
