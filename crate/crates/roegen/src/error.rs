use thiserror::Error;

/// Errors produced by model construction, path generation, and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside the open domain of the operation
    /// (non-positive coordinate, inverted bounds, point outside an image set).
    #[error("domain error: {0}")]
    Domain(String),

    /// A state handed to an operation is inconsistent with the model it
    /// claims to live on (for example off the equation-of-state surface).
    #[error("model error: {0}")]
    Model(String),

    /// A process path is structurally unusable (too few samples, broken
    /// monotonicity, mixed stabilities on an isotherm).
    #[error("path error: {0}")]
    Path(String),

    /// An iterative solver failed to reach its accuracy target.
    #[error("solver error: {0}")]
    Solver(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn model(msg: impl Into<String>) -> Self {
        Error::Model(msg.into())
    }

    pub(crate) fn path(msg: impl Into<String>) -> Self {
        Error::Path(msg.into())
    }

    pub(crate) fn solver(msg: impl Into<String>) -> Self {
        Error::Solver(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
