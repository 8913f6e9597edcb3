use thiserror::Error;

/// Errors raised anywhere in the engine.
///
/// Degeneracy errors (`DegenerateConfiguration`, `ExceptionalValue`, `PoleAtPoint`)
/// are expected during random trials; the face driver resamples on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero value where a nonzero one is required: {0}")]
    ZeroValue(String),
    #[error("value does not factor over the coprime basis: {0}")]
    NotCovered(String),
    #[error("pole at evaluation point")]
    PoleAtPoint,
    #[error("key domain mismatch: {0}")]
    KeyDomainMismatch(String),
    #[error("wedge argument is zero")]
    ZeroArgument,
    #[error("point index out of range: {0}")]
    IndexError(String),
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("exceptional value (0 or 1): {0}")]
    ExceptionalValue(String),
    #[error("generic configuration not found after {0} attempts")]
    RetryLimitExceeded(usize),
    #[error("element is not of cross-ratio shape: {0}")]
    NotCrossRatioShape(String),
    #[error("input lies on the branch cut [1, inf)")]
    BranchCutInput,
    #[error("non-finite floating value")]
    NonFinite,
    #[error("backend {backend} is not admissible for face {face}: {reason}")]
    BackendInadmissible {
        face: String,
        backend: String,
        reason: String,
    },
    #[error("no sign assignment makes every audited face commute")]
    NoConsistentAssignment,
    #[error("unknown face id {0}")]
    UnknownFace(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by an unlucky random sample rather than a bug.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            Error::DegenerateConfiguration(_)
                | Error::ExceptionalValue(_)
                | Error::PoleAtPoint
                | Error::ZeroValue(_)
                | Error::NonFinite
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
