use alloc::string::String;

/// Errors raised by ring constructions, arithmetic front ends and checkers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("capability missing: {0}")]
    CapabilityMissing(String),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("jet orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),
    #[error("invalid endomorphism: {0}")]
    InvalidEndomorphism(String),
    #[error("invalid literal at offset {offset}: {msg}")]
    Literal { offset: usize, msg: String },
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("hypothesis not established: {0}")]
    HypothesisNotEstablished(String),
    #[error("ring is not abelian")]
    NotAbelian,
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
    #[error("degree schedule overflow: {0}")]
    ScheduleOverflow(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
