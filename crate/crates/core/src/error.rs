use thiserror::Error;

/// Crate-wide error type. Variants mirror the failure modes of the public
/// operations; solvers that can exhaust their search budget report
/// `BudgetExceeded` rather than running unbounded.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error: {0}")]
    Parse(String),
    #[error("unsupported order {order} (maximum {max})")]
    UnsupportedOrder { order: usize, max: usize },
    #[error("operation requires a nonempty vertex set")]
    EmptySet,
    #[error("k = {k} out of range [{min}, {max}]")]
    BadArity { k: usize, min: usize, max: usize },
    #[error("invalid matching: {0}")]
    BadMatching(String),
    #[error("invalid family parameters: {0}")]
    BadParams(String),
    #[error("invalid trace: {0}")]
    BadTrace(String),
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("undefined: {0}")]
    Undefined(String),
    #[error("unknown check id: {0}")]
    UnknownCheck(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}

pub type Result<T> = std::result::Result<T, Error>;
