use thiserror::Error;

/// Crate-wide error type.
///
/// Failed *checks* (a cocycle that is not a cocycle, a GFA axiom that does not
/// hold) are ordinary return values, not errors; `Error` is reserved for
/// contract violations and unusable input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),

    #[error("inversion of zero in Q(zeta_{0})")]
    DivisionByZero(u32),

    #[error("conductor {from} does not divide {to}")]
    BadPromotion { from: u32, to: u32 },

    #[error("not a group table: {0}")]
    NotAGroup(String),

    #[error("group order cap exceeded: {order} > {cap}")]
    OrderCapExceeded { order: usize, cap: usize },

    #[error("element index {0} out of range for group of order {1}")]
    BadElement(usize, usize),

    #[error("not a cocycle: d(c) != 1 first violated at {0:?}")]
    NotACocycle(Vec<usize>),

    #[error("cochain degree {0} unsupported here")]
    BadDegree(u8),

    #[error("cocycle mismatch: {0}")]
    CocycleMismatch(String),

    #[error("module verification failed: {0}")]
    NotAModule(String),

    #[error("unable to split module further (dim {dim}, commutant dim {commutant})")]
    SplitFailed { dim: usize, commutant: usize },

    #[error("degenerate metric: {0}")]
    DegenerateMetric(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
