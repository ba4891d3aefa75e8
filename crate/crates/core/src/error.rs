use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index 0 is the t_lambda slot, not a coordinate")]
    IndexZero,
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("ladder scan exceeded {0} terms")]
    ScanOverflow(usize),
    #[error("step limit {0} reached before an extremal vector")]
    StepLimit(usize),
    #[error("node budget {0} exceeded")]
    NodeBudgetExceeded(usize),
    #[error("form budget {0} exceeded")]
    FormBudgetExceeded(usize),
    #[error("enumeration budget {0} exceeded")]
    BudgetExceeded(usize),
    #[error("family {family} needs regime {expected}, weight is {found}")]
    RegimeMismatch {
        family: String,
        expected: String,
        found: String,
    },
    #[error("support index {index} lies outside window {window}")]
    WindowViolation { index: i64, window: i64 },
    #[error("unsupported Cartan data ({c1}, {c2})")]
    UnsupportedCartan { c1: u32, c2: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
