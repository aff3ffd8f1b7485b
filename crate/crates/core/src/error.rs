use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Error)]
pub enum Error {
    #[error("operands use different variable lists")]
    VariableMismatch,
    #[error("division is not exact")]
    DivisionNotExact,
    #[error("bad specialization: {0}")]
    BadSpecialization(String),
    #[error("Laurent phenomenon violated at vertex {vertex}, column {column}")]
    LaurentViolation { vertex: usize, column: usize },
    #[error("symbolic budget of {budget} terms exhausted after {terms} terms (term count or multiplication work)")]
    SymbolicBudgetExceeded { terms: usize, budget: usize },
    #[error("quiver has an oriented cycle; no admissible order exists")]
    NoAdmissibleOrder,
    #[error("quiver is not valid: {0}")]
    InvalidQuiver(String),
    #[error("window [{lo}, {hi}] is outside the table (depth {depth})")]
    OutOfWindow { lo: i64, hi: i64, depth: usize },
    #[error("integer overflow in lattice computation")]
    IntegerOverflow,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
