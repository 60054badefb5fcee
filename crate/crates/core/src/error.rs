use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("rewriting exceeded the budget of {budget} reduction steps")]
    StepBudgetExceeded { budget: u64 },

    #[error("generator {generator} is not below level {level}")]
    LevelViolation { level: usize, generator: usize },

    #[error("no nilpotence witness within bound {bound}")]
    NilpotenceBoundExceeded { bound: usize },

    #[error("operation requires a nonzero element")]
    ZeroElement,

    #[error("top-level constant q_N equals 1")]
    TopLevelConstantIsOne,

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("invalid algebra spec: {0}")]
    InvalidSpec(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("{0}")]
    Eval(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
