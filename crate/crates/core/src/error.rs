use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("budget exceeded: {needed} candidate evaluations required, budget is {budget}")]
    Budget { needed: String, budget: u64 },

    #[error("gap collapsed: {0}")]
    GapCollapsed(String),

    #[error("invariant violated: {0}")]
    Violation(String),

    #[error("not a surface instance: {0}")]
    NotSurface(String),

    #[error("not in the commutator subgroup: {0}")]
    NotCommutator(String),

    /// Reached only through an implementation bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Error {
        Error::Input(msg.into())
    }

    pub(crate) fn violation(msg: impl Into<String>) -> Error {
        Error::Violation(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Error {
        Error::Parse { line, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
