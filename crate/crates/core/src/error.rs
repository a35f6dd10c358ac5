use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty product")]
    EmptyProduct,

    #[error("index {index} out of range for `{set}` of size {size}")]
    IndexOutOfRange {
        set: String,
        index: usize,
        size: usize,
    },

    #[error("map table entry {entry} at position {position} exceeds codomain size {size}")]
    NotTotal {
        position: usize,
        entry: usize,
        size: usize,
    },

    #[error("sigma value {value} at position {position} is outside 1..={n}")]
    SigmaOutOfRange {
        position: usize,
        value: usize,
        n: usize,
    },

    #[error(
        "enumeration of `{what}` needs {needed} but the budget is {budget}; use sampled mode"
    )]
    BudgetExceeded {
        what: String,
        needed: String,
        budget: String,
    },

    #[error("type mismatch: expected {expected}, found {found}")]
    TypeMismatch { expected: String, found: String },

    #[error("monad mismatch: expected {expected}, found {found}")]
    MonadMismatch { expected: String, found: String },

    #[error("arity {0} is not supported (expected 1, 2 or 3)")]
    Arity(usize),

    #[error("rewrite rule `{rule}` does not apply: {reason}")]
    RuleNotApplicable { rule: &'static str, reason: String },

    #[error("malformed tree: {0}")]
    MalformedTree(String),

    #[error("unresolved leaf: {0}")]
    UnresolvedLeaf(String),
}

impl Error {
    pub(crate) fn mismatch(expected: impl ToString, found: impl ToString) -> Self {
        Error::TypeMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}
