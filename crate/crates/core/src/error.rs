use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    BadFormat(String),
    #[error("set {0} appears more than once")]
    DuplicateSet(String),
    #[error("element {element} outside ground set 1..={m}")]
    BadElement { element: usize, m: usize },
    #[error("ground set of {0} elements exceeds the cap of {cap}", cap = crate::family::MAX_ELEMENTS)]
    CapExceeded(usize),
    #[error("family contains the odd set {0}")]
    NotEvenFamily(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("element {0} belongs to Y")]
    BadPair(usize),
    #[error("family is empty")]
    EmptyFamily,
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("clique search exceeded {0} nodes")]
    CliqueBudgetExceeded(u64),
    #[error("dimension search exceeded its budget ({reason}); best lower bound {lower_bound}")]
    SearchBudgetExceeded { reason: String, lower_bound: usize },
    #[error("table mismatch: {}", .0.join("; "))]
    TableMismatch(Vec<String>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
