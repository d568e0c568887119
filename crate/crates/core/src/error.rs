use thiserror::Error;

/// Errors raised by the library.
///
/// `TheoremFalsified` is reserved for computations where two independent
/// routes that must agree did not; every other variant is an input or
/// precondition problem.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),

    #[error("type {family} does not exist at rank {rank}")]
    UnsupportedRank { family: char, rank: usize },

    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight has {got} coordinates, rank is {expected}")]
    WeightLength { got: usize, expected: usize },

    #[error("Cartan types differ: {0} vs {1}")]
    CartanMismatch(String, String),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("no tableau model for type {0}")]
    NoModel(String),

    #[error("element {element} out of range for a crystal with {len} elements")]
    ElementOutOfRange { element: usize, len: usize },

    #[error("extremality is undefined for the empty subset")]
    EmptySubset,

    #[error("element {element} has no f_{color} edge")]
    EdgeAbsent { element: usize, color: usize },

    #[error("invalid crystal: {0}")]
    InvalidCrystal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("group has more than {0} elements")]
    GroupTooLarge(usize),

    #[error("product would have {needed} elements, budget is {budget}")]
    BudgetExceeded { needed: usize, budget: usize },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("theorem falsified: {0}")]
    TheoremFalsified(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
