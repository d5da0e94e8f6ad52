use alloc::string::String;

use crate::graph::VertexId;

/// Errors raised by graph construction, searches and constructive builders.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: VertexId, order: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A hypothesis the construction relies on does not hold for the input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A search ran past its step budget without reaching a verdict.
    #[error("search budget of {budget} steps exceeded")]
    BudgetExceeded { budget: u64 },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

macro_rules! invalid {
    ($($arg:tt)*) => {
        $crate::error::Error::InvalidInput(alloc::format!($($arg)*))
    };
}

macro_rules! precondition {
    ($($arg:tt)*) => {
        $crate::error::Error::Precondition(alloc::format!($($arg)*))
    };
}

pub(crate) use invalid;
pub(crate) use precondition;
