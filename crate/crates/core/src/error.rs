use thiserror::Error;

use crate::board::Cell;

/// Errors raised by the library.
///
/// Negative mathematical answers (a disconnected graph, an exhausted search,
/// an infeasible board) are ordinary return values, never errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cell ({x},{y}) lies outside the {m}x{n} board", x = .cell.x, y = .cell.y)]
    OutOfBounds { cell: Cell, m: usize, n: usize },

    #[error("vertex ({x},{y}) has {degree} chosen edges, expected 2", x = .cell.x, y = .cell.y)]
    Degree { cell: Cell, degree: usize },

    #[error("invalid splice: {0}")]
    InvalidSplice(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("unsupported parameter: {0}")]
    Unsupported(String),

    #[error("parameter outside the supported range: {0}")]
    OutOfTheoremRange(String),

    #[error("parse error at row {row}, column {column}: {message}")]
    Parse { row: usize, column: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
