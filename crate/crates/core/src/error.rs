use thiserror::Error;

/// Errors raised by the data model, the solvers and the generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DmcError {
    #[error("row length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("dimension mismatch: expected {expected_rows}x{expected_cols}, got {rows}x{cols}")]
    DimensionMismatch {
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },

    #[error("column {index} out of range for width {width}")]
    ColumnOutOfRange { index: usize, width: usize },

    #[error("row {index} out of range for {rows} rows")]
    RowOutOfRange { index: usize, rows: usize },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("alpha ({alpha}) exceeds beta ({beta})")]
    BoundsOrder { alpha: usize, beta: usize },

    #[error("completion vector has a missing cell at column {0}")]
    IncompleteVector(usize),

    #[error("radius {radius} of row {row} is outside {{0, 1}}")]
    UnsupportedRadius { row: usize, radius: u8 },

    #[error("solver `{solver}` does not apply: {reason}")]
    Regime { solver: &'static str, reason: String },

    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("formula has the wrong shape: {0}")]
    FormulaShape(String),
}

impl DmcError {
    pub(crate) fn regime(solver: &'static str, reason: impl Into<String>) -> Self {
        DmcError::Regime {
            solver,
            reason: reason.into(),
        }
    }

    /// True for an exhausted search budget, which is an inconclusive
    /// outcome rather than a failure of the input.
    pub fn is_inconclusive(&self) -> bool {
        matches!(self, DmcError::BudgetExceeded(_))
    }
}

pub type Result<T, E = DmcError> = std::result::Result<T, E>;
