//! Diameter matrix completion over {0, 1, ?}: fill every missing cell so
//! that all pairwise row Hamming distances fall in [α, β].
//!
//! The crate holds the matrix model, exact reference oracles, the
//! polynomial algorithms for the tractable parameter regimes, and the
//! hardness constructions as instance generators.

pub mod conrmc;
pub mod error;
pub mod factor;
pub mod gadgets;
pub mod matrix;
pub mod oracle;
pub mod sets;
pub mod solvers;
pub mod twosat;

pub use error::{DmcError, Result};
pub use matrix::{
    apply_completion, diameter_stats, dirty_columns, disagreement_set, first_violation, hamming_distance,
    restricted_distance, verify_instance, Cell, ColumnSet, CompleteMatrix, DiameterStats, DmcInstance,
    IncompleteMatrix, PairOffsets, RowVector, Verdict, Violation,
};
pub use oracle::{solve_backtracking, solve_exhaustive, SearchBudget};
pub use solvers::{solve, solve_with, SolverChoice};
