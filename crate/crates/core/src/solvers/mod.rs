//! Per-regime exact algorithms and a dispatcher choosing among them.
//!
//! Every solver returns `Err(DmcError::Regime { .. })` when the instance is
//! outside the regime it handles, and `Err(DmcError::BudgetExceeded(_))`
//! when a bounded search gives up.

mod bounded;
mod diameter;
mod small;
mod sunflower;

use std::fmt;
use std::str::FromStr;

use crate::error::{DmcError, Result};
use crate::matrix::{verify_instance, Cell, CompleteMatrix, DmcInstance, IncompleteMatrix, RowVector, Verdict};
use crate::oracle::{solve_backtracking, solve_exhaustive, SearchBudget};

pub use bounded::{solve_k1, solve_k2eq};
pub use diameter::{solve_d0b1, solve_d0b2, solve_d0b3};
pub use small::{solve_complete, solve_n2};
pub use sunflower::{solve_alpha_eq_beta, solve_alpha_plus1, solve_alpha_plus1_structural};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolverChoice {
    Auto,
    Oracle,
    Backtrack,
    D0b1,
    D0b2,
    D0b3,
    AlphaEqBeta,
    AlphaPlus1,
    K1,
    K2eq,
}

impl SolverChoice {
    pub const ALL: [SolverChoice; 10] = [
        SolverChoice::Auto,
        SolverChoice::Oracle,
        SolverChoice::Backtrack,
        SolverChoice::D0b1,
        SolverChoice::D0b2,
        SolverChoice::D0b3,
        SolverChoice::AlphaEqBeta,
        SolverChoice::AlphaPlus1,
        SolverChoice::K1,
        SolverChoice::K2eq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SolverChoice::Auto => "auto",
            SolverChoice::Oracle => "oracle",
            SolverChoice::Backtrack => "backtrack",
            SolverChoice::D0b1 => "d0b1",
            SolverChoice::D0b2 => "d0b2",
            SolverChoice::D0b3 => "d0b3",
            SolverChoice::AlphaEqBeta => "alpha_eq_beta",
            SolverChoice::AlphaPlus1 => "alpha_plus1",
            SolverChoice::K1 => "k1",
            SolverChoice::K2eq => "k2eq",
        }
    }
}

impl fmt::Display for SolverChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolverChoice {
    type Err = DmcError;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('-', "_");
        SolverChoice::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| DmcError::InvalidParameter(format!("unknown solver {s:?}")))
    }
}

/// Runs `choice` on `inst` and also names the algorithm that decided.
/// `Auto` reports `"n2"` or `"complete"` for its two closed-form cases.
pub fn solve_with(inst: &DmcInstance, choice: SolverChoice, budget: SearchBudget) -> Result<(Verdict, &'static str)> {
    let route = match choice {
        SolverChoice::Auto => pick(inst),
        c => Route::Named(c),
    };
    let verdict = match route {
        Route::N2 => solve_n2(inst)?,
        Route::Complete => solve_complete(inst)?,
        Route::Named(c) => match c {
            SolverChoice::Auto => unreachable!("pick never returns Auto"),
            SolverChoice::Oracle => solve_exhaustive(inst, budget)?,
            SolverChoice::Backtrack => solve_backtracking(inst, budget)?,
            SolverChoice::D0b1 => solve_d0b1(inst)?,
            SolverChoice::D0b2 => solve_d0b2(inst, budget)?,
            SolverChoice::D0b3 => solve_d0b3(inst, budget)?,
            SolverChoice::AlphaEqBeta => solve_alpha_eq_beta(inst, budget)?,
            SolverChoice::AlphaPlus1 => solve_alpha_plus1(inst, budget)?,
            SolverChoice::K1 => solve_k1(inst)?,
            SolverChoice::K2eq => solve_k2eq(inst)?,
        },
    };
    if let Verdict::Yes(t) = &verdict {
        debug_assert!(verify_instance(inst, t)?, "{} produced an invalid witness", route.name());
    }
    Ok((verdict, route.name()))
}

pub fn solve(inst: &DmcInstance, choice: SolverChoice, budget: SearchBudget) -> Result<Verdict> {
    solve_with(inst, choice, budget).map(|(v, _)| v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Route {
    N2,
    Complete,
    Named(SolverChoice),
}

impl Route {
    fn name(self) -> &'static str {
        match self {
            Route::N2 => "n2",
            Route::Complete => "complete",
            Route::Named(c) => c.name(),
        }
    }
}

fn pick(inst: &DmcInstance) -> Route {
    use SolverChoice::*;
    let (alpha, beta) = (inst.alpha(), inst.beta());
    let n = inst.num_rows();
    let k = inst.k();
    let plain = !inst.has_offsets();
    if n <= 2 {
        return Route::N2;
    }
    if k == 0 {
        return Route::Complete;
    }
    let named = if plain && alpha == 0 && (1..=3).contains(&beta) {
        [D0b1, D0b2, D0b3][beta - 1]
    } else if alpha == beta {
        if plain && sunflower::alpha_eq_beta_is_structural(alpha, n) {
            AlphaEqBeta
        } else {
            match k {
                1 => K1,
                2 => K2eq,
                _ if plain => AlphaEqBeta,
                _ => Backtrack,
            }
        }
    } else if beta == alpha + 1 && plain && (k > 1 || sunflower::alpha_plus1_is_structural(alpha, n)) {
        AlphaPlus1
    } else if k == 1 {
        K1
    } else {
        Backtrack
    };
    Route::Named(named)
}

fn require_plain(inst: &DmcInstance, solver: &'static str) -> Result<()> {
    if inst.has_offsets() {
        return Err(DmcError::regime(solver, "pair offsets are not supported"));
    }
    Ok(())
}

fn require_bounds(inst: &DmcInstance, solver: &'static str, alpha: usize, beta: usize) -> Result<()> {
    require_plain(inst, solver)?;
    if inst.alpha() != alpha || inst.beta() != beta {
        return Err(DmcError::regime(
            solver,
            format!("needs (alpha, beta) = ({alpha}, {beta}), got ({}, {})", inst.alpha(), inst.beta()),
        ));
    }
    Ok(())
}

/// Completes every column listed in `columns` with its unique known value,
/// or 0 when the column is entirely missing. Other cells are left alone.
fn fill_uniform(s: &IncompleteMatrix, columns: impl IntoIterator<Item = usize>) -> IncompleteMatrix {
    let mut out = s.clone();
    for j in columns {
        let (_, ones) = s.column_counts(j);
        let value = Cell::from_bit(ones > 0);
        for i in 0..s.num_rows() {
            if s.get(i, j) == Cell::Missing {
                out.set(i, j, value);
            }
        }
    }
    out
}

/// Writes the columns of `sub` back into `base` at positions `columns`.
fn embed_columns(base: &IncompleteMatrix, sub: &CompleteMatrix, columns: &[usize]) -> IncompleteMatrix {
    let mut out = base.clone();
    for i in 0..base.num_rows() {
        for (q, &j) in columns.iter().enumerate() {
            out.set(i, j, Cell::from_bit(sub.get(i, q)));
        }
    }
    out
}

/// Every missing cell of `s` set to the corresponding bit of `v`.
fn complete_with(s: &IncompleteMatrix, v: &RowVector) -> CompleteMatrix {
    let rows = s
        .rows()
        .iter()
        .map(|r| crate::matrix::apply_completion(r, v).expect("center is complete and of equal length"))
        .collect();
    CompleteMatrix::new(rows).expect("rows are complete")
}

fn into_complete(s: IncompleteMatrix) -> CompleteMatrix {
    CompleteMatrix::try_from(s).expect("all cells were filled")
}
