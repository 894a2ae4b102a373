//! Cubic monotone 1-in-3 SAT into DMC with k = 3 and α = β.
//!
//! Rows 0..m are variables (hole a_i of width 2), rows m..2m are clauses
//! (hole b_i of width 3), row 2m is all zeros.

use crate::error::{DmcError, Result};
use crate::matrix::{Cell, CompleteMatrix, DmcInstance, IncompleteMatrix};

use super::bmatrix::GadgetStack;
use super::cnf::CnfFormula;

/// Starting value of α before the B blocks add their share.
const BASE_ALPHA: usize = 14;

#[derive(Clone, Debug)]
pub struct OneInThreeReduction {
    pub instance: DmcInstance,
    pub stack: GadgetStack,
    pub alpha: usize,
    m: usize,
}

/// Variable index and position (0..3) of each clause's literals.
fn clause_vars(phi: &CnfFormula) -> Vec<[usize; 3]> {
    phi.clauses()
        .iter()
        .map(|c| [CnfFormula::var(c[0]), CnfFormula::var(c[1]), CnfFormula::var(c[2])])
        .collect()
}

fn check(phi: &CnfFormula) -> Result<usize> {
    phi.validate_cubic_monotone()?;
    let m = phi.num_vars();
    if phi.num_clauses() != m {
        return Err(DmcError::FormulaShape(format!(
            "{m} variables but {} clauses",
            phi.num_clauses()
        )));
    }
    Ok(m)
}

/// The (2m + 1) × (5m + 1) matrix C.
pub fn one_in_three_matrix(phi: &CnfFormula) -> Result<IncompleteMatrix> {
    let m = check(phi)?;
    let width = 5 * m + 1;
    let mut c = IncompleteMatrix::parse(&vec!["0".repeat(width); 2 * m + 1])?;
    for i in 0..m {
        c.set(i, 2 * i, Cell::Missing);
        c.set(i, 2 * i + 1, Cell::Missing);
        c.set(i, 5 * m, Cell::One);
        for q in 0..3 {
            c.set(m + i, 2 * m + 3 * i + q, Cell::Missing);
        }
    }
    for (j, vars) in clause_vars(phi).iter().enumerate() {
        for (p, &x) in vars.iter().enumerate() {
            // 011, 101, 110 for positions 0, 1, 2
            for q in 0..3 {
                if q != p {
                    c.set(x, 2 * m + 3 * j + q, Cell::One);
                }
            }
            c.set(m + j, 2 * x, Cell::One);
        }
    }
    Ok(c)
}

pub fn reduce_1in3sat(phi: &CnfFormula) -> Result<OneInThreeReduction> {
    let c = one_in_three_matrix(phi)?;
    let m = phi.num_vars();
    let vars = clause_vars(phi);
    let contains = |x: usize, j: usize| vars[j].contains(&x);
    let mut stack = GadgetStack::new(2 * m + 1)?;
    let zero = 2 * m;
    for i in 0..m {
        stack.push(i, zero, 3)?;
        stack.push(m + i, zero, 5)?;
    }
    for i in 0..m {
        for i2 in i + 1..m {
            let shared_clauses = (0..m).filter(|&j| contains(i, j) && contains(i2, j)).count();
            stack.push(i, i2, shared_clauses)?;
            let shared_vars = vars[i].iter().filter(|&&x| contains(x, i2)).count();
            stack.push(m + i, m + i2, shared_vars + 3)?;
        }
    }
    for i in 0..m {
        for j in 0..m {
            stack.push(i, m + j, if contains(i, j) { 2 } else { 1 })?;
        }
    }
    let alpha = BASE_ALPHA + stack.common_shift();
    let instance = DmcInstance::with_offsets(c, alpha, alpha, stack.offsets())?;
    Ok(OneInThreeReduction { instance, stack, alpha, m })
}

impl OneInThreeReduction {
    /// a_i = 10 for true variables and 01 otherwise; b_j marks the true
    /// literal of clause j.
    pub fn completion_from_assignment(&self, phi: &CnfFormula, assignment: &[bool]) -> Result<CompleteMatrix> {
        if !phi.is_one_in_three_by(assignment) {
            return Err(DmcError::InvalidParameter("assignment is not 1-in-3".into()));
        }
        let m = self.m;
        let mut t = self.instance.matrix().clone();
        for (i, &x) in assignment.iter().enumerate() {
            t.set(i, 2 * i, Cell::from_bit(x));
            t.set(i, 2 * i + 1, Cell::from_bit(!x));
        }
        for (j, vars) in clause_vars(phi).iter().enumerate() {
            for (p, &x) in vars.iter().enumerate() {
                t.set(m + j, 2 * m + 3 * j + p, Cell::from_bit(assignment[x]));
            }
        }
        CompleteMatrix::try_from(t)
    }

    /// x_i is true iff a_i reads 10.
    pub fn decode(&self, t: &CompleteMatrix) -> Vec<bool> {
        (0..self.m).map(|i| t.get(i, 2 * i) && !t.get(i, 2 * i + 1)).collect()
    }

    pub fn materialize(&self, max_width: usize) -> Result<DmcInstance> {
        let extra = self.stack.materialize(max_width)?;
        DmcInstance::new(self.instance.matrix().hstack(&extra)?, self.alpha, self.alpha)
    }
}
