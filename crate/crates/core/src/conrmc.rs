//! Center search with per-row radius 0 or 1, encoded as 2-SAT.
//!
//! One variable per column (true means the center holds 1 there). Radius 0
//! pins every known entry of the row. Radius 1 allows at most one known
//! entry to disagree; rows with few known entries use the pairwise
//! encoding, longer rows a sequential at-most-one ladder, which keeps the
//! formula linear in the input size.

use crate::error::{DmcError, Result};
use crate::matrix::{IncompleteMatrix, RowVector};
use crate::twosat::{Literal, TwoSatFormula};

/// Rows up to this many known entries get the quadratic pairwise clauses.
const PAIRWISE_LIMIT: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConrmcInstance {
    pub matrix: IncompleteMatrix,
    pub radii: Vec<u8>,
}

impl ConrmcInstance {
    pub fn new(matrix: IncompleteMatrix, radii: Vec<u8>) -> Result<Self> {
        if radii.len() != matrix.num_rows() {
            return Err(DmcError::InvalidParameter(format!(
                "{} radii for {} rows",
                radii.len(),
                matrix.num_rows()
            )));
        }
        Ok(ConrmcInstance { matrix, radii })
    }

    /// True iff `v` is within radius of every row.
    pub fn accepts(&self, v: &RowVector) -> bool {
        self.matrix
            .rows()
            .iter()
            .zip(&self.radii)
            .all(|(r, &rad)| r.distance(v) <= rad as usize)
    }
}

/// A complete center vector v with d(v, S[i]) ≤ r[i] for all rows, if any.
pub fn solve_conrmc01(inst: &ConrmcInstance) -> Result<Option<RowVector>> {
    let s = &inst.matrix;
    let ell = s.num_cols();
    let mut f = TwoSatFormula::new(ell);
    for (i, (row, &r)) in s.rows().iter().zip(&inst.radii).enumerate() {
        // "Column j disagrees with row i": v_j = 1 - S[i,j].
        let flips: Vec<Literal> = row
            .known_positions()
            .into_iter()
            .map(|j| Literal::is(j, !row.bit(j)))
            .collect();
        match r {
            0 => {
                for &y in &flips {
                    f.add_unit(y.negated());
                }
            }
            1 => at_most_one(&mut f, &flips),
            _ => return Err(DmcError::UnsupportedRadius { row: i, radius: r }),
        }
    }
    let Some(asg) = f.solve() else {
        return Ok(None);
    };
    let v = RowVector::from_bits(&asg[..ell]);
    debug_assert!(inst.accepts(&v));
    Ok(Some(v))
}

fn at_most_one(f: &mut TwoSatFormula, lits: &[Literal]) {
    if lits.len() <= PAIRWISE_LIMIT {
        for a in 0..lits.len() {
            for b in a + 1..lits.len() {
                f.add_clause(lits[a].negated(), lits[b].negated());
            }
        }
        return;
    }
    // s_t means "some literal among the first t+1 is true".
    let k = lits.len();
    let prefix: Vec<usize> = (0..k - 1).map(|_| f.new_var()).collect();
    f.add_clause(lits[0].negated(), Literal::pos(prefix[0]));
    for t in 1..k - 1 {
        f.add_clause(lits[t].negated(), Literal::pos(prefix[t]));
        f.add_clause(Literal::neg(prefix[t - 1]), Literal::pos(prefix[t]));
        f.add_clause(lits[t].negated(), Literal::neg(prefix[t - 1]));
    }
    f.add_clause(lits[k - 1].negated(), Literal::neg(prefix[k - 2]));
}
