//! Few missing entries per row: k = 1, and k = 2 with α = β, both by 2-SAT.
//!
//! Pair offsets are added to every pair distance.

use crate::error::{DmcError, Result};
use crate::matrix::{CompleteMatrix, DmcInstance, RowVector, Verdict};
use crate::oracle::zero_filled;
use crate::twosat::{Literal, TwoSatFormula};

use super::solve_n2;

/// One variable per incomplete row, x_i = the value written into its hole.
pub fn solve_k1(inst: &DmcInstance) -> Result<Verdict> {
    if inst.k() > 1 {
        return Err(DmcError::regime("k1", "a row has more than one missing entry"));
    }
    let s = inst.matrix();
    let n = s.num_rows();
    let (alpha, beta) = (inst.alpha(), inst.beta());
    let hole: Vec<Option<usize>> = s.rows().iter().map(|r| r.missing_positions().first().copied()).collect();
    let mut var = vec![usize::MAX; n];
    let mut count = 0;
    for i in 0..n {
        if hole[i].is_some() {
            var[i] = count;
            count += 1;
        }
    }
    let mut f = TwoSatFormula::new(count);
    // "x_i = b" and "x_i ≠ b".
    let is = |i: usize, b: bool| Literal::is(var[i], b);
    let not = |i: usize, b: bool| Literal::is(var[i], !b);

    for i in 0..n {
        for i2 in i + 1..n {
            let (u, w) = (s.row(i), s.row(i2));
            let d = u.distance(w) + inst.offsets().get(i, i2);
            if d + 2 < alpha || d > beta {
                return Ok(Verdict::No);
            }
            // Value of the other row at this row's hole.
            let at_i = hole[i].map(|j| w.bit(j));
            let at_i2 = hole[i2].map(|j| u.bit(j));
            let same_col = hole[i].is_some() && hole[i] == hole[i2];

            if d + 2 == alpha {
                match (at_i, at_i2) {
                    (Some(a), Some(b)) if !same_col => {
                        f.add_unit(not(i, a));
                        f.add_unit(not(i2, b));
                    }
                    _ => return Ok(Verdict::No),
                }
            } else if d + 1 == alpha {
                match (hole[i], hole[i2]) {
                    (None, None) => return Ok(Verdict::No),
                    (Some(_), None) => f.add_unit(not(i, at_i.unwrap())),
                    (None, Some(_)) => f.add_unit(not(i2, at_i2.unwrap())),
                    _ if same_col => {
                        f.add_clause(Literal::pos(var[i]), Literal::pos(var[i2]));
                        f.add_clause(Literal::neg(var[i]), Literal::neg(var[i2]));
                    }
                    _ => f.add_clause(not(i, at_i.unwrap()), not(i2, at_i2.unwrap())),
                }
            }

            if d == beta {
                match (hole[i], hole[i2]) {
                    (None, None) => {}
                    (Some(_), None) => f.add_unit(is(i, at_i.unwrap())),
                    (None, Some(_)) => f.add_unit(is(i2, at_i2.unwrap())),
                    _ if same_col => f.add_equal(Literal::pos(var[i]), Literal::pos(var[i2])),
                    _ => {
                        f.add_unit(is(i, at_i.unwrap()));
                        f.add_unit(is(i2, at_i2.unwrap()));
                    }
                }
            } else if d + 1 == beta && !same_col {
                if let (Some(a), Some(b)) = (at_i, at_i2) {
                    f.add_clause(is(i, a), is(i2, b));
                }
            }
        }
    }

    let Some(asg) = f.solve() else {
        return Ok(Verdict::No);
    };
    let rows = (0..n)
        .map(|i| {
            let mut r = zero_filled(s.row(i));
            if let Some(j) = hole[i] {
                r.set_bit(j, asg[var[i]]);
            }
            r
        })
        .collect();
    Ok(Verdict::Yes(CompleteMatrix::new(rows)?))
}

/// A row after the pivot is fixed, in coordinates where the pivot is 0^ℓ.
#[derive(Clone, Debug)]
enum Normalized {
    Fixed(RowVector),
    /// Two holes at (a, b): true writes (1, 0), false writes (0, 1).
    Choice { base: RowVector, a: usize, b: usize, var: usize },
}

impl Normalized {
    fn realize(&self, value: bool) -> RowVector {
        match self {
            Normalized::Fixed(r) => r.clone(),
            Normalized::Choice { base, a, b, .. } => {
                let mut r = base.clone();
                r.set_bit(*a, value);
                r.set_bit(*b, !value);
                r
            }
        }
    }

    fn var(&self) -> Option<usize> {
        match self {
            Normalized::Fixed(_) => None,
            Normalized::Choice { var, .. } => Some(*var),
        }
    }
}

/// k ≤ 2 and α = β. For every completion of the last row (the pivot), each
/// other row must sit at distance exactly α from it, which fixes all
/// holes except two-hole rows needing a single 1; those become variables.
pub fn solve_k2eq(inst: &DmcInstance) -> Result<Verdict> {
    if inst.k() > 2 {
        return Err(DmcError::regime("k2eq", "a row has more than two missing entries"));
    }
    if inst.alpha() != inst.beta() {
        return Err(DmcError::regime("k2eq", "needs alpha = beta"));
    }
    let s = inst.matrix();
    let n = s.num_rows();
    if n <= 2 {
        return solve_n2(inst);
    }
    let pivot = s.row(n - 1);
    let holes = pivot.missing_positions();
    let h = holes.len();
    for code in 0..1u32 << h {
        let mut p = zero_filled(pivot);
        for (q, &j) in holes.iter().enumerate() {
            p.set_bit(j, code >> (h - 1 - q) & 1 == 1);
        }
        if let Some(t) = with_pivot(inst, &p) {
            return Ok(Verdict::Yes(t));
        }
    }
    Ok(Verdict::No)
}

fn with_pivot(inst: &DmcInstance, p: &RowVector) -> Option<CompleteMatrix> {
    let s = inst.matrix();
    let n = s.num_rows();
    let alpha = inst.alpha();
    let offs = inst.offsets();
    let ones: Vec<usize> = (0..p.len()).filter(|&j| p.bit(j)).collect();

    let mut vars = 0;
    let mut rows = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        let r = s.row(i).flipped(ones.iter().copied());
        let miss = r.missing_positions();
        let d = r.distance(&RowVector::zeros(r.len())) + offs.get(i, n - 1);
        if d > alpha || d + miss.len() < alpha {
            return None;
        }
        let need = alpha - d;
        let mut base = zero_filled(&r);
        rows.push(match (miss.len(), need) {
            (2, 1) => {
                vars += 1;
                Normalized::Choice {
                    base,
                    a: miss[0],
                    b: miss[1],
                    var: vars - 1,
                }
            }
            _ => {
                for &j in &miss {
                    base.set_bit(j, need > 0);
                }
                Normalized::Fixed(base)
            }
        });
    }

    let mut f = TwoSatFormula::new(vars);
    for i in 0..n - 1 {
        for i2 in i + 1..n - 1 {
            let off = offs.get(i, i2);
            let fails = |a: bool, b: bool| rows[i].realize(a).distance(&rows[i2].realize(b)) + off != alpha;
            match (rows[i].var(), rows[i2].var()) {
                (None, None) => {
                    if fails(false, false) {
                        return None;
                    }
                }
                (Some(x), None) => {
                    for a in [false, true] {
                        if fails(a, false) {
                            f.add_unit(Literal::is(x, !a));
                        }
                    }
                }
                (None, Some(y)) => {
                    for b in [false, true] {
                        if fails(false, b) {
                            f.add_unit(Literal::is(y, !b));
                        }
                    }
                }
                (Some(x), Some(y)) => {
                    for a in [false, true] {
                        for b in [false, true] {
                            if fails(a, b) {
                                f.add_clause(Literal::is(x, !a), Literal::is(y, !b));
                            }
                        }
                    }
                }
            }
        }
    }

    let asg = f.solve()?;
    let mut out: Vec<RowVector> = rows
        .iter()
        .map(|r| r.realize(r.var().is_some_and(|v| asg[v])).flipped(ones.iter().copied()))
        .collect();
    out.push(p.clone());
    Some(CompleteMatrix::new(out).expect("rows are complete"))
}
