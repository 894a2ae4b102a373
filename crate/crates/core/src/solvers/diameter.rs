//! α = 0 with β ∈ {1, 2, 3}: everything happens on the dirty columns, the
//! columns holding both a known 0 and a known 1.

use crate::conrmc::{solve_conrmc01, ConrmcInstance};
use crate::error::Result;
use crate::matrix::{dirty_columns, Cell, CompleteMatrix, DmcInstance, IncompleteMatrix, RowVector, Verdict};
use crate::oracle::{solve_backtracking, SearchBudget};

use super::{complete_with, embed_columns, fill_uniform, into_complete, require_bounds};

/// Up to this many dirty columns d0b2 searches directly.
const D0B2_SEARCH_LIMIT: usize = 4;
/// Up to this many dirty columns d0b3 searches directly.
const D0B3_SEARCH_LIMIT: usize = 13;

pub fn solve_d0b1(inst: &DmcInstance) -> Result<Verdict> {
    require_bounds(inst, "d0b1", 0, 1)?;
    let s = inst.matrix();
    let dirty = dirty_columns(s);
    if dirty.len() > 1 {
        return Ok(Verdict::No);
    }
    let clean = (0..s.num_cols()).filter(|j| !dirty.contains(j));
    let mut out = fill_uniform(s, clean);
    for &j in &dirty {
        let (zeros, ones) = s.column_counts(j);
        let majority = Cell::from_bit(ones > zeros);
        for i in 0..s.num_rows() {
            if out.get(i, j) == Cell::Missing {
                out.set(i, j, majority);
            }
        }
    }
    Ok(Verdict::Yes(into_complete(out)))
}

/// The dirty columns of `s` and `s` restricted to them.
fn dirty_part(s: &IncompleteMatrix) -> (Vec<usize>, IncompleteMatrix) {
    let dirty: Vec<usize> = dirty_columns(s).into_iter().collect();
    let sub = s.select_columns(&dirty).expect("dirty columns are in range");
    (dirty, sub)
}

/// Puts a completion of the dirty part back into the full matrix.
fn lift(s: &IncompleteMatrix, dirty: &[usize], sub: &CompleteMatrix) -> CompleteMatrix {
    let clean = (0..s.num_cols()).filter(|j| dirty.binary_search(j).is_err());
    into_complete(embed_columns(&fill_uniform(s, clean), sub, dirty))
}

fn search(sub: &IncompleteMatrix, beta: usize, budget: SearchBudget) -> Result<Option<CompleteMatrix>> {
    let inst = DmcInstance::new(sub.clone(), 0, beta)?;
    Ok(match solve_backtracking(&inst, budget)? {
        Verdict::Yes(t) => Some(t),
        Verdict::No => None,
    })
}

/// Diameter ≤ 2 on the dirty part: a radius-1 center when there are at
/// least five dirty columns.
fn diameter2(sub: &IncompleteMatrix, budget: SearchBudget) -> Result<Option<CompleteMatrix>> {
    if sub.num_cols() <= D0B2_SEARCH_LIMIT {
        return search(sub, 2, budget);
    }
    let c = ConrmcInstance::new(sub.clone(), vec![1; sub.num_rows()])?;
    Ok(solve_conrmc01(&c)?.map(|v| complete_with(sub, &v)))
}

pub fn solve_d0b2(inst: &DmcInstance, budget: SearchBudget) -> Result<Verdict> {
    require_bounds(inst, "d0b2", 0, 2)?;
    let s = inst.matrix();
    let (dirty, sub) = dirty_part(s);
    Ok(match diameter2(&sub, budget)? {
        Some(t) => Verdict::Yes(lift(s, &dirty, &t)),
        None => Verdict::No,
    })
}

pub fn solve_d0b3(inst: &DmcInstance, budget: SearchBudget) -> Result<Verdict> {
    require_bounds(inst, "d0b3", 0, 3)?;
    let s = inst.matrix();
    let (dirty, sub) = dirty_part(s);
    let found = match diameter2(&sub, budget)? {
        Some(t) => Some(t),
        None if sub.num_cols() <= D0B3_SEARCH_LIMIT => search(&sub, 3, budget)?,
        None => drop_one_column(&sub)?.or(three_column_core(&sub)?),
    };
    Ok(match found {
        Some(t) => Verdict::Yes(lift(s, &dirty, &t)),
        None => Verdict::No,
    })
}

/// First shape: all rows within distance 1 of a center once some column j
/// is ignored. Column j's missing cells get 0.
fn drop_one_column(sub: &IncompleteMatrix) -> Result<Option<CompleteMatrix>> {
    let ell = sub.num_cols();
    for j in 0..ell {
        let rest: Vec<usize> = (0..ell).filter(|&q| q != j).collect();
        let reduced = sub.select_columns(&rest)?;
        let c = ConrmcInstance::new(reduced, vec![1; sub.num_rows()])?;
        if let Some(v) = solve_conrmc01(&c)? {
            let mut center = RowVector::zeros(ell);
            for (q, &col) in rest.iter().enumerate() {
                center.set_bit(col, v.bit(q));
            }
            return Ok(Some(complete_with(sub, &center)));
        }
    }
    Ok(None)
}

/// Second shape: three columns j1 < j2 < j3 with values v1 v2 v3. A row
/// disagreeing with some v_t must match the center exactly elsewhere; the
/// others may be one off. No row may disagree with all three.
fn three_column_core(sub: &IncompleteMatrix) -> Result<Option<CompleteMatrix>> {
    let (n, ell) = (sub.num_rows(), sub.num_cols());
    for j1 in 0..ell {
        for j2 in j1 + 1..ell {
            for j3 in j2 + 1..ell {
                let core = [j1, j2, j3];
                let rest: Vec<usize> = (0..ell).filter(|q| !core.contains(q)).collect();
                let reduced = sub.select_columns(&rest)?;
                for code in 0..8u8 {
                    let vals = [code & 4 != 0, code & 2 != 0, code & 1 != 0];
                    let against = |i: usize| {
                        core.iter()
                            .zip(vals)
                            .filter(|&(&j, v)| sub.get(i, j) == Cell::from_bit(!v))
                            .count()
                    };
                    let counts: Vec<usize> = (0..n).map(against).collect();
                    if counts.contains(&3) {
                        continue;
                    }
                    let radii = counts.iter().map(|&c| u8::from(c == 0)).collect();
                    let c = ConrmcInstance::new(reduced.clone(), radii)?;
                    if let Some(w) = solve_conrmc01(&c)? {
                        let mut center = RowVector::zeros(ell);
                        for (q, &col) in rest.iter().enumerate() {
                            center.set_bit(col, w.bit(q));
                        }
                        for (&j, v) in core.iter().zip(vals) {
                            center.set_bit(j, v);
                        }
                        return Ok(Some(complete_with(sub, &center)));
                    }
                }
            }
        }
    }
    Ok(None)
}
