//! Closed-form cases: complete matrices and at most two rows.

use crate::error::{DmcError, Result};
use crate::matrix::{verify_instance, CompleteMatrix, DmcInstance, RowVector, Verdict};
use crate::oracle::zero_filled;

/// k = 0: the matrix is its own only completion.
pub fn solve_complete(inst: &DmcInstance) -> Result<Verdict> {
    let t = CompleteMatrix::try_from(inst.matrix().clone())
        .map_err(|_| DmcError::regime("complete", "matrix has missing entries"))?;
    Ok(if verify_instance(inst, &t)? {
        Verdict::Yes(t)
    } else {
        Verdict::No
    })
}

/// n ≤ 2. Pair offsets are added to the achievable distance range.
pub fn solve_n2(inst: &DmcInstance) -> Result<Verdict> {
    let s = inst.matrix();
    let n = s.num_rows();
    if n > 2 {
        return Err(DmcError::regime("n2", format!("needs at most 2 rows, got {n}")));
    }
    let mut rows: Vec<RowVector> = s.rows().iter().map(zero_filled).collect();
    if n < 2 {
        return Ok(Verdict::Yes(CompleteMatrix::new(rows)?));
    }
    let (u, w) = (s.row(0), s.row(1));
    let base = u.distance(w) + inst.offsets().get(0, 1);
    let free = u.free_positions_with(w);
    let target = inst.alpha().max(base);
    if target > inst.beta() || target > base + free {
        return Ok(Verdict::No);
    }
    // Free positions agree, except the first (target - base) of them.
    let mut need = target - base;
    for j in 0..s.num_cols() {
        if u.is_known(j) && w.is_known(j) {
            continue;
        }
        let differ = need > 0;
        need = need.saturating_sub(1);
        if w.is_known(j) {
            rows[0].set_bit(j, w.bit(j) != differ);
        } else {
            let own = rows[0].bit(j);
            rows[1].set_bit(j, own != differ);
        }
    }
    let t = CompleteMatrix::new(rows)?;
    debug_assert!(verify_instance(inst, &t)?);
    Ok(Verdict::Yes(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{IncompleteMatrix, PairOffsets};
    use crate::oracle::{solve_exhaustive, SearchBudget};

    fn inst(rows: &[&str], a: usize, b: usize) -> DmcInstance {
        DmcInstance::new(IncompleteMatrix::parse(rows).unwrap(), a, b).unwrap()
    }

    #[test]
    fn two_row_examples() {
        let v = solve_n2(&inst(&["0?", "11"], 2, 2)).unwrap();
        assert_eq!(v.witness().unwrap().to_string(), CompleteMatrix::parse(&["00", "11"]).unwrap().to_string());
        assert_eq!(solve_n2(&inst(&["00", "00"], 1, 2)).unwrap(), Verdict::No);
        for a in 0..=2 {
            for b in a..=2 {
                assert!(solve_n2(&inst(&["??", "??"], a, b)).unwrap().is_yes());
            }
        }
    }

    #[test]
    fn single_row_is_yes() {
        assert!(solve_n2(&inst(&["0?1"], 5, 9)).unwrap().is_yes());
    }

    #[test]
    fn rejects_three_rows() {
        assert!(solve_n2(&inst(&["0", "1", "0"], 0, 1)).is_err());
    }

    #[test]
    fn complete_check() {
        assert!(solve_complete(&inst(&["01", "10"], 2, 2)).unwrap().is_yes());
        assert_eq!(solve_complete(&inst(&["01", "10"], 0, 1)).unwrap(), Verdict::No);
        assert!(solve_complete(&inst(&["0?", "10"], 0, 1)).is_err());
    }

    #[test]
    fn agrees_with_enumeration_on_all_short_pairs() {
        let cells = ['0', '1', '?'];
        let b = SearchBudget::default();
        for code in 0..3usize.pow(6) {
            let mut c = code;
            let mut text = String::new();
            for _ in 0..6 {
                text.push(cells[c % 3]);
                c /= 3;
            }
            let rows = [&text[..3], &text[3..]];
            for off in 0..2 {
                for a in 0..=4 {
                    for bb in a..=4 {
                        let i = DmcInstance::with_offsets(
                            IncompleteMatrix::parse(&rows).unwrap(),
                            a,
                            bb,
                            PairOffsets::from_fn(2, |_, _| off),
                        )
                        .unwrap();
                        let got = solve_n2(&i).unwrap();
                        assert_eq!(got.is_yes(), solve_exhaustive(&i, b).unwrap().is_yes(), "{rows:?} {a} {bb} {off}");
                        if let Verdict::Yes(t) = got {
                            assert!(verify_instance(&i, &t).unwrap());
                        }
                    }
                }
            }
        }
    }
}
