//! α = β and β = α + 1 via sunflower matrix completion (SMC).
//!
//! Once there are enough rows, the difference sets to a reference row of
//! any valid completion form a sunflower. Appending an all-missing row that
//! plays the role of the reference turns the question into an SMC
//! instance with an empty core.

use std::collections::BTreeSet;

use crate::error::{DmcError, Result};
use crate::factor::{solve_smc, SmcInstance};
use crate::matrix::{
    verify_instance, Cell, CompleteMatrix, DmcInstance, IncompleteMatrix, PairOffsets, RowVector, Verdict,
};
use crate::oracle::{backtrack_counted, solve_backtracking, zero_filled, Counter, SearchBudget};

use super::{require_plain, solve_d0b1, solve_n2};

fn eq_threshold(alpha: usize) -> usize {
    let h = alpha / 2;
    h * h + h + 3
}

fn odd_threshold(beta: usize) -> usize {
    beta * beta / 2 + beta + 7
}

/// ⌈(β/2)² + β/2 + 4⌉ for odd β.
fn even_c(beta: usize) -> usize {
    (beta * beta + 2 * beta + 16).div_ceil(4)
}

pub(crate) fn alpha_eq_beta_is_structural(alpha: usize, n: usize) -> bool {
    (alpha % 2 == 1 && n >= 3) || n >= eq_threshold(alpha)
}

pub(crate) fn alpha_plus1_is_structural(alpha: usize, n: usize) -> bool {
    match alpha {
        0 => true,
        a if a % 2 == 1 => n >= odd_threshold(a + 1),
        a => n > 2 * even_c(a + 1),
    }
}

/// SMC on `s` plus an all-missing last row; the witness drops that row.
fn sunflower_completion(s: &IncompleteMatrix, petal: usize, total: usize) -> Result<Verdict> {
    let n = s.num_rows();
    let ext = s.with_row(RowVector::missing(s.num_cols()))?;
    Ok(match solve_smc(&SmcInstance { matrix: ext, s: petal, m: total }) {
        Some(t) => Verdict::Yes(t.select_rows(&(0..n).collect::<Vec<_>>())?),
        None => Verdict::No,
    })
}

pub fn solve_alpha_eq_beta(inst: &DmcInstance, budget: SearchBudget) -> Result<Verdict> {
    require_plain(inst, "alpha_eq_beta")?;
    let alpha = inst.alpha();
    if alpha != inst.beta() {
        return Err(DmcError::regime("alpha_eq_beta", "needs alpha = beta"));
    }
    let n = inst.num_rows();
    if n <= 2 {
        return solve_n2(inst);
    }
    if alpha % 2 == 1 {
        // d(u,v) + d(v,w) + d(w,u) is even for any three rows.
        return Ok(Verdict::No);
    }
    if !alpha_eq_beta_is_structural(alpha, n) {
        return solve_backtracking(inst, budget);
    }
    sunflower_completion(inst.matrix(), alpha / 2, alpha * n / 2)
}

pub fn solve_alpha_plus1(inst: &DmcInstance, budget: SearchBudget) -> Result<Verdict> {
    check_plus1(inst)?;
    let alpha = inst.alpha();
    if inst.num_rows() <= 2 {
        return solve_n2(inst);
    }
    if alpha == 0 {
        return solve_d0b1(inst);
    }
    if !alpha_plus1_is_structural(alpha, inst.num_rows()) {
        return solve_backtracking(inst, budget);
    }
    structural(inst, budget)
}

/// The large-n algorithm of `solve_alpha_plus1` run regardless of n.
///
/// Every `Yes` is a valid completion. A `No` is only reliable above the
/// row-count threshold where `solve_alpha_plus1` would use this path.
pub fn solve_alpha_plus1_structural(inst: &DmcInstance, budget: SearchBudget) -> Result<Verdict> {
    check_plus1(inst)?;
    if inst.alpha() == 0 {
        return solve_d0b1(inst);
    }
    structural(inst, budget)
}

fn check_plus1(inst: &DmcInstance) -> Result<()> {
    require_plain(inst, "alpha_plus1")?;
    if inst.beta() != inst.alpha() + 1 {
        return Err(DmcError::regime("alpha_plus1", "needs beta = alpha + 1"));
    }
    Ok(())
}

fn structural(inst: &DmcInstance, budget: SearchBudget) -> Result<Verdict> {
    let (s, alpha, n) = (inst.matrix(), inst.alpha(), inst.num_rows());
    if alpha % 2 == 1 {
        // One petal may come up a single column short.
        let half = (alpha + 1) / 2;
        return sunflower_completion(s, half, n * half - 1);
    }
    let mut counter = Counter::new(budget);
    if let Some(t) = drop_column(inst, &mut counter)? {
        return Ok(Verdict::Yes(t));
    }
    let found = shared_core(inst, &mut counter)?;
    Ok(found.map_or(Verdict::No, Verdict::Yes))
}

/// Both strata large: some column j carries the extra core element, and
/// the rest is an (α, α) instance.
fn drop_column(inst: &DmcInstance, counter: &mut Counter) -> Result<Option<CompleteMatrix>> {
    let (s, alpha) = (inst.matrix(), inst.alpha());
    let ell = s.num_cols();
    for j in 0..ell {
        counter.tick()?;
        let rest: Vec<usize> = (0..ell).filter(|&q| q != j).collect();
        let sub = DmcInstance::new(s.select_columns(&rest)?, alpha, alpha)?;
        let verdict = if alpha_eq_beta_is_structural(alpha, sub.num_rows()) {
            solve_alpha_eq_beta(&sub, counter.remaining())?
        } else {
            backtrack_counted(&sub, counter)?
        };
        if let Verdict::Yes(t) = verdict {
            let rows = (0..s.num_rows())
                .map(|i| {
                    let mut r = RowVector::zeros(ell);
                    for (q, &col) in rest.iter().enumerate() {
                        r.set_bit(col, t.get(i, q));
                    }
                    r.set_bit(j, s.get(i, j) == Cell::One);
                    r
                })
                .collect();
            return Ok(Some(CompleteMatrix::new(rows)?));
        }
    }
    Ok(None)
}

/// k-subsets of 0..n in lexicographic order.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    fresh: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            fresh: k <= n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.fresh {
            self.fresh = false;
            return Some(self.idx.clone());
        }
        let k = self.idx.len();
        if k > self.n {
            return None;
        }
        let pos = (0..k).rev().find(|&p| self.idx[p] < self.n - k + p)?;
        self.idx[pos] += 1;
        for q in pos + 1..k {
            self.idx[q] = self.idx[q - 1] + 1;
        }
        Some(self.idx.clone())
    }
}

/// Cellwise union of rows; `None` if two known cells disagree.
fn merge<'a>(len: usize, rows: impl IntoIterator<Item = &'a RowVector>, cols: &[usize]) -> Option<RowVector> {
    let mut out = RowVector::missing(len);
    for r in rows {
        for (q, &j) in cols.iter().enumerate() {
            let c = r.get(j);
            if c == Cell::Missing {
                continue;
            }
            match out.get(q) {
                Cell::Missing => out.set(q, c),
                have if have != c => return None,
                _ => {}
            }
        }
    }
    Some(out)
}

/// For each core column, the value every row except `rho` takes there;
/// `rho` takes the opposite value.
fn core_values(s: &IncompleteMatrix, rho: usize, core: &[usize]) -> Option<Vec<bool>> {
    core.iter()
        .map(|&j| {
            let mut seen = None;
            for i in (0..s.num_rows()).filter(|&i| i != rho) {
                if let Some(b) = s.get(i, j).bit() {
                    if seen.is_some_and(|x| x != b) {
                        return None;
                    }
                    seen = Some(b);
                }
            }
            let own = s.get(rho, j).bit();
            match (seen, own) {
                (Some(b), Some(o)) if o == b => None,
                (Some(b), _) => Some(b),
                (None, Some(o)) => Some(!o),
                (None, None) => Some(true),
            }
        })
        .collect()
}

/// One stratum below c, so a reference row `rho` sees every other row
/// differ on a common core C of size α/2. Rows in I_β differ from `rho` by
/// one extra column inside a small set J_β; all other rows have pairwise
/// disjoint petals of size α/2 outside C ∪ J_β.
fn shared_core(inst: &DmcInstance, counter: &mut Counter) -> Result<Option<CompleteMatrix>> {
    let s = inst.matrix();
    let (n, ell, alpha) = (s.num_rows(), s.num_cols(), inst.alpha());
    let h = alpha / 2;
    let cap = even_c(alpha + 1) - 1;
    for rho in 0..n {
        let others: Vec<usize> = (0..n).filter(|&i| i != rho).collect();
        for core in Combinations::new(ell, h) {
            counter.tick()?;
            let Some(core_vals) = core_values(s, rho, &core) else {
                continue;
            };
            let outside: Vec<usize> = (0..ell).filter(|j| core.binary_search(j).is_err()).collect();
            let conflicts: Vec<Vec<usize>> = (0..n)
                .map(|i| {
                    if i == rho {
                        return Vec::new();
                    }
                    let (a, b) = (s.row(i), s.row(rho));
                    outside
                        .iter()
                        .copied()
                        .filter(|&j| a.is_known(j) && b.is_known(j) && a.bit(j) != b.bit(j))
                        .collect()
                })
                .collect();
            if conflicts.iter().any(|c| c.len() > h + 1) {
                continue;
            }
            let forced: Vec<usize> = others.iter().copied().filter(|&i| conflicts[i].len() > h).collect();
            if forced.len() > cap {
                continue;
            }
            let optional: Vec<usize> = others.iter().copied().filter(|i| !forced.contains(i)).collect();
            for extra in 0..=(cap - forced.len()).min(optional.len()) {
                for pick in Combinations::new(optional.len(), extra) {
                    let mut i_beta: Vec<usize> = forced.iter().copied().chain(pick.iter().map(|&p| optional[p])).collect();
                    i_beta.sort_unstable();
                    let j0: BTreeSet<usize> = i_beta.iter().flat_map(|&i| conflicts[i].iter().copied()).collect();
                    let bound = i_beta.len() * (h + 1);
                    if j0.len() > bound {
                        continue;
                    }
                    let spare: Vec<usize> = outside.iter().copied().filter(|j| !j0.contains(j)).collect();
                    for jextra in 0..=(bound - j0.len()).min(spare.len()) {
                        for pick_j in Combinations::new(spare.len(), jextra) {
                            counter.tick()?;
                            let mut j_beta: Vec<usize> = j0.iter().copied().chain(pick_j.iter().map(|&p| spare[p])).collect();
                            j_beta.sort_unstable();
                            let choice = Choice {
                                rho,
                                core: &core,
                                core_vals: &core_vals,
                                i_beta: &i_beta,
                                j_beta: &j_beta,
                            };
                            if let Some(t) = try_choice(inst, &choice, counter)? {
                                return Ok(Some(t));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

struct Choice<'a> {
    rho: usize,
    core: &'a [usize],
    core_vals: &'a [bool],
    i_beta: &'a [usize],
    j_beta: &'a [usize],
}

fn try_choice(inst: &DmcInstance, ch: &Choice<'_>, counter: &mut Counter) -> Result<Option<CompleteMatrix>> {
    let s = inst.matrix();
    let (n, ell, alpha) = (s.num_rows(), s.num_cols(), inst.alpha());
    let h = alpha / 2;
    let in_beta = |i: usize| ch.i_beta.binary_search(&i).is_ok();
    let rest: Vec<usize> = (0..n).filter(|&i| i != ch.rho && !in_beta(i)).collect();

    // On J_β every row outside I_β agrees with rho.
    let jl = ch.j_beta.len();
    let Some(reference) = merge(jl, std::iter::once(ch.rho).chain(rest.iter().copied()).map(|i| s.row(i)), ch.j_beta)
    else {
        return Ok(None);
    };
    let (beta_j, ref_j) = if ch.i_beta.is_empty() {
        (Vec::new(), zero_filled(&reference))
    } else {
        // Rows of I_β sit at distance α/2 + 1 from the reference and α from
        // each other; the offset shifts the first target onto α.
        let mut rows: Vec<RowVector> = ch.i_beta.iter().map(|&i| s.row(i).select(ch.j_beta)).collect();
        rows.push(reference);
        let m = rows.len();
        let offsets = PairOffsets::from_fn(m, |_, b| if b == m - 1 { h - 1 } else { 0 });
        let small = DmcInstance::with_offsets(IncompleteMatrix::new(rows)?, alpha, alpha, offsets)?;
        match backtrack_counted(&small, counter)? {
            Verdict::No => return Ok(None),
            Verdict::Yes(t) => {
                let mut rows = t.rows().to_vec();
                let last = rows.pop().expect("reference row present");
                (rows, last)
            }
        }
    };

    let r_cols: Vec<usize> = (0..ell)
        .filter(|j| ch.core.binary_search(j).is_err() && ch.j_beta.binary_search(j).is_err())
        .collect();
    let center_rows = std::iter::once(ch.rho).chain(ch.i_beta.iter().copied()).map(|i| s.row(i));
    let Some(center) = merge(r_cols.len(), center_rows, &r_cols) else {
        return Ok(None);
    };
    let mut smc_rows: Vec<RowVector> = rest.iter().map(|&i| s.row(i).select(&r_cols)).collect();
    smc_rows.push(center);
    let smc = SmcInstance {
        matrix: IncompleteMatrix::new(smc_rows)?,
        s: h,
        m: rest.len() * h,
    };
    let Some(petals) = solve_smc(&smc) else {
        return Ok(None);
    };

    let hub = rest.len();
    let mut rows = vec![RowVector::zeros(ell); n];
    for (i, row) in rows.iter_mut().enumerate() {
        for (q, &j) in ch.core.iter().enumerate() {
            row.set_bit(j, ch.core_vals[q] != (i == ch.rho));
        }
        let beta_pos = ch.i_beta.binary_search(&i).ok();
        let j_src = beta_pos.map_or(&ref_j, |p| &beta_j[p]);
        for (q, &j) in ch.j_beta.iter().enumerate() {
            row.set_bit(j, j_src.bit(q));
        }
        let r_src = rest.binary_search(&i).map_or(hub, |p| p);
        for (q, &j) in r_cols.iter().enumerate() {
            row.set_bit(j, petals.get(r_src, q));
        }
    }
    let t = CompleteMatrix::new(rows)?;
    debug_assert!(verify_instance(inst, &t)?, "shared-core assembly broke a bound");
    Ok(Some(t))
}
