//! Exact reference solvers: plain enumeration of all completions and a
//! row-by-row backtracking search with distance-bound pruning.

use crate::error::{DmcError, Result};
use crate::matrix::{CompleteMatrix, DmcInstance, RowVector, Verdict};

/// Upper limit on the number of search states one call may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl SearchBudget {
    pub const DEFAULT_NODES: u64 = 10_000_000;

    pub fn new(max_nodes: u64) -> Self {
        SearchBudget { max_nodes }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(Self::DEFAULT_NODES)
    }
}

pub(crate) struct Counter {
    used: u64,
    max: u64,
}

impl Counter {
    pub(crate) fn new(budget: SearchBudget) -> Self {
        Counter {
            used: 0,
            max: budget.max_nodes,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.max {
            Err(DmcError::BudgetExceeded(self.max))
        } else {
            Ok(())
        }
    }

    /// What is left, for handing to a nested search.
    pub(crate) fn remaining(&self) -> SearchBudget {
        SearchBudget::new(self.max.saturating_sub(self.used))
    }
}

/// Range of distances (offset included) reachable by completing `u` and `w`.
#[inline]
pub(crate) fn pair_bounds(u: &RowVector, w: &RowVector, offset: usize) -> (usize, usize) {
    let lo = u.distance(w) + offset;
    (lo, lo + u.free_positions_with(w))
}

/// Missing cells set to 0, so the row can be edited bit by bit.
pub(crate) fn zero_filled(r: &RowVector) -> RowVector {
    let mut out = RowVector::zeros(r.len());
    for j in 0..r.len() {
        if r.bit(j) {
            out.set_bit(j, true);
        }
    }
    out
}

fn pair_ok(inst: &DmcInstance, rows: &[RowVector], a: usize, b: usize) -> bool {
    let d = rows[a].distance(&rows[b]) + inst.offsets().get(a, b);
    inst.alpha() <= d && d <= inst.beta()
}

/// Tries all 2^M completions in lexicographic order (missing cells taken
/// row-major, the first one most significant, 0 before 1) and returns the
/// first that satisfies the bounds.
pub fn solve_exhaustive(inst: &DmcInstance, budget: SearchBudget) -> Result<Verdict> {
    let s = inst.matrix();
    let n = s.num_rows();
    let positions: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| s.row(i).missing_positions().into_iter().map(move |j| (i, j)))
        .collect();
    let m = positions.len();
    let mut rows: Vec<RowVector> = s.rows().iter().map(zero_filled).collect();
    let mut counter = Counter::new(budget);
    // With 64 or more cells the budget always runs out before the counter wraps.
    let total: Option<u64> = (m < 64).then(|| 1u64 << m);
    let mut code: u64 = 0;
    loop {
        counter.tick()?;
        if (0..n).all(|a| (a + 1..n).all(|b| pair_ok(inst, &rows, a, b))) {
            return Ok(Verdict::Yes(CompleteMatrix::new(rows)?));
        }
        code += 1;
        if Some(code) == total {
            return Ok(Verdict::No);
        }
        // Bits that change on increment are the trailing ones plus one.
        for t in 0..=code.trailing_zeros() as usize {
            let (i, j) = positions[m - 1 - t];
            rows[i].set_bit(j, code >> t & 1 == 1);
        }
    }
}

struct Search<'a> {
    inst: &'a DmcInstance,
    /// Rows in processing order; complete rows come first.
    order: Vec<usize>,
    missing: Vec<Vec<usize>>,
    /// Earlier interchangeable row in `order`, used to break symmetry.
    twin: Vec<Option<usize>>,
    mask_of: Vec<u64>,
    current: Vec<RowVector>,
    assigned: Vec<bool>,
    counter: &'a mut Counter,
}

impl Search<'_> {
    fn fits(&self, r: usize, cand: &RowVector) -> bool {
        let (alpha, beta) = (self.inst.alpha(), self.inst.beta());
        let offs = self.inst.offsets();
        for u in 0..self.current.len() {
            if u == r {
                continue;
            }
            if self.assigned[u] {
                let d = cand.distance(&self.current[u]) + offs.get(r, u);
                if d < alpha || d > beta {
                    return false;
                }
            } else {
                let (lo, hi) = pair_bounds(cand, &self.current[u], offs.get(r, u));
                if lo > beta || hi < alpha {
                    return false;
                }
            }
        }
        true
    }

    fn descend(&mut self, t: usize) -> Result<bool> {
        if t == self.order.len() {
            return Ok(true);
        }
        let r = self.order[t];
        let k = self.missing[r].len();
        let start = self.twin[r].map_or(0, |p| self.mask_of[p]);
        let original = self.current[r].clone();
        let mut cand = zero_filled(&original);
        for mask in start..(1u64 << k) {
            self.counter.tick()?;
            for (q, &j) in self.missing[r].iter().enumerate() {
                cand.set_bit(j, mask >> (k - 1 - q) & 1 == 1);
            }
            if !self.fits(r, &cand) {
                continue;
            }
            self.current[r] = cand.clone();
            self.assigned[r] = true;
            self.mask_of[r] = mask;
            if self.descend(t + 1)? {
                return Ok(true);
            }
            self.assigned[r] = false;
        }
        self.current[r] = original;
        Ok(false)
    }
}

/// Row-by-row search. Each incomplete row tries its 2^(missing) fills;
/// a fill is rejected when it breaks a bound against a completed row, or
/// when no completion of a pending row could bring their distance into
/// range. Interchangeable rows (same pattern, same offsets) are filled in
/// non-decreasing order.
pub fn solve_backtracking(inst: &DmcInstance, budget: SearchBudget) -> Result<Verdict> {
    backtrack_counted(inst, &mut Counter::new(budget))
}

/// `solve_backtracking` charging its nodes to a caller's counter.
pub(crate) fn backtrack_counted(inst: &DmcInstance, counter: &mut Counter) -> Result<Verdict> {
    let s = inst.matrix();
    let n = s.num_rows();
    let offs = inst.offsets();
    for a in 0..n {
        for b in a + 1..n {
            let (lo, hi) = pair_bounds(s.row(a), s.row(b), offs.get(a, b));
            if lo > inst.beta() || hi < inst.alpha() {
                return Ok(Verdict::No);
            }
        }
    }
    let missing: Vec<Vec<usize>> = s.rows().iter().map(RowVector::missing_positions).collect();
    if let Some(r) = missing.iter().position(|m| m.len() >= 64) {
        return Err(DmcError::InvalidParameter(format!(
            "row {} has {} missing cells, too many to enumerate",
            r + 1,
            missing[r].len()
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (missing[i].len(), i));
    let first_open = order.iter().position(|&i| !missing[i].is_empty()).unwrap_or(n);

    let mut twin = vec![None; n];
    for t in first_open..n {
        let r = order[t];
        twin[r] = order[first_open..t].iter().rev().copied().find(|&p| {
            s.row(p) == s.row(r) && (0..n).all(|x| x == p || x == r || offs.get(p, x) == offs.get(r, x))
        });
    }

    let mut assigned = vec![false; n];
    for &i in &order[..first_open] {
        assigned[i] = true;
    }
    let mut search = Search {
        inst,
        order: order[first_open..].to_vec(),
        missing,
        twin,
        mask_of: vec![0; n],
        current: s.rows().to_vec(),
        assigned,
        counter,
    };
    if search.descend(0)? {
        let t = CompleteMatrix::new(search.current)?;
        debug_assert!(crate::matrix::verify_instance(inst, &t).unwrap());
        Ok(Verdict::Yes(t))
    } else {
        Ok(Verdict::No)
    }
}
