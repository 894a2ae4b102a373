//! Distance-shifting blocks: A^n makes one pair two closer than the rest,
//! B^n_{i,i'} makes one pair two farther.

use crate::error::{DmcError, Result};
use crate::matrix::{CompleteMatrix, IncompleteMatrix, PairOffsets};

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(DmcError::InvalidParameter(format!("gadget needs n >= 3, got {n}")));
    }
    Ok(())
}

fn check_pair(n: usize, i: usize, i2: usize) -> Result<()> {
    check_n(n)?;
    if i >= i2 || i2 >= n {
        return Err(DmcError::InvalidParameter(format!("need i < i' < {n}, got ({i}, {i2})")));
    }
    Ok(())
}

/// Rows of A^n in their standard order, width 2n − 1.
fn a_rows(n: usize) -> Vec<Vec<bool>> {
    let w = 2 * n - 1;
    let mut rows = vec![vec![false; w]; n];
    rows[0][0] = true;
    rows[1][1] = true;
    for (h, row) in rows.iter_mut().enumerate().skip(2) {
        row[..3].fill(true);
        row[3 + (h - 2)] = true;
        row[3 + (n - 2) + (h - 2)] = true;
    }
    rows
}

/// A^n: rows 0 and 1 at distance 2, every other pair at distance 4.
pub fn gen_a(n: usize) -> Result<CompleteMatrix> {
    check_n(n)?;
    CompleteMatrix::from_bits(&a_rows(n))
}

/// A^n with its close pair moved to rows (h, h'). The two indicator rows
/// go to h and h', the rest keep their relative order.
pub fn gen_a_swapped(n: usize, h: usize, h2: usize) -> Result<CompleteMatrix> {
    check_pair(n, h, h2)?;
    let mut src = a_rows(n).into_iter();
    let (first, second) = (src.next().unwrap(), src.next().unwrap());
    let mut rest = src;
    let rows: Vec<Vec<bool>> = (0..n)
        .map(|p| match p {
            _ if p == h => first.clone(),
            _ if p == h2 => second.clone(),
            _ => rest.next().unwrap(),
        })
        .collect();
    CompleteMatrix::from_bits(&rows)
}

/// γ(B^n_{i,i'}) = 2n(n − 1) − 6.
pub fn gamma_b(n: usize) -> usize {
    2 * n * (n - 1) - 6
}

/// Width of B^n_{i,i'}: (C(n,2) − 1)(2n − 1).
pub fn width_b(n: usize) -> usize {
    (n * (n - 1) / 2 - 1) * (2 * n - 1)
}

/// B^n_{i,i'}: A^n_{h,h'} stacked over all pairs (h, h') ≠ (i, i').
pub fn gen_b(n: usize, i: usize, i2: usize) -> Result<CompleteMatrix> {
    check_pair(n, i, i2)?;
    let mut out: Option<CompleteMatrix> = None;
    for h in 0..n {
        for h2 in h + 1..n {
            if (h, h2) == (i, i2) {
                continue;
            }
            let a = gen_a_swapped(n, h, h2)?;
            out = Some(match out {
                Some(m) => m.hstack(&a)?,
                None => a,
            });
        }
    }
    Ok(out.expect("n >= 3 leaves at least two pairs"))
}

/// The distances `copies` stacked B^n_{i,i'} add to each pair.
pub fn gen_b_offsets(n: usize, i: usize, i2: usize, copies: usize) -> Result<PairOffsets> {
    check_pair(n, i, i2)?;
    let g = gamma_b(n);
    Ok(PairOffsets::from_fn(n, |h, h2| {
        copies * (g + if (h, h2) == (i, i2) { 2 } else { 0 })
    }))
}

/// A multiset of B^n blocks appended to an n-row matrix, kept as copy
/// counts per pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetStack {
    n: usize,
    copies: PairOffsets,
    total: usize,
}

impl GadgetStack {
    pub fn new(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(GadgetStack {
            n,
            copies: PairOffsets::zeros(n),
            total: 0,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn push(&mut self, i: usize, i2: usize, copies: usize) -> Result<()> {
        check_pair(self.n, i, i2)?;
        self.copies.set(i, i2, self.copies.get(i, i2) + copies);
        self.total += copies;
        Ok(())
    }

    /// Copies of B^n_{i,i'}.
    pub fn copies(&self, i: usize, i2: usize) -> usize {
        self.copies.get(i, i2)
    }

    pub fn total_copies(&self) -> usize {
        self.total
    }

    /// Distance every pair receives from the whole stack before its own
    /// extra 2·copies.
    pub fn common_shift(&self) -> usize {
        self.total * gamma_b(self.n)
    }

    pub fn offsets(&self) -> PairOffsets {
        let base = self.common_shift();
        PairOffsets::from_fn(self.n, |h, h2| base + 2 * self.copies.get(h, h2))
    }

    pub fn width(&self) -> usize {
        self.total * width_b(self.n)
    }

    /// The stacked columns, refusing anything wider than `max_width`.
    pub fn materialize(&self, max_width: usize) -> Result<IncompleteMatrix> {
        if self.width() > max_width {
            return Err(DmcError::InvalidParameter(format!(
                "gadget stack has {} columns, limit {max_width}",
                self.width()
            )));
        }
        let mut out = IncompleteMatrix::new(vec![crate::matrix::RowVector::zeros(0); self.n])?;
        for h in 0..self.n {
            for h2 in h + 1..self.n {
                let c = self.copies.get(h, h2);
                if c == 0 {
                    continue;
                }
                let b = gen_b(self.n, h, h2)?;
                for _ in 0..c {
                    out = out.hstack(b.as_incomplete())?;
                }
            }
        }
        Ok(out)
    }
}
