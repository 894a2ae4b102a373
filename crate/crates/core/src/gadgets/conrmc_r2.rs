//! ConRMC with radius 2 everywhere, embedded into (α, β)-DMC for
//! β ≥ 2⌈α/2⌉ + 4.

use crate::error::{DmcError, Result};
use crate::matrix::{DmcInstance, IncompleteMatrix, RowVector};

/// The complete block C: ⌈α/2⌉ copies of the (n+1)-identity, then
/// β − 2⌈α/2⌉ − 2 copies of the column (0^n 1)^T.
pub fn conrmc_r2_block(n: usize, alpha: usize, beta: usize) -> Result<IncompleteMatrix> {
    let q = alpha.div_ceil(2);
    if beta < 2 * q + 4 {
        return Err(DmcError::InvalidParameter(format!(
            "needs beta >= 2*ceil(alpha/2) + 4 = {}, got {beta}",
            2 * q + 4
        )));
    }
    let tail = beta - 2 * q - 2;
    let width = q * (n + 1) + tail;
    let rows = (0..=n)
        .map(|i| {
            let mut r = RowVector::zeros(width);
            for copy in 0..q {
                r.set_bit(copy * (n + 1) + i, true);
            }
            if i == n {
                for j in q * (n + 1)..width {
                    r.set_bit(j, true);
                }
            }
            r
        })
        .collect();
    IncompleteMatrix::new(rows)
}

/// [S over an all-missing row | C] with bounds (α, β). Yes iff some center
/// lies within distance 2 of every row of S.
pub fn reduce_conrmc_r2(s: &IncompleteMatrix, alpha: usize, beta: usize) -> Result<DmcInstance> {
    let c = conrmc_r2_block(s.num_rows(), alpha, beta)?;
    let top = s.with_row(RowVector::missing(s.num_cols()))?;
    DmcInstance::new(top.hstack(&c)?, alpha, beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{solve_exhaustive, SearchBudget};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn block_distances() {
        for n in 1..=5 {
            for alpha in 0..=5usize {
                let beta = 2 * alpha.div_ceil(2) + 4 + n % 2;
                let c = conrmc_r2_block(n, alpha, beta).unwrap();
                assert_eq!(c.num_cols(), (n - 1) * alpha.div_ceil(2) + beta - 2);
                for i in 0..n {
                    assert_eq!(c.row(i).distance(c.row(n)), beta - 2);
                    for i2 in i + 1..n {
                        assert_eq!(c.row(i).distance(c.row(i2)), 2 * alpha.div_ceil(2));
                    }
                }
            }
        }
        assert!(conrmc_r2_block(3, 2, 5).is_err());
    }

    fn has_center(s: &IncompleteMatrix) -> bool {
        let ell = s.num_cols();
        (0..1u32 << ell).any(|code| {
            let bits: Vec<bool> = (0..ell).map(|j| code >> j & 1 == 1).collect();
            let v = RowVector::from_bits(&bits);
            s.rows().iter().all(|r| r.distance(&v) <= 2)
        })
    }

    #[test]
    fn agrees_with_center_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let b = SearchBudget::default();
        for _ in 0..150 {
            let n = rng.random_range(1..=3);
            let ell = rng.random_range(1..=5);
            let rows: Vec<String> = (0..n)
                .map(|_| {
                    (0..ell)
                        .map(|_| match rng.random_range(0..5) {
                            0 => '?',
                            1 | 2 => '0',
                            _ => '1',
                        })
                        .collect()
                })
                .collect();
            let s = IncompleteMatrix::parse(&rows).unwrap();
            if s.missing_count() + ell > 16 {
                continue;
            }
            let alpha = rng.random_range(0..=2usize);
            let beta = 2 * alpha.div_ceil(2) + 4;
            let inst = reduce_conrmc_r2(&s, alpha, beta).unwrap();
            let want = has_center(&s);
            assert_eq!(solve_exhaustive(&inst, b).unwrap().is_yes(), want, "{s}");
        }
        for rows in [["00000", "11111"], ["00?000", "11?111"]] {
            let s = IncompleteMatrix::parse(&rows).unwrap();
            assert!(!has_center(&s));
            assert!(!solve_exhaustive(&reduce_conrmc_r2(&s, 1, 6).unwrap(), b).unwrap().is_yes());
        }
    }
}
