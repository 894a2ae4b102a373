//! Difference-set systems relative to a reference row, and sunflower
//! (strong Δ-system) detection.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{DmcError, Result};
use crate::matrix::{ColumnSet, CompleteMatrix};

/// The distinct sets D(T[i], T[ref]) over all rows i, grouped by size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffSystem {
    pub reference_row: usize,
    pub sets: BTreeSet<ColumnSet>,
    pub strata: BTreeMap<usize, Vec<ColumnSet>>,
}

impl DiffSystem {
    /// 𝒯_x, empty when no set has size x.
    pub fn stratum(&self, x: usize) -> &[ColumnSet] {
        self.strata.get(&x).map_or(&[], Vec::as_slice)
    }
}

pub fn diff_system(t: &CompleteMatrix, reference: usize) -> Result<DiffSystem> {
    if reference >= t.num_rows() {
        return Err(DmcError::RowOutOfRange {
            index: reference,
            rows: t.num_rows(),
        });
    }
    let base = t.row(reference);
    let sets: BTreeSet<ColumnSet> = t
        .rows()
        .iter()
        .map(|r| (0..t.num_cols()).filter(|&j| r.bit(j) != base.bit(j)).collect())
        .collect();
    let mut strata: BTreeMap<usize, Vec<ColumnSet>> = BTreeMap::new();
    for s in &sets {
        strata.entry(s.len()).or_default().push(s.clone());
    }
    Ok(DiffSystem {
        reference_row: reference,
        sets,
        strata,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sunflower {
    pub core: ColumnSet,
    /// One petal per member, in input order.
    pub petals: Vec<ColumnSet>,
}

/// Core and petals if all pairwise intersections coincide.
///
/// A single set is its own core with one empty petal.
pub fn detect_sunflower(family: &[ColumnSet]) -> Option<Sunflower> {
    let first = family.first()?;
    let core: ColumnSet = match family.get(1) {
        Some(second) => first.intersection(second).copied().collect(),
        None => first.clone(),
    };
    for a in 0..family.len() {
        for b in a + 1..family.len() {
            if family[a].intersection(&family[b]).ne(core.iter()) {
                return None;
            }
        }
    }
    let petals = family.iter().map(|s| s.difference(&core).copied().collect()).collect();
    Some(Sunflower { core, petals })
}

/// True iff `family` is a uniform weak Δ-system large enough for one of
/// Deza's three criteria to force it to be a sunflower.
pub fn deza_certified(family: &[ColumnSet]) -> bool {
    if family.len() < 2 {
        return false;
    }
    let size = family[0].len();
    if family.iter().any(|s| s.len() != size) {
        return false;
    }
    let lambda = family[0].intersection(&family[1]).count();
    for a in 0..family.len() {
        for b in a + 1..family.len() {
            if family[a].intersection(&family[b]).count() != lambda {
                return false;
            }
        }
    }
    let count = family.len();
    let mu = size / 2;
    if size % 2 == 0 {
        lambda == mu && count >= mu * mu + mu + 2
    } else {
        (lambda == mu + 1 && count >= mu * mu + mu + 3) || (lambda == mu && count >= (mu + 1) * (mu + 1) + mu + 3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(xs: &[&[usize]]) -> Vec<ColumnSet> {
        xs.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn diff_system_examples() {
        let t = CompleteMatrix::parse(&["100", "010", "000"]).unwrap();
        let ds = diff_system(&t, 2).unwrap();
        let want: BTreeSet<ColumnSet> = fam(&[&[0], &[1], &[]]).into_iter().collect();
        assert_eq!(ds.sets, want);
        assert_eq!(ds.stratum(1), fam(&[&[0], &[1]]).as_slice());

        let dup = CompleteMatrix::parse(&["100", "100", "000"]).unwrap();
        assert_eq!(diff_system(&dup, 2).unwrap().stratum(1).len(), 1);

        let flat = CompleteMatrix::parse(&["101", "101"]).unwrap();
        let ds = diff_system(&flat, 0).unwrap();
        assert_eq!(ds.sets.len(), 1);
        assert_eq!(ds.stratum(0), fam(&[&[]]).as_slice());
        assert!(diff_system(&flat, 2).is_err());
    }

    #[test]
    fn sunflower_examples() {
        let sf = detect_sunflower(&fam(&[&[1, 2], &[1, 3], &[1, 4]])).unwrap();
        assert_eq!(sf.core, [1].into_iter().collect());
        assert_eq!(sf.petals, fam(&[&[2], &[3], &[4]]));
        assert!(detect_sunflower(&fam(&[&[1, 2], &[3, 4]])).unwrap().core.is_empty());
        assert!(detect_sunflower(&fam(&[&[1, 2], &[2, 3], &[1, 3]])).is_none());
        let single = detect_sunflower(&fam(&[&[5, 6]])).unwrap();
        assert_eq!(single.core, [5, 6].into_iter().collect());
        assert_eq!(single.petals, fam(&[&[]]));
        assert!(detect_sunflower(&[]).is_none());
    }

    #[test]
    fn deza_examples() {
        let four = fam(&[&[1, 2], &[1, 3], &[1, 4], &[1, 5]]);
        assert!(deza_certified(&four));
        assert!(detect_sunflower(&four).is_some());
        assert!(!deza_certified(&fam(&[&[1, 2], &[2, 3], &[1, 3]])));
        assert!(!deza_certified(&fam(&[&[1, 2], &[1, 3], &[1, 4, 6], &[1, 5]])));
        // 3-uniform, intersection 1 (μ = 1): needs 4 + 1 + 3 = 8 members.
        let seven: Vec<ColumnSet> = (0..7).map(|i| [0, 10 + 2 * i, 11 + 2 * i].into_iter().collect()).collect();
        assert!(!deza_certified(&seven));
        let eight: Vec<ColumnSet> = (0..8).map(|i| [0, 10 + 2 * i, 11 + 2 * i].into_iter().collect()).collect();
        assert!(deza_certified(&eight));
    }
}
