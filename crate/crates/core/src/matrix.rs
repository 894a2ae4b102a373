//! Row vectors over {0, 1, missing}, incomplete and complete matrices,
//! pair offsets and instances.
//!
//! A row is stored as two bit planes: `known` marks the determined cells
//! and `value` carries their bits. Value bits under an unknown cell are
//! always zero, so equality of the planes is equality of rows.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{DmcError, Result};

/// Sorted set of 0-based column indices.
pub type ColumnSet = BTreeSet<usize>;

const WORD: usize = 64;

#[inline]
fn word_count(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// One matrix entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Zero,
    One,
    Missing,
}

impl Cell {
    pub fn from_bit(bit: bool) -> Cell {
        if bit {
            Cell::One
        } else {
            Cell::Zero
        }
    }

    pub fn is_missing(self) -> bool {
        self == Cell::Missing
    }

    /// The bit of a known cell.
    pub fn bit(self) -> Option<bool> {
        match self {
            Cell::Zero => Some(false),
            Cell::One => Some(true),
            Cell::Missing => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Cell::Zero => '0',
            Cell::One => '1',
            Cell::Missing => '?',
        }
    }

    /// Accepts `0`, `1`, and `?` or `□` for a missing entry.
    pub fn from_char(c: char) -> Option<Cell> {
        match c {
            '0' => Some(Cell::Zero),
            '1' => Some(Cell::One),
            '?' | '□' => Some(Cell::Missing),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RowVector {
    len: usize,
    known: Vec<u64>,
    value: Vec<u64>,
}

impl RowVector {
    /// A row of `len` missing cells.
    pub fn missing(len: usize) -> Self {
        RowVector {
            len,
            known: vec![0; word_count(len)],
            value: vec![0; word_count(len)],
        }
    }

    /// The complete all-zero row.
    pub fn zeros(len: usize) -> Self {
        let mut row = RowVector::missing(len);
        for j in 0..len {
            row.known[j / WORD] |= 1 << (j % WORD);
        }
        row
    }

    pub fn from_cells(cells: &[Cell]) -> Self {
        let mut row = RowVector::missing(cells.len());
        for (j, &c) in cells.iter().enumerate() {
            row.set(j, c);
        }
        row
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut row = RowVector::zeros(bits.len());
        for (j, &b) in bits.iter().enumerate() {
            if b {
                row.value[j / WORD] |= 1 << (j % WORD);
            }
        }
        row
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, j: usize) -> Cell {
        assert!(j < self.len, "column {j} out of range for width {}", self.len);
        let (w, b) = (j / WORD, j % WORD);
        if self.known[w] >> b & 1 == 0 {
            Cell::Missing
        } else {
            Cell::from_bit(self.value[w] >> b & 1 == 1)
        }
    }

    #[inline]
    pub fn set(&mut self, j: usize, cell: Cell) {
        assert!(j < self.len, "column {j} out of range for width {}", self.len);
        let (w, mask) = (j / WORD, 1u64 << (j % WORD));
        match cell {
            Cell::Missing => {
                self.known[w] &= !mask;
                self.value[w] &= !mask;
            }
            Cell::Zero => {
                self.known[w] |= mask;
                self.value[w] &= !mask;
            }
            Cell::One => {
                self.known[w] |= mask;
                self.value[w] |= mask;
            }
        }
    }

    /// Shorthand for `set(j, Cell::from_bit(bit))`.
    #[inline]
    pub fn set_bit(&mut self, j: usize, bit: bool) {
        self.set(j, Cell::from_bit(bit));
    }

    /// Bit at `j`, reading missing cells as 0.
    #[inline]
    pub fn bit(&self, j: usize) -> bool {
        self.value[j / WORD] >> (j % WORD) & 1 == 1
    }

    #[inline]
    pub fn is_known(&self, j: usize) -> bool {
        self.known[j / WORD] >> (j % WORD) & 1 == 1
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.len).map(|j| self.get(j))
    }

    pub fn known_count(&self) -> usize {
        self.known.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn missing_count(&self) -> usize {
        self.len - self.known_count()
    }

    pub fn is_complete(&self) -> bool {
        self.missing_count() == 0
    }

    pub fn missing_positions(&self) -> Vec<usize> {
        (0..self.len).filter(|&j| !self.is_known(j)).collect()
    }

    pub fn known_positions(&self) -> Vec<usize> {
        (0..self.len).filter(|&j| self.is_known(j)).collect()
    }

    /// Number of known disagreements. Panics if the lengths differ.
    #[inline]
    pub fn distance(&self, other: &RowVector) -> usize {
        assert_eq!(self.len, other.len, "row length mismatch");
        let mut d = 0u32;
        for w in 0..self.known.len() {
            d += ((self.value[w] ^ other.value[w]) & self.known[w] & other.known[w]).count_ones();
        }
        d as usize
    }

    /// Positions where at least one of the two rows is missing.
    #[inline]
    pub fn free_positions_with(&self, other: &RowVector) -> usize {
        assert_eq!(self.len, other.len, "row length mismatch");
        let mut f = 0u32;
        for w in 0..self.known.len() {
            f += (!(self.known[w] & other.known[w]) & tail_mask(self.len, w)).count_ones();
        }
        f as usize
    }

    /// The row with the bits of `columns` flipped; missing cells stay missing.
    pub fn flipped(&self, columns: impl IntoIterator<Item = usize>) -> RowVector {
        let mut out = self.clone();
        for j in columns {
            if out.is_known(j) {
                out.set_bit(j, !out.bit(j));
            }
        }
        out
    }

    /// Keep only the listed columns, in the listed order.
    pub fn select(&self, columns: &[usize]) -> RowVector {
        RowVector::from_cells(&columns.iter().map(|&j| self.get(j)).collect::<Vec<_>>())
    }

    /// Concatenation `self | other`.
    pub fn concat(&self, other: &RowVector) -> RowVector {
        let cells: Vec<Cell> = self.cells().chain(other.cells()).collect();
        RowVector::from_cells(&cells)
    }

    pub(crate) fn known_words(&self) -> &[u64] {
        &self.known
    }

    pub(crate) fn value_words(&self) -> &[u64] {
        &self.value
    }

    pub(crate) fn from_words(len: usize, known: Vec<u64>, value: Vec<u64>) -> RowVector {
        debug_assert_eq!(known.len(), word_count(len));
        debug_assert!(known.iter().zip(&value).all(|(k, v)| v & !k == 0));
        RowVector { len, known, value }
    }
}

#[inline]
fn tail_mask(len: usize, w: usize) -> u64 {
    let rem = len - w * WORD;
    if rem >= WORD {
        !0
    } else {
        (1u64 << rem) - 1
    }
}

impl fmt::Display for RowVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cells() {
            write!(f, "{}", c.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for RowVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RowVector({self})")
    }
}

impl FromStr for RowVector {
    type Err = DmcError;

    fn from_str(s: &str) -> Result<Self> {
        let cells = s
            .chars()
            .enumerate()
            .map(|(j, c)| {
                Cell::from_char(c)
                    .ok_or_else(|| DmcError::InvalidMatrix(format!("bad character {c:?} at column {}", j + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RowVector::from_cells(&cells))
    }
}

/// |D(u, w)|: positions where both rows are known and differ.
pub fn hamming_distance(u: &RowVector, w: &RowVector) -> Result<usize> {
    check_len(u, w)?;
    Ok(u.distance(w))
}

/// D(u, w) as a column set.
pub fn disagreement_set(u: &RowVector, w: &RowVector) -> Result<ColumnSet> {
    check_len(u, w)?;
    Ok((0..u.len())
        .filter(|&j| u.is_known(j) && w.is_known(j) && u.bit(j) != w.bit(j))
        .collect())
}

/// Distance counting only the columns in `columns`.
pub fn restricted_distance(u: &RowVector, w: &RowVector, columns: &ColumnSet) -> Result<usize> {
    check_len(u, w)?;
    if let Some(&j) = columns.iter().next_back() {
        if j >= u.len() {
            return Err(DmcError::ColumnOutOfRange {
                index: j,
                width: u.len(),
            });
        }
    }
    Ok(columns
        .iter()
        .filter(|&&j| u.is_known(j) && w.is_known(j) && u.bit(j) != w.bit(j))
        .count())
}

/// u ⊕ v: the missing entries of `u` replaced by those of the complete `v`.
pub fn apply_completion(u: &RowVector, v: &RowVector) -> Result<RowVector> {
    check_len(u, v)?;
    if let Some(j) = (0..v.len()).find(|&j| !v.is_known(j)) {
        return Err(DmcError::IncompleteVector(j));
    }
    let value = (0..u.known.len())
        .map(|w| (u.value[w] & u.known[w]) | (v.value[w] & !u.known[w]))
        .collect();
    Ok(RowVector::from_words(u.len, v.known.clone(), value))
}

fn check_len(u: &RowVector, w: &RowVector) -> Result<()> {
    if u.len() != w.len() {
        return Err(DmcError::LengthMismatch {
            left: u.len(),
            right: w.len(),
        });
    }
    Ok(())
}

/// An n × ℓ matrix over {0, 1, missing} with n, ℓ ≥ 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IncompleteMatrix {
    width: usize,
    rows: Vec<RowVector>,
}

impl IncompleteMatrix {
    pub fn new(rows: Vec<RowVector>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(DmcError::InvalidMatrix("matrix has no rows".into()));
        };
        let width = first.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != width) {
            return Err(DmcError::LengthMismatch {
                left: width,
                right: bad.len(),
            });
        }
        Ok(IncompleteMatrix { width, rows })
    }

    /// Build from one string per row, e.g. `["0?1", "111"]`.
    pub fn parse<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|s| s.as_ref().parse())
            .collect::<Result<Vec<RowVector>>>()?;
        IncompleteMatrix::new(rows)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[RowVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &RowVector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Cell {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, cell: Cell) {
        self.rows[i].set(j, cell);
    }

    pub fn column(&self, j: usize) -> Vec<Cell> {
        self.rows.iter().map(|r| r.get(j)).collect()
    }

    /// Occurrences of 0 and of 1 in column `j`.
    pub fn column_counts(&self, j: usize) -> (usize, usize) {
        let mut zeros = 0;
        let mut ones = 0;
        for r in &self.rows {
            match r.get(j) {
                Cell::Zero => zeros += 1,
                Cell::One => ones += 1,
                Cell::Missing => {}
            }
        }
        (zeros, ones)
    }

    /// Total number of missing cells.
    pub fn missing_count(&self) -> usize {
        self.rows.iter().map(RowVector::missing_count).sum()
    }

    /// Largest number of missing cells in one row.
    pub fn max_missing_per_row(&self) -> usize {
        self.rows.iter().map(RowVector::missing_count).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.rows.iter().all(RowVector::is_complete)
    }

    /// The submatrix on `columns`, in that order.
    pub fn select_columns(&self, columns: &[usize]) -> Result<IncompleteMatrix> {
        if let Some(&j) = columns.iter().find(|&&j| j >= self.width) {
            return Err(DmcError::ColumnOutOfRange {
                index: j,
                width: self.width,
            });
        }
        IncompleteMatrix::new(self.rows.iter().map(|r| r.select(columns)).collect())
    }

    /// The submatrix on `rows`, in that order.
    pub fn select_rows(&self, rows: &[usize]) -> Result<IncompleteMatrix> {
        IncompleteMatrix::new(rows.iter().map(|&i| self.rows[i].clone()).collect())
    }

    pub fn with_row(&self, row: RowVector) -> Result<IncompleteMatrix> {
        let mut rows = self.rows.clone();
        rows.push(row);
        IncompleteMatrix::new(rows)
    }

    /// Side-by-side concatenation `[self | other]`.
    pub fn hstack(&self, other: &IncompleteMatrix) -> Result<IncompleteMatrix> {
        if self.num_rows() != other.num_rows() {
            return Err(DmcError::DimensionMismatch {
                expected_rows: self.num_rows(),
                expected_cols: other.num_cols(),
                rows: other.num_rows(),
                cols: other.num_cols(),
            });
        }
        IncompleteMatrix::new(self.rows.iter().zip(&other.rows).map(|(a, b)| a.concat(b)).collect())
    }
}

impl fmt::Display for IncompleteMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IncompleteMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.iter().map(|r| r.to_string())).finish()
    }
}

/// A matrix without missing cells.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CompleteMatrix {
    inner: IncompleteMatrix,
}

impl CompleteMatrix {
    pub fn new(rows: Vec<RowVector>) -> Result<Self> {
        CompleteMatrix::try_from(IncompleteMatrix::new(rows)?)
    }

    pub fn parse<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        CompleteMatrix::try_from(IncompleteMatrix::parse(rows)?)
    }

    pub fn from_bits(rows: &[Vec<bool>]) -> Result<Self> {
        CompleteMatrix::new(rows.iter().map(|r| RowVector::from_bits(r)).collect())
    }

    pub fn num_rows(&self) -> usize {
        self.inner.num_rows()
    }

    pub fn num_cols(&self) -> usize {
        self.inner.num_cols()
    }

    pub fn rows(&self) -> &[RowVector] {
        self.inner.rows()
    }

    pub fn row(&self, i: usize) -> &RowVector {
        self.inner.row(i)
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.inner.row(i).bit(j)
    }

    pub fn as_incomplete(&self) -> &IncompleteMatrix {
        &self.inner
    }

    pub fn into_incomplete(self) -> IncompleteMatrix {
        self.inner
    }

    /// True iff the shapes agree and every known cell of `s` is reproduced.
    pub fn is_completion_of(&self, s: &IncompleteMatrix) -> bool {
        self.first_conflict_with(s).is_none() && self.num_rows() == s.num_rows() && self.num_cols() == s.num_cols()
    }

    /// First known cell of `s` (row-major) that this matrix contradicts.
    pub fn first_conflict_with(&self, s: &IncompleteMatrix) -> Option<(usize, usize)> {
        if self.num_rows() != s.num_rows() || self.num_cols() != s.num_cols() {
            return None;
        }
        for (i, (t, r)) in self.rows().iter().zip(s.rows()).enumerate() {
            let kw = r.known_words();
            let diff: Vec<u64> = (0..kw.len())
                .map(|w| (t.value_words()[w] ^ r.value_words()[w]) & kw[w])
                .collect();
            if let Some(w) = diff.iter().position(|&x| x != 0) {
                return Some((i, w * WORD + diff[w].trailing_zeros() as usize));
            }
        }
        None
    }

    pub fn hstack(&self, other: &CompleteMatrix) -> Result<CompleteMatrix> {
        Ok(CompleteMatrix {
            inner: self.inner.hstack(&other.inner)?,
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> Result<CompleteMatrix> {
        Ok(CompleteMatrix {
            inner: self.inner.select_rows(rows)?,
        })
    }
}

impl TryFrom<IncompleteMatrix> for CompleteMatrix {
    type Error = DmcError;

    fn try_from(m: IncompleteMatrix) -> Result<Self> {
        for (i, r) in m.rows().iter().enumerate() {
            if let Some(j) = r.missing_positions().first() {
                return Err(DmcError::InvalidMatrix(format!(
                    "complete matrix has a missing cell at row {}, column {}",
                    i + 1,
                    j + 1
                )));
            }
        }
        Ok(CompleteMatrix { inner: m })
    }
}

impl fmt::Display for CompleteMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

impl fmt::Debug for CompleteMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

/// Symmetric per-pair distance shifts, stored as an upper triangle.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PairOffsets {
    n: usize,
    data: Vec<usize>,
}

impl PairOffsets {
    pub fn zeros(n: usize) -> Self {
        PairOffsets {
            n,
            data: vec![0; n * n.saturating_sub(1) / 2],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut out = PairOffsets::zeros(n);
        for h in 0..n {
            for h2 in h + 1..n {
                out.set(h, h2, f(h, h2));
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn index(&self, h: usize, h2: usize) -> usize {
        let (a, b) = if h < h2 { (h, h2) } else { (h2, h) };
        assert!(a != b && b < self.n, "invalid offset pair ({h}, {h2}) for {} rows", self.n);
        a * (2 * self.n - a - 1) / 2 + (b - a - 1)
    }

    #[inline]
    pub fn get(&self, h: usize, h2: usize) -> usize {
        self.data[self.index(h, h2)]
    }

    pub fn set(&mut self, h: usize, h2: usize, value: usize) {
        let i = self.index(h, h2);
        self.data[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Offsets of the listed rows, renumbered in that order.
    pub fn select(&self, rows: &[usize]) -> PairOffsets {
        PairOffsets::from_fn(rows.len(), |a, b| self.get(rows[a], rows[b]))
    }
}

/// Matrix plus distance bounds and pair offsets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DmcInstance {
    matrix: IncompleteMatrix,
    alpha: usize,
    beta: usize,
    offsets: PairOffsets,
}

impl DmcInstance {
    pub fn new(matrix: IncompleteMatrix, alpha: usize, beta: usize) -> Result<Self> {
        let n = matrix.num_rows();
        DmcInstance::with_offsets(matrix, alpha, beta, PairOffsets::zeros(n))
    }

    pub fn with_offsets(matrix: IncompleteMatrix, alpha: usize, beta: usize, offsets: PairOffsets) -> Result<Self> {
        if alpha > beta {
            return Err(DmcError::BoundsOrder { alpha, beta });
        }
        if offsets.n() != matrix.num_rows() {
            return Err(DmcError::InvalidParameter(format!(
                "offsets cover {} rows but the matrix has {}",
                offsets.n(),
                matrix.num_rows()
            )));
        }
        Ok(DmcInstance {
            matrix,
            alpha,
            beta,
            offsets,
        })
    }

    pub fn matrix(&self) -> &IncompleteMatrix {
        &self.matrix
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn offsets(&self) -> &PairOffsets {
        &self.offsets
    }

    pub fn has_offsets(&self) -> bool {
        !self.offsets.is_zero()
    }

    pub fn num_rows(&self) -> usize {
        self.matrix.num_rows()
    }

    pub fn num_cols(&self) -> usize {
        self.matrix.num_cols()
    }

    /// Largest number of missing cells in one row.
    pub fn k(&self) -> usize {
        self.matrix.max_missing_per_row()
    }

    /// Same matrix and offsets, different bounds.
    pub fn with_bounds(&self, alpha: usize, beta: usize) -> Result<DmcInstance> {
        DmcInstance::with_offsets(self.matrix.clone(), alpha, beta, self.offsets.clone())
    }
}

/// Answer to a decision query.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    No,
    Yes(CompleteMatrix),
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn witness(&self) -> Option<&CompleteMatrix> {
        match self {
            Verdict::Yes(t) => Some(t),
            Verdict::No => None,
        }
    }
}

/// Minimum and maximum pair distance. `gamma` is `None` (infinite) for one row.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DiameterStats {
    pub gamma: Option<usize>,
    pub delta: usize,
}

pub fn diameter_stats(t: &CompleteMatrix, offsets: &PairOffsets) -> DiameterStats {
    assert_eq!(offsets.n(), t.num_rows(), "offsets do not match the matrix");
    let mut gamma = None::<usize>;
    let mut delta = 0;
    let rows = t.rows();
    for h in 0..rows.len() {
        for h2 in h + 1..rows.len() {
            let d = rows[h].distance(&rows[h2]) + offsets.get(h, h2);
            gamma = Some(gamma.map_or(d, |g| g.min(d)));
            delta = delta.max(d);
        }
    }
    DiameterStats { gamma, delta }
}

/// The first reason a candidate completion fails an instance.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Violation {
    KnownEntry { row: usize, col: usize },
    TooClose { row_a: usize, row_b: usize, distance: usize },
    TooFar { row_a: usize, row_b: usize, distance: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::KnownEntry { row, col } => {
                write!(f, "known entry at row {}, column {} is changed", row + 1, col + 1)
            }
            Violation::TooClose { row_a, row_b, distance } => {
                write!(f, "rows {} and {} are at distance {distance}, below alpha", row_a + 1, row_b + 1)
            }
            Violation::TooFar { row_a, row_b, distance } => {
                write!(f, "rows {} and {} are at distance {distance}, above beta", row_a + 1, row_b + 1)
            }
        }
    }
}

pub fn first_violation(inst: &DmcInstance, t: &CompleteMatrix) -> Result<Option<Violation>> {
    let s = inst.matrix();
    if t.num_rows() != s.num_rows() || t.num_cols() != s.num_cols() {
        return Err(DmcError::DimensionMismatch {
            expected_rows: s.num_rows(),
            expected_cols: s.num_cols(),
            rows: t.num_rows(),
            cols: t.num_cols(),
        });
    }
    if let Some((row, col)) = t.first_conflict_with(s) {
        return Ok(Some(Violation::KnownEntry { row, col }));
    }
    let rows = t.rows();
    for a in 0..rows.len() {
        for b in a + 1..rows.len() {
            let distance = rows[a].distance(&rows[b]) + inst.offsets().get(a, b);
            if distance < inst.alpha() {
                return Ok(Some(Violation::TooClose { row_a: a, row_b: b, distance }));
            }
            if distance > inst.beta() {
                return Ok(Some(Violation::TooFar { row_a: a, row_b: b, distance }));
            }
        }
    }
    Ok(None)
}

/// True iff `t` completes the instance matrix and all pair distances
/// (plus offsets) lie in [α, β].
pub fn verify_instance(inst: &DmcInstance, t: &CompleteMatrix) -> Result<bool> {
    Ok(first_violation(inst, t)?.is_none())
}

/// Columns holding both a known 0 and a known 1.
pub fn dirty_columns(s: &IncompleteMatrix) -> ColumnSet {
    let words = word_count(s.num_cols());
    let mut ones = vec![0u64; words];
    let mut zeros = vec![0u64; words];
    for r in s.rows() {
        for w in 0..words {
            ones[w] |= r.known_words()[w] & r.value_words()[w];
            zeros[w] |= r.known_words()[w] & !r.value_words()[w];
        }
    }
    (0..s.num_cols())
        .filter(|&j| (ones[j / WORD] & zeros[j / WORD]) >> (j % WORD) & 1 == 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(s: &str) -> RowVector {
        s.parse().unwrap()
    }

    fn set(xs: &[usize]) -> ColumnSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn distance_examples() {
        assert_eq!(hamming_distance(&row("001"), &row("111")).unwrap(), 2);
        assert_eq!(hamming_distance(&row("0?1"), &row("111")).unwrap(), 1);
        assert_eq!(hamming_distance(&row("0?1"), &row("0?1")).unwrap(), 0);
        assert!(matches!(
            hamming_distance(&row("01"), &row("011")),
            Err(DmcError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn disagreement_examples() {
        assert_eq!(disagreement_set(&row("001"), &row("111")).unwrap(), set(&[0, 1]));
        assert_eq!(disagreement_set(&row("0?1"), &row("111")).unwrap(), set(&[0]));
    }

    #[test]
    fn restricted_examples() {
        let (u, w) = (row("001"), row("111"));
        assert_eq!(restricted_distance(&u, &w, &set(&[0, 1])).unwrap(), 2);
        assert_eq!(restricted_distance(&u, &w, &set(&[])).unwrap(), 0);
        assert_eq!(restricted_distance(&u, &w, &set(&[0, 1, 2])).unwrap(), u.distance(&w));
        assert!(restricted_distance(&u, &w, &set(&[3])).is_err());
    }

    #[test]
    fn completion_examples() {
        assert_eq!(apply_completion(&row("0?1"), &row("111")).unwrap(), row("011"));
        assert_eq!(apply_completion(&row("??"), &row("10")).unwrap(), row("10"));
        assert_eq!(apply_completion(&row("010"), &row("111")).unwrap(), row("010"));
        assert_eq!(apply_completion(&row("0?"), &row("1?")), Err(DmcError::IncompleteVector(1)));
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let mut a = RowVector::zeros(130);
        let mut b = RowVector::zeros(130);
        a.set_bit(0, true);
        a.set_bit(64, true);
        b.set_bit(129, true);
        b.set(64, Cell::Missing);
        assert_eq!(a.distance(&b), 2);
        assert_eq!(a.free_positions_with(&b), 1);
        assert_eq!(b.missing_positions(), vec![64]);
    }

    #[test]
    fn fig1_middle_completion_stats() {
        let t = CompleteMatrix::parse(&["11101", "01010", "10010", "00101"]).unwrap();
        let st = diameter_stats(&t, &PairOffsets::zeros(4));
        assert_eq!(st, DiameterStats { gamma: Some(2), delta: 4 });
    }

    #[test]
    fn stats_degenerate_cases() {
        let one = CompleteMatrix::parse(&["0101"]).unwrap();
        assert_eq!(diameter_stats(&one, &PairOffsets::zeros(1)), DiameterStats { gamma: None, delta: 0 });
        let same = CompleteMatrix::parse(&["01", "01"]).unwrap();
        assert_eq!(diameter_stats(&same, &PairOffsets::zeros(2)), DiameterStats { gamma: Some(0), delta: 0 });
    }

    #[test]
    fn verify_fig1() {
        let s = IncompleteMatrix::parse(&["?1101", "?1010", "10010", "0?101"]).unwrap();
        let t = CompleteMatrix::parse(&["11101", "01010", "10010", "00101"]).unwrap();
        let inst = DmcInstance::new(s.clone(), 0, 4).unwrap();
        assert!(verify_instance(&inst, &t).unwrap());

        let bad = CompleteMatrix::parse(&["10101", "01010", "10010", "00101"]).unwrap();
        assert_eq!(
            first_violation(&inst, &bad).unwrap(),
            Some(Violation::KnownEntry { row: 0, col: 1 })
        );

        let tight = DmcInstance::new(s, 0, 3).unwrap();
        assert!(!verify_instance(&tight, &t).unwrap());
        assert!(matches!(first_violation(&tight, &t).unwrap(), Some(Violation::TooFar { distance: 4, .. })));
    }

    #[test]
    fn verify_rejects_shape_mismatch() {
        let inst = DmcInstance::new(IncompleteMatrix::parse(&["0?", "11"]).unwrap(), 0, 2).unwrap();
        let t = CompleteMatrix::parse(&["00"]).unwrap();
        assert!(verify_instance(&inst, &t).is_err());
    }

    #[test]
    fn dirty_examples() {
        assert_eq!(dirty_columns(&IncompleteMatrix::parse(&["01", "11"]).unwrap()), set(&[0]));
        assert_eq!(dirty_columns(&IncompleteMatrix::parse(&["0?", "?0"]).unwrap()), set(&[]));
        assert_eq!(dirty_columns(&IncompleteMatrix::parse(&["???", "???"]).unwrap()), set(&[]));
        let fig1 = IncompleteMatrix::parse(&["?1101", "?1010", "10010", "0?101"]).unwrap();
        assert_eq!(dirty_columns(&fig1).len(), 5);
    }

    #[test]
    fn offsets_are_symmetric() {
        let mut o = PairOffsets::zeros(4);
        o.set(3, 1, 7);
        assert_eq!(o.get(1, 3), 7);
        assert_eq!(o.get(3, 1), 7);
        assert_eq!(o.get(0, 1), 0);
        assert_eq!(o.select(&[3, 1]).get(0, 1), 7);
    }

    #[test]
    fn matrix_validation() {
        assert!(IncompleteMatrix::new(vec![]).is_err());
        assert!(IncompleteMatrix::parse(&["01", "0"]).is_err());
        assert!(IncompleteMatrix::parse(&["0x"]).is_err());
        assert!(CompleteMatrix::parse(&["0?"]).is_err());
        assert!(DmcInstance::new(IncompleteMatrix::parse(&["0"]).unwrap(), 2, 1).is_err());
    }
}
