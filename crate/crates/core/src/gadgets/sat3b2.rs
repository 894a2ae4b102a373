//! (3,B2)-SAT into DMC with k = 2 and β ≥ α + 3.
//!
//! Each clause i owns an 11 × 8 block. Rows 0..3 carry the two-cell holes
//! l¹, l², l³ and c; rows 4..10 are fixed copies that pin those holes to
//! the allowed fills. Appended B blocks (kept as pair offsets) put every
//! pair at its target distance below β.

use std::fmt;

use crate::error::{DmcError, Result};
use crate::matrix::{Cell, CompleteMatrix, DmcInstance, IncompleteMatrix};

use super::bmatrix::GadgetStack;
use super::cnf::{conflicts, CnfFormula};

const BLOCK_ROWS: usize = 11;
const BLOCK_COLS: usize = 8;

const BLOCK: [&str; BLOCK_ROWS] = [
    "??000011", "00??0010", "0000??01", "101010??", "00000011", "00000010", "00000001", "11000011", "00110010",
    "00001101", "10101000",
];

/// Local row with hole l^{j+1} (j = 0, 1, 2) or c (j = 3), and the hole's
/// first column.
fn hole_col(j: usize) -> usize {
    if j < 3 {
        2 * j
    } else {
        6
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairClass {
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
    H7,
}

impl PairClass {
    /// Allowed distances as (β − hi, β − lo) shifts: the pair must sit in
    /// [β − first, β − second].
    pub fn target_below_beta(self) -> (usize, usize) {
        match self {
            PairClass::H1 | PairClass::H2 => (1, 1),
            PairClass::H3 => (3, 3),
            PairClass::H4 | PairClass::H5 => (3, 2),
            PairClass::H6 => (2, 1),
            PairClass::H7 => (1, 0),
        }
    }
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// How the H4..H7 multipliers are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MultiplierRule {
    /// Targets β − 3, β − 3, β − 2, β − 1 for H4, H5, H6, H7. Assumes the
    /// partner of a holed row reads 00 under the hole, which fails for the
    /// pair (l¹ row, row 10): there the fill 01 lands at β + 1.
    Published,
    /// Same, but an H5..H7 pair whose fills can add w to its distance is
    /// placed at β − 1 − w or one above. Differs from `Published` only on
    /// the (l¹ row, row 10) pairs, which move to β − 3.
    #[default]
    Corrected,
}

/// The reduced instance with its bookkeeping.
#[derive(Clone, Debug)]
pub struct Sat3b2Reduction {
    pub instance: DmcInstance,
    pub stack: GadgetStack,
    pub beta: usize,
    num_clauses: usize,
    classes: Vec<Vec<PairClass>>,
}

/// The 11m × 8m matrix C with the cross entries for conflicting literals.
pub fn sat3b2_matrix(phi: &CnfFormula) -> Result<IncompleteMatrix> {
    phi.validate_3b2()?;
    let m = phi.num_clauses();
    let mut c = IncompleteMatrix::parse(&vec!["0".repeat(BLOCK_COLS * m); BLOCK_ROWS * m])?;
    for i in 0..m {
        for (r, text) in BLOCK.iter().enumerate() {
            for (q, ch) in text.chars().enumerate() {
                c.set(BLOCK_ROWS * i + r, BLOCK_COLS * i + q, Cell::from_char(ch).expect("block text"));
            }
        }
    }
    for (i, j, i2, j2) in conflicts(phi) {
        c.set(BLOCK_ROWS * i + j, BLOCK_COLS * i2 + hole_col(j2) + 1, Cell::One);
        c.set(BLOCK_ROWS * i2 + j2, BLOCK_COLS * i + hole_col(j) + 1, Cell::One);
    }
    Ok(c)
}

fn has_hole(h: usize) -> bool {
    h % BLOCK_ROWS < 4
}

fn classify(phi: &CnfFormula, n: usize) -> Vec<Vec<PairClass>> {
    let mut z = vec![vec![false; n]; n];
    for (i, j, i2, j2) in conflicts(phi) {
        let (a, b) = (BLOCK_ROWS * i + j, BLOCK_ROWS * i2 + j2);
        z[a][b] = true;
        z[b][a] = true;
    }
    let mut out = vec![vec![PairClass::H7; n]; n];
    for h in 0..n {
        for h2 in h + 1..n {
            let same = h / BLOCK_ROWS == h2 / BLOCK_ROWS;
            let (r, r2) = (h % BLOCK_ROWS, h2 % BLOCK_ROWS);
            let class = if same && matches!((r, r2), (0, 4) | (1, 5) | (2, 6) | (0, 7) | (1, 8) | (2, 9)) {
                PairClass::H1
            } else if same && (r, r2) == (3, 10) {
                PairClass::H2
            } else if same && r < 3 && r2 == 3 {
                PairClass::H3
            } else if z[h][h2] {
                PairClass::H4
            } else {
                match (has_hole(h), has_hole(h2)) {
                    (true, true) => PairClass::H5,
                    (false, false) => PairClass::H7,
                    _ => PairClass::H6,
                }
            };
            out[h][h2] = class;
            out[h2][h] = class;
        }
    }
    out
}

/// Fills a hole of local row `r` may take.
fn allowed_fills(r: usize) -> &'static [[bool; 2]] {
    if r < 3 {
        &[[true, false], [false, true]]
    } else {
        &[[false, false], [false, true], [true, false]]
    }
}

/// Largest amount the holes of `h` can add to its distance to `h2`.
fn max_increase(c: &IncompleteMatrix, h: usize, h2: usize) -> usize {
    if !has_hole(h) {
        return 0;
    }
    let r = h % BLOCK_ROWS;
    let col = BLOCK_COLS * (h / BLOCK_ROWS) + hole_col(r);
    allowed_fills(r)
        .iter()
        .map(|f| {
            (0..2)
                .filter(|&q| c.get(h2, col + q).bit().is_some_and(|b| b != f[q]))
                .count()
        })
        .max()
        .unwrap_or(0)
}

pub fn reduce_3b2sat(phi: &CnfFormula, alpha: Option<usize>) -> Result<Sat3b2Reduction> {
    reduce_3b2sat_with(phi, alpha, MultiplierRule::Corrected)
}

/// Builds the offset-form instance. `alpha` defaults to β − 3.
pub fn reduce_3b2sat_with(phi: &CnfFormula, alpha: Option<usize>, rule: MultiplierRule) -> Result<Sat3b2Reduction> {
    let c = sat3b2_matrix(phi)?;
    let n = c.num_rows();
    let classes = classify(phi, n);
    let mut stack = GadgetStack::new(n)?;
    for h in 0..n {
        for h2 in h + 1..n {
            let d = c.row(h).distance(c.row(h2));
            debug_assert!(d <= 8, "pair ({h}, {h2}) at {d}");
            let below = match (classes[h][h2], rule) {
                (PairClass::H1, _) | (PairClass::H2, _) => {
                    let mult = if classes[h][h2] == PairClass::H1 { 4 } else { 5 };
                    stack.push(h, h2, mult)?;
                    continue;
                }
                (PairClass::H3, _) => {
                    stack.push(h, h2, 2)?;
                    continue;
                }
                (PairClass::H4, _) => 3,
                (class, MultiplierRule::Published) => class.target_below_beta().0,
                (_, MultiplierRule::Corrected) => 1 + max_increase(&c, h, h2) + max_increase(&c, h2, h),
            };
            // d + 2c + β − 11 ∈ {β − below, β − below + 1}
            let need = (11 - below).saturating_sub(d);
            stack.push(h, h2, need.div_ceil(2))?;
        }
    }
    let beta = stack.common_shift() + 11;
    let alpha = alpha.unwrap_or(beta - 3);
    if alpha + 3 > beta {
        return Err(DmcError::InvalidParameter(format!("alpha {alpha} exceeds beta - 3 = {}", beta - 3)));
    }
    let instance = DmcInstance::with_offsets(c, alpha, beta, stack.offsets())?;
    Ok(Sat3b2Reduction {
        instance,
        stack,
        beta,
        num_clauses: phi.num_clauses(),
        classes,
    })
}

impl Sat3b2Reduction {
    pub fn class(&self, h: usize, h2: usize) -> PairClass {
        self.classes[h][h2]
    }

    /// Distance of a pair before any hole is filled.
    pub fn base_distance(&self, h: usize, h2: usize) -> usize {
        let s = self.instance.matrix();
        s.row(h).distance(s.row(h2)) + self.instance.offsets().get(h, h2)
    }

    /// Pairs whose base distance misses their class target, with that distance.
    pub fn class_table_violations(&self) -> Vec<(usize, usize, PairClass, usize)> {
        let n = self.instance.num_rows();
        let mut out = Vec::new();
        for h in 0..n {
            for h2 in h + 1..n {
                let class = self.class(h, h2);
                let (hi, lo) = class.target_below_beta();
                let d = self.base_distance(h, h2);
                if d + hi < self.beta || d + lo > self.beta {
                    out.push((h, h2, class, d));
                }
            }
        }
        out
    }

    /// The completion picking, in every clause, its first true literal.
    pub fn completion_from_assignment(&self, phi: &CnfFormula, assignment: &[bool]) -> Result<CompleteMatrix> {
        let mut t = self.instance.matrix().clone();
        for (i, clause) in phi.clauses().iter().enumerate() {
            let chosen = clause
                .iter()
                .position(|&l| assignment[CnfFormula::var(l)] == (l > 0))
                .ok_or_else(|| DmcError::InvalidParameter(format!("clause {i} is not satisfied")))?;
            let c_fill = [[false, false], [false, true], [true, false]][chosen];
            for j in 0..4 {
                let fill = match j {
                    3 => c_fill,
                    _ if j == chosen => [true, false],
                    _ => [false, true],
                };
                let (row, col) = (BLOCK_ROWS * i + j, BLOCK_COLS * i + hole_col(j));
                t.set(row, col, Cell::from_bit(fill[0]));
                t.set(row, col + 1, Cell::from_bit(fill[1]));
            }
        }
        CompleteMatrix::try_from(t)
    }

    /// Literals filled 10 are set true; untouched variables stay false.
    pub fn decode(&self, phi: &CnfFormula, t: &CompleteMatrix) -> Vec<bool> {
        let mut a = vec![false; phi.num_vars()];
        for i in 0..self.num_clauses {
            for (j, &lit) in phi.clauses()[i].iter().enumerate() {
                let (row, col) = (BLOCK_ROWS * i + j, BLOCK_COLS * i + hole_col(j));
                if t.get(row, col) && !t.get(row, col + 1) {
                    a[CnfFormula::var(lit)] = lit > 0;
                }
            }
        }
        a
    }

    /// Offset form with the B blocks written out as columns.
    pub fn materialize(&self, max_width: usize) -> Result<DmcInstance> {
        let extra = self.stack.materialize(max_width)?;
        DmcInstance::new(self.instance.matrix().hstack(&extra)?, self.instance.alpha(), self.instance.beta())
    }
}
