//! CNF formulas for the two SAT variants the reductions start from.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{DmcError, Result};

/// Clauses of signed, 1-based literals as in DIMACS.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

/// Attempts before a shuffle generator gives up.
const MAX_SHUFFLES: usize = 100_000;

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for c in &clauses {
            for &lit in c {
                if lit == 0 || lit.unsigned_abs() as usize > num_vars {
                    return Err(DmcError::FormulaShape(format!(
                        "literal {lit} outside 1..={num_vars}"
                    )));
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// 0-based variable of a literal.
    pub fn var(lit: i32) -> usize {
        lit.unsigned_abs() as usize - 1
    }

    fn lit_true(lit: i32, assignment: &[bool]) -> bool {
        assignment[Self::var(lit)] == (lit > 0)
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&l| Self::lit_true(l, assignment)))
    }

    /// Exactly one true literal in every clause.
    pub fn is_one_in_three_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().filter(|&&l| Self::lit_true(l, assignment)).count() == 1)
    }

    fn three_distinct_vars(&self) -> Result<()> {
        for (i, c) in self.clauses.iter().enumerate() {
            let mut vars: Vec<usize> = c.iter().map(|&l| Self::var(l)).collect();
            vars.sort_unstable();
            vars.dedup();
            if c.len() != 3 || vars.len() != 3 {
                return Err(DmcError::FormulaShape(format!(
                    "clause {i} does not have three literals over distinct variables"
                )));
            }
        }
        Ok(())
    }

    /// Every literal occurs exactly twice; clauses have three distinct variables.
    pub fn validate_3b2(&self) -> Result<()> {
        self.three_distinct_vars()?;
        let mut pos = vec![0usize; self.num_vars];
        let mut neg = vec![0usize; self.num_vars];
        for &lit in self.clauses.iter().flatten() {
            if lit > 0 {
                pos[Self::var(lit)] += 1;
            } else {
                neg[Self::var(lit)] += 1;
            }
        }
        for v in 0..self.num_vars {
            if pos[v] != 2 || neg[v] != 2 {
                return Err(DmcError::FormulaShape(format!(
                    "variable {} occurs {}x positive and {}x negative",
                    v + 1,
                    pos[v],
                    neg[v]
                )));
            }
        }
        Ok(())
    }

    /// Positive literals only, every variable exactly three times, three
    /// distinct variables per clause.
    pub fn validate_cubic_monotone(&self) -> Result<()> {
        self.three_distinct_vars()?;
        let mut count = vec![0usize; self.num_vars];
        for &lit in self.clauses.iter().flatten() {
            if lit < 0 {
                return Err(DmcError::FormulaShape(format!("negative literal {lit}")));
            }
            count[Self::var(lit)] += 1;
        }
        if let Some(v) = count.iter().position(|&c| c != 3) {
            return Err(DmcError::FormulaShape(format!(
                "variable {} occurs {} times",
                v + 1,
                count[v]
            )));
        }
        Ok(())
    }

    fn first_assignment(&self, accept: impl Fn(&[bool]) -> bool) -> Option<Vec<bool>> {
        assert!(self.num_vars < 64, "brute force over {} variables", self.num_vars);
        (0..1u64 << self.num_vars).find_map(|code| {
            let a: Vec<bool> = (0..self.num_vars).map(|v| code >> v & 1 == 1).collect();
            accept(&a).then_some(a)
        })
    }

    /// Satisfying assignment by enumeration.
    pub fn brute_force_sat(&self) -> Option<Vec<bool>> {
        self.first_assignment(|a| self.is_satisfied_by(a))
    }

    /// 1-in-3 assignment by enumeration.
    pub fn brute_force_one_in_three(&self) -> Option<Vec<bool>> {
        self.first_assignment(|a| self.is_one_in_three_by(a))
    }

    /// Random (3,B2) formula with `num_clauses` clauses, a positive
    /// multiple of 4.
    pub fn random_3b2<R: Rng + ?Sized>(num_clauses: usize, rng: &mut R) -> Result<Self> {
        if num_clauses == 0 || num_clauses % 4 != 0 {
            return Err(DmcError::InvalidParameter(format!(
                "(3,B2) formulas need a positive multiple of 4 clauses, got {num_clauses}"
            )));
        }
        let num_vars = num_clauses * 3 / 4;
        let slots: Vec<i32> = (1..=num_vars as i32).flat_map(|v| [v, v, -v, -v]).collect();
        Self::shuffled(num_vars, slots, rng)
    }

    /// Random cubic monotone formula with m variables and m clauses, m ≥ 3.
    pub fn random_cubic_monotone<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Result<Self> {
        if m < 3 {
            return Err(DmcError::InvalidParameter(format!(
                "cubic monotone formulas need at least 3 variables, got {m}"
            )));
        }
        let slots: Vec<i32> = (1..=m as i32).flat_map(|v| [v, v, v]).collect();
        Self::shuffled(m, slots, rng)
    }

    /// Shuffles literal slots into triples until no triple repeats a variable.
    fn shuffled<R: Rng + ?Sized>(num_vars: usize, mut slots: Vec<i32>, rng: &mut R) -> Result<Self> {
        for _ in 0..MAX_SHUFFLES {
            slots.shuffle(rng);
            let clauses: Vec<Vec<i32>> = slots.chunks(3).map(<[i32]>::to_vec).collect();
            let f = CnfFormula { num_vars, clauses };
            if f.three_distinct_vars().is_ok() {
                return Ok(f);
            }
        }
        Err(DmcError::InvalidParameter("no valid shuffle found".into()))
    }

    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                if parts.len() != 3 || parts[0] != "cnf" {
                    return Err(DmcError::FormulaShape(format!("line {}: bad problem line", lineno + 1)));
                }
                let parse = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| DmcError::FormulaShape(format!("line {}: bad count {s:?}", lineno + 1)))
                };
                header = Some((parse(parts[1])?, parse(parts[2])?));
                continue;
            }
            for tok in line.split_whitespace() {
                let lit: i32 = tok
                    .parse()
                    .map_err(|_| DmcError::FormulaShape(format!("line {}: bad literal {tok:?}", lineno + 1)))?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else {
                    current.push(lit);
                }
            }
        }
        if !current.is_empty() {
            clauses.push(current);
        }
        let (num_vars, num_clauses) =
            header.ok_or_else(|| DmcError::FormulaShape("missing `p cnf` line".into()))?;
        if clauses.len() != num_clauses {
            return Err(DmcError::FormulaShape(format!(
                "header announces {num_clauses} clauses, found {}",
                clauses.len()
            )));
        }
        CnfFormula::new(num_vars, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p cnf {} {}", self.num_vars, self.clauses.len())?;
        for c in &self.clauses {
            for lit in c {
                write!(f, "{lit} ")?;
            }
            writeln!(f, "0")?;
        }
        Ok(())
    }
}

/// Occurrence of a literal: clause index and position, both 0-based.
pub type Occurrence = (usize, usize);

/// All (i, j, i', j') with i < i' whose literals are a variable and its
/// negation.
pub fn conflicts(phi: &CnfFormula) -> Vec<(usize, usize, usize, usize)> {
    let n = phi.num_vars();
    let mut pos: Vec<Vec<Occurrence>> = vec![Vec::new(); n];
    let mut neg: Vec<Vec<Occurrence>> = vec![Vec::new(); n];
    for (i, c) in phi.clauses().iter().enumerate() {
        for (j, &lit) in c.iter().enumerate() {
            let v = CnfFormula::var(lit);
            if lit > 0 {
                pos[v].push((i, j));
            } else {
                neg[v].push((i, j));
            }
        }
    }
    let mut out = Vec::new();
    for v in 0..n {
        for &a in &pos[v] {
            for &b in &neg[v] {
                let (x, y) = if a < b { (a, b) } else { (b, a) };
                out.push((x.0, x.1, y.0, y.1));
            }
        }
    }
    out.sort_unstable();
    out
}
