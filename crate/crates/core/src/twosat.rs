//! 2-SAT via the implication graph and Tarjan's strongly connected components.

use std::fmt::Write as _;

/// A variable or its negation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    /// The literal "var = value".
    pub fn is(var: usize, value: bool) -> Self {
        Literal { var, positive: value }
    }

    pub fn negated(self) -> Self {
        Literal {
            var: self.var,
            positive: !self.positive,
        }
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }

    // Node 2v is ¬x_v and 2v+1 is x_v. Visiting negative nodes first makes
    // unconstrained variables come out false.
    #[inline]
    fn node(self) -> usize {
        2 * self.var + self.positive as usize
    }
}

/// Conjunction of clauses with one or two literals. A unit clause is
/// stored as (l ∨ l).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoSatFormula {
    num_vars: usize,
    clauses: Vec<(Literal, Literal)>,
}

impl TwoSatFormula {
    pub fn new(num_vars: usize) -> Self {
        TwoSatFormula {
            num_vars,
            clauses: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[(Literal, Literal)] {
        &self.clauses
    }

    /// Adds a fresh variable and returns its index.
    pub fn new_var(&mut self) -> usize {
        self.num_vars += 1;
        self.num_vars - 1
    }

    pub fn add_clause(&mut self, a: Literal, b: Literal) {
        assert!(
            a.var < self.num_vars && b.var < self.num_vars,
            "literal refers to an unknown variable"
        );
        self.clauses.push((a, b));
    }

    pub fn add_unit(&mut self, a: Literal) {
        self.add_clause(a, a);
    }

    /// Forces `a` and `b` to take equal truth values.
    pub fn add_equal(&mut self, a: Literal, b: Literal) {
        self.add_clause(a.negated(), b);
        self.add_clause(a, b.negated());
    }

    /// An always-false clause, for constraint tables that can fail outright.
    pub fn add_contradiction(&mut self) {
        let v = self.new_var();
        self.add_unit(Literal::pos(v));
        self.add_unit(Literal::neg(v));
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars && self.clauses.iter().all(|&(a, b)| a.eval(assignment) || b.eval(assignment))
    }

    /// DIMACS-style dump: 1-based variables, one 0-terminated clause per line.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        let lit = |l: Literal| {
            let v = l.var as i64 + 1;
            if l.positive {
                v
            } else {
                -v
            }
        };
        for &(a, b) in &self.clauses {
            if a == b {
                writeln!(out, "{} 0", lit(a)).unwrap();
            } else {
                writeln!(out, "{} {} 0", lit(a), lit(b)).unwrap();
            }
        }
        out
    }

    /// A satisfying assignment, or `None` if the formula is unsatisfiable.
    pub fn solve(&self) -> Option<Vec<bool>> {
        let nodes = 2 * self.num_vars;
        // Compressed adjacency: clause (a ∨ b) gives ¬a → b and ¬b → a.
        let mut start = vec![0usize; nodes + 1];
        for &(a, b) in &self.clauses {
            start[a.negated().node() + 1] += 1;
            start[b.negated().node() + 1] += 1;
        }
        for v in 0..nodes {
            start[v + 1] += start[v];
        }
        let mut fill = start.clone();
        let mut adj = vec![0usize; start[nodes]];
        for &(a, b) in &self.clauses {
            let (na, nb) = (a.negated().node(), b.negated().node());
            adj[fill[na]] = b.node();
            fill[na] += 1;
            adj[fill[nb]] = a.node();
            fill[nb] += 1;
        }

        let comp = tarjan(nodes, &start, &adj);
        let mut assignment = vec![false; self.num_vars];
        for v in 0..self.num_vars {
            let (f, t) = (comp[2 * v], comp[2 * v + 1]);
            if f == t {
                return None;
            }
            // Components are numbered in reverse topological order.
            assignment[v] = t < f;
        }
        debug_assert!(self.is_satisfied_by(&assignment));
        Some(assignment)
    }
}

/// Shorthand for `f.solve()`.
pub fn solve_2sat(f: &TwoSatFormula) -> Option<Vec<bool>> {
    f.solve()
}

// Iterative Tarjan; returns the component index of every node.
fn tarjan(nodes: usize, start: &[usize], adj: &[usize]) -> Vec<usize> {
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; nodes];
    let mut low = vec![0usize; nodes];
    let mut comp = vec![UNSET; nodes];
    let mut on_stack = vec![false; nodes];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;

    for root in 0..nodes {
        if index[root] != UNSET {
            continue;
        }
        call.push((root, start[root]));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut e)) = call.last_mut() {
            if *e < start[v + 1] {
                let w = adj[*e];
                *e += 1;
                if index[w] == UNSET {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, start[w]));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;

    fn formula(vars: usize, clauses: &[(i32, i32)]) -> TwoSatFormula {
        let lit = |x: i32| Literal::is(x.unsigned_abs() as usize - 1, x > 0);
        let mut f = TwoSatFormula::new(vars);
        for &(a, b) in clauses {
            f.add_clause(lit(a), lit(b));
        }
        f
    }

    fn brute(f: &TwoSatFormula) -> bool {
        (0..1u32 << f.num_vars()).any(|m| {
            let a: Vec<bool> = (0..f.num_vars()).map(|v| m >> v & 1 == 1).collect();
            f.is_satisfied_by(&a)
        })
    }

    #[test]
    fn forced_both_true() {
        let f = formula(2, &[(1, 2), (-1, 2), (1, -2)]);
        assert_eq!(f.solve(), Some(vec![true, true]));
    }

    #[test]
    fn all_four_sign_patterns_unsat() {
        let f = formula(2, &[(1, 2), (-1, 2), (1, -2), (-1, -2)]);
        assert_eq!(f.solve(), None);
    }

    #[test]
    fn empty_formula_defaults_to_false() {
        assert_eq!(TwoSatFormula::new(3).solve(), Some(vec![false; 3]));
    }

    #[test]
    fn unit_clauses_and_contradiction() {
        let mut f = TwoSatFormula::new(2);
        f.add_unit(Literal::pos(1));
        assert_eq!(f.solve(), Some(vec![false, true]));
        f.add_contradiction();
        assert_eq!(f.solve(), None);
    }

    #[test]
    fn dimacs_dump() {
        let mut f = formula(2, &[(1, -2)]);
        f.add_unit(Literal::neg(0));
        assert_eq!(f.to_dimacs(), "p cnf 2 2\n1 -2 0\n-1 0\n");
    }

    #[test]
    fn exhaustive_small_formulas() {
        // Every formula with up to 3 clauses over the full clause universe
        // of 3 variables.
        let lits: Vec<i32> = vec![1, -1, 2, -2, 3, -3];
        let mut universe = Vec::new();
        for (x, &a) in lits.iter().enumerate() {
            for &b in &lits[x..] {
                universe.push((a, b));
            }
        }
        let u = universe.len();
        for a in 0..u {
            for b in a..u {
                for c in b..u {
                    let f = formula(3, &[universe[a], universe[b], universe[c]]);
                    let got = f.solve();
                    assert_eq!(got.is_some(), brute(&f), "{:?}", f.clauses());
                    if let Some(asg) = got {
                        assert!(f.is_satisfied_by(&asg));
                    }
                }
            }
        }
    }

    #[test]
    fn long_implication_chain() {
        let n = 200_000;
        let mut f = TwoSatFormula::new(n);
        for v in 0..n - 1 {
            f.add_clause(Literal::neg(v), Literal::pos(v + 1));
        }
        f.add_unit(Literal::pos(0));
        let a = f.solve().unwrap();
        assert!(a.iter().all(|&x| x));
    }
}
