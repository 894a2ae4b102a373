//! Degree-constrained subgraphs of bipartite graphs via flows with lower
//! bounds, and the sunflower completion problem (SMC) built on top.
//!
//! SMC asks for a completion of S whose difference sets
//! D(T[1], T[n]), ..., D(T[n-1], T[n]) are pairwise disjoint, each of
//! size at most `s`, with total size at least `m`.

use std::collections::VecDeque;

use crate::matrix::{Cell, CompleteMatrix, IncompleteMatrix, RowVector};

const INF: i64 = i64::MAX / 4;

/// Dinic's algorithm on an edge list; edge `e ^ 1` is the reverse of `e`.
#[derive(Clone, Debug)]
pub(crate) struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize, cap: i64) -> usize {
        let e = self.to.len();
        self.to.extend([v, u]);
        self.cap.extend([cap, 0]);
        self.adj[u].push(e);
        self.adj[v].push(e + 1);
        e
    }

    /// Flow currently pushed through edge `e`.
    pub(crate) fn flow(&self, e: usize) -> i64 {
        self.cap[e ^ 1]
    }

    /// Removes edge `e` together with its residual.
    pub(crate) fn disable(&mut self, e: usize) {
        self.cap[e] = 0;
        self.cap[e ^ 1] = 0;
    }

    fn levels(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let mut level = vec![usize::MAX; self.adj.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && level[v] == usize::MAX {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        (level[t] != usize::MAX).then_some(level)
    }

    fn augment(&mut self, u: usize, t: usize, limit: i64, level: &[usize], next: &mut [usize]) -> i64 {
        if u == t {
            return limit;
        }
        while next[u] < self.adj[u].len() {
            let e = self.adj[u][next[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && level[v] == level[u] + 1 {
                let pushed = self.augment(v, t, limit.min(self.cap[e]), level, next);
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            next[u] += 1;
        }
        0
    }

    pub(crate) fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        while let Some(level) = self.levels(s, t) {
            let mut next = vec![0; self.adj.len()];
            loop {
                let pushed = self.augment(s, t, INF, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }
}

/// Bipartite graph with degree windows [g, f] on every vertex and a
/// target edge count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteDegreeGraph {
    pub left: usize,
    pub right: usize,
    /// (left vertex, right vertex) pairs.
    pub edges: Vec<(usize, usize)>,
    pub g_left: Vec<usize>,
    pub f_left: Vec<usize>,
    pub g_right: Vec<usize>,
    pub f_right: Vec<usize>,
    pub min_edges: usize,
}

impl BipartiteDegreeGraph {
    /// True iff `chosen` (edge indices) meets every degree window and the
    /// edge target.
    pub fn is_factor(&self, chosen: &[usize]) -> bool {
        let mut dl = vec![0; self.left];
        let mut dr = vec![0; self.right];
        let mut seen = vec![false; self.edges.len()];
        for &e in chosen {
            if e >= self.edges.len() || std::mem::replace(&mut seen[e], true) {
                return false;
            }
            dl[self.edges[e].0] += 1;
            dr[self.edges[e].1] += 1;
        }
        chosen.len() >= self.min_edges
            && (0..self.left).all(|u| self.g_left[u] <= dl[u] && dl[u] <= self.f_left[u])
            && (0..self.right).all(|v| self.g_right[v] <= dr[v] && dr[v] <= self.f_right[v])
    }
}

/// Edge indices of a subgraph with g ≤ deg ≤ f everywhere and at least
/// `min_edges` edges, or `None`.
///
/// A feasible circulation with lower bounds is found first; the flow is
/// then maximized and compared with the edge target.
pub fn solve_bipartite_gf_factor(g: &BipartiteDegreeGraph) -> Option<Vec<usize>> {
    let (l, r) = (g.left, g.right);
    if (0..l).any(|u| g.g_left[u] > g.f_left[u]) || (0..r).any(|v| g.g_right[v] > g.f_right[v]) {
        return None;
    }
    let s = l + r;
    let t = s + 1;
    let ss = t + 1;
    let tt = ss + 1;
    let mut net = FlowNetwork::new(tt + 1);
    let mut excess = vec![0i64; tt + 1];
    let mut bounded = |net: &mut FlowNetwork, u: usize, v: usize, lo: usize, hi: usize| {
        excess[v] += lo as i64;
        excess[u] -= lo as i64;
        net.add_edge(u, v, (hi - lo) as i64)
    };
    for u in 0..l {
        bounded(&mut net, s, u, g.g_left[u], g.f_left[u]);
    }
    let edge_ids: Vec<usize> = g.edges.iter().map(|&(u, v)| bounded(&mut net, u, l + v, 0, 1)).collect();
    for v in 0..r {
        bounded(&mut net, l + v, t, g.g_right[v], g.f_right[v]);
    }
    let back = net.add_edge(t, s, INF);

    let mut demand = 0;
    let mut helpers = Vec::new();
    for (x, &ex) in excess.iter().enumerate() {
        if ex > 0 {
            helpers.push(net.add_edge(ss, x, ex));
            demand += ex;
        } else if ex < 0 {
            helpers.push(net.add_edge(x, tt, -ex));
        }
    }
    if net.max_flow(ss, tt) < demand {
        return None;
    }
    let base = net.flow(back);
    net.disable(back);
    for e in helpers {
        net.disable(e);
    }
    let total = base + net.max_flow(s, t);
    if total < g.min_edges as i64 {
        return None;
    }
    let chosen: Vec<usize> = (0..g.edges.len()).filter(|&k| net.flow(edge_ids[k]) > 0).collect();
    debug_assert!(g.is_factor(&chosen));
    Some(chosen)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmcInstance {
    pub matrix: IncompleteMatrix,
    pub s: usize,
    pub m: usize,
}

/// How one column is completed when its edge to row `i` is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ColumnCase {
    /// Row i gets 1, all other rows 0 (in normalized values).
    Lone,
    /// At most one known 0 (no 1) at some row h < n; row i = h gets 0 and
    /// everything else 1.
    LoneAtZero(usize),
    /// One known 0 and one known 1: row i keeps its value, the rest flip it.
    KeepRow,
}

/// The factor instance of an SMC instance plus what is needed to turn a
/// factor back into a completion.
#[derive(Clone, Debug)]
pub struct SmcGraph {
    pub graph: BipartiteDegreeGraph,
    complemented: Vec<bool>,
    cases: Vec<ColumnCase>,
    source: IncompleteMatrix,
}

/// The (g, f)-factor instance of an SMC instance, or `None` when a column
/// alone already rules out a solution.
pub fn build_smc_graph(inst: &SmcInstance) -> Option<SmcGraph> {
    let s = &inst.matrix;
    let n = s.num_rows();
    let ell = s.num_cols();
    let last = n - 1;
    let mut edges = Vec::new();
    let mut g_right = vec![0; ell];
    let mut complemented = vec![false; ell];
    let mut cases = vec![ColumnCase::Lone; ell];
    for j in 0..ell {
        let (mut a0, mut a1) = s.column_counts(j);
        let flip = a1 > a0;
        if flip {
            std::mem::swap(&mut a0, &mut a1);
        }
        complemented[j] = flip;
        let cell = |i: usize| match s.get(i, j) {
            Cell::Missing => None,
            c => Some((c == Cell::One) != flip),
        };
        if (a0 >= 2 && cell(last) == Some(true)) || a1 >= 2 {
            return None;
        }
        g_right[j] = a1;
        let mut link = |i: usize| edges.push((i, j));
        match (a0, a1) {
            (0 | 1, 0) => {
                if let Some(h) = (0..last).find(|&h| cell(h).is_some()) {
                    cases[j] = ColumnCase::LoneAtZero(h);
                }
                (0..last).for_each(&mut link);
            }
            (1, 1) => {
                cases[j] = ColumnCase::KeepRow;
                (0..last).filter(|&i| cell(i).is_some()).for_each(&mut link);
            }
            (_, 0) => (0..last).filter(|&i| cell(i).is_none()).for_each(&mut link),
            _ => (0..last).filter(|&i| cell(i) == Some(true)).for_each(&mut link),
        }
    }
    let graph = BipartiteDegreeGraph {
        left: last,
        right: ell,
        edges,
        g_left: vec![0; last],
        f_left: vec![inst.s; last],
        g_right,
        f_right: vec![1; ell],
        min_edges: inst.m,
    };
    Some(SmcGraph {
        graph,
        complemented,
        cases,
        source: s.clone(),
    })
}

impl SmcGraph {
    /// The completion encoded by a set of chosen edges (indices into
    /// `graph.edges`), each column taking the fill that isolates its row.
    pub fn completion(&self, chosen: &[usize]) -> CompleteMatrix {
        let s = &self.source;
        let (n, ell) = (s.num_rows(), s.num_cols());
        let mut owner = vec![None; ell];
        for &e in chosen {
            let (i, j) = self.graph.edges[e];
            owner[j] = Some(i);
        }
        let mut rows = vec![RowVector::zeros(ell); n];
        for j in 0..ell {
            let flip = self.complemented[j];
            for (h, row) in rows.iter_mut().enumerate() {
                let normalized = match (owner[j], self.cases[j]) {
                    (None, _) => match s.get(h, j) {
                        Cell::Missing => false,
                        c => (c == Cell::One) != flip,
                    },
                    (Some(i), ColumnCase::Lone) => h == i,
                    (Some(i), ColumnCase::LoneAtZero(z)) => {
                        if z == i {
                            h != i
                        } else {
                            h == i
                        }
                    }
                    (Some(i), ColumnCase::KeepRow) => {
                        let own = s.get(i, j) == Cell::One;
                        if h == i {
                            own != flip
                        } else {
                            own == flip
                        }
                    }
                };
                row.set_bit(j, normalized != flip);
            }
        }
        let t = CompleteMatrix::new(rows).expect("rows are complete");
        debug_assert!(t.is_completion_of(s));
        t
    }
}

/// True iff T's difference sets to its last row are pairwise disjoint,
/// each of size ≤ s, with total ≥ m.
pub fn smc_condition_holds(t: &CompleteMatrix, s: usize, m: usize) -> bool {
    let n = t.num_rows();
    let last = t.row(n - 1);
    let mut used = RowVector::zeros(t.num_cols());
    let mut total = 0;
    for i in 0..n - 1 {
        let r = t.row(i);
        let mut size = 0;
        for j in 0..t.num_cols() {
            if r.bit(j) != last.bit(j) {
                if used.bit(j) {
                    return false;
                }
                used.set_bit(j, true);
                size += 1;
            }
        }
        if size > s {
            return false;
        }
        total += size;
    }
    total >= m
}

pub fn solve_smc(inst: &SmcInstance) -> Option<CompleteMatrix> {
    let built = build_smc_graph(inst)?;
    let chosen = solve_bipartite_gf_factor(&built.graph)?;
    let t = built.completion(&chosen);
    debug_assert!(smc_condition_holds(&t, inst.s, inst.m), "{t:?}");
    Some(t)
}
