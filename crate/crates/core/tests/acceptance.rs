//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if a hard criterion fails. Criterion 10 is informational.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dmc_core::gadgets::{
    gamma_b, gen_b, gen_b_offsets, gen_ov, plant_ball, plant_diameter3, plant_sunflower_matrix, random_complete,
    reduce_1in3sat, reduce_3b2sat, reduce_3b2sat_with, CnfFormula, Diameter3Shape, MultiplierRule, OvInstance,
};
use dmc_core::sets::{deza_certified, detect_sunflower};
use dmc_core::solvers::{solve_alpha_eq_beta, solve_d0b1, solve_d0b2};
use dmc_core::{
    diameter_stats, dirty_columns, solve, solve_backtracking, solve_exhaustive, verify_instance, Cell, ColumnSet,
    CompleteMatrix, DmcInstance, IncompleteMatrix, PairOffsets, SearchBudget, SolverChoice, Verdict,
};
use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const MAX_ROWS: usize = 8;
const MAX_COLS: usize = 12;
const MAX_MISSING: usize = 14;
const PER_REGIME: usize = 5000;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

fn rng_for(tag: u64, idx: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(tag.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ idx as u64)
}

fn budget() -> SearchBudget {
    SearchBudget::default()
}

// ---------------------------------------------------------------- instances

/// Random column permutation and XOR mask; both keep every distance.
fn scramble<R: Rng>(t: &CompleteMatrix, rng: &mut R) -> CompleteMatrix {
    let ell = t.num_cols();
    let mut perm: Vec<usize> = (0..ell).collect();
    perm.shuffle(rng);
    let mask: Vec<bool> = (0..ell).map(|_| rng.random_bool(0.5)).collect();
    let rows: Vec<Vec<bool>> = t
        .rows()
        .iter()
        .map(|r| perm.iter().zip(&mask).map(|(&j, &x)| r.bit(j) ^ x).collect())
        .collect();
    CompleteMatrix::from_bits(&rows).unwrap()
}

/// Appends constant columns up to width `ell`.
fn pad<R: Rng>(t: &CompleteMatrix, ell: usize, rng: &mut R) -> CompleteMatrix {
    let extra = ell.saturating_sub(t.num_cols());
    let fill: Vec<bool> = (0..extra).map(|_| rng.random_bool(0.5)).collect();
    let rows: Vec<Vec<bool>> = t
        .rows()
        .iter()
        .map(|r| (0..r.len()).map(|j| r.bit(j)).chain(fill.iter().copied()).collect())
        .collect();
    CompleteMatrix::from_bits(&rows).unwrap()
}

/// Flips one random cell with probability `p`.
fn noise<R: Rng>(t: &CompleteMatrix, p: f64, rng: &mut R) -> CompleteMatrix {
    let mut rows: Vec<Vec<bool>> = t.rows().iter().map(|r| (0..r.len()).map(|j| r.bit(j)).collect()).collect();
    if t.num_cols() > 0 && rng.random_bool(p) {
        let i = rng.random_range(0..rows.len());
        let j = rng.random_range(0..t.num_cols());
        rows[i][j] = !rows[i][j];
    }
    CompleteMatrix::from_bits(&rows).unwrap()
}

/// Erases up to `MAX_MISSING` cells, at most `per_row` in any row.
fn erase_some<R: Rng>(t: &CompleteMatrix, per_row: usize, rng: &mut R) -> IncompleteMatrix {
    let (n, ell) = (t.num_rows(), t.num_cols());
    let cap = MAX_MISSING.min(n * ell).min(n * per_row.min(ell));
    let want = rng.random_range(0..=cap);
    let mut s = t.as_incomplete().clone();
    let mut in_row = vec![0; n];
    let mut placed = 0;
    for pos in sample(rng, n * ell, n * ell) {
        if placed == want {
            break;
        }
        let (i, j) = (pos / ell, pos % ell);
        if in_row[i] < per_row {
            s.set(i, j, Cell::Missing);
            in_row[i] += 1;
            placed += 1;
        }
    }
    s
}

fn random_matrix<R: Rng>(rng: &mut R) -> CompleteMatrix {
    let n = rng.random_range(1..=MAX_ROWS);
    let ell = rng.random_range(0..=MAX_COLS);
    random_complete(n, ell, rng).unwrap()
}

/// Complete matrix shaped for the regime, before erasure.
fn shaped(regime: &Regime, rng: &mut ChaCha8Rng) -> CompleteMatrix {
    if rng.random_bool(0.2) {
        return random_matrix(rng);
    }
    let n = rng.random_range(2..=MAX_ROWS);
    let ell = rng.random_range(3..=MAX_COLS);
    let t = match *regime {
        Regime::D0b1 => plant_ball(n, ell, if rng.random_bool(0.7) { 0 } else { 1 }, rng).unwrap(),
        Regime::D0b2 => plant_ball(n, ell, 1, rng).unwrap(),
        Regime::D0b3 => {
            let shape = if rng.random_bool(0.5) {
                Diameter3Shape::FreeColumn
            } else {
                Diameter3Shape::ThreeColumnCore
            };
            plant_diameter3(n, ell, shape, rng).unwrap()
        }
        Regime::AlphaEqBeta(alpha) => {
            // core = petal = α/2 for even α; odd α only fits two rows
            if alpha % 2 == 0 {
                let half = alpha / 2;
                let n = n.min(1 + (MAX_COLS - half) / half);
                plant_sunflower_matrix(n, half, half, ell.max(half * n)).unwrap()
            } else {
                plant_sunflower_matrix(2, 0, alpha, ell.max(alpha)).unwrap()
            }
        }
        Regime::AlphaPlus1(alpha) => {
            let petal = alpha.div_ceil(2);
            let core = alpha + rng.random_range(0..=1) - petal;
            let n = n.min(1 + (MAX_COLS - core) / petal);
            plant_sunflower_matrix(n, core, petal, ell.max(core + (n - 1) * petal)).unwrap()
        }
        Regime::K1 => random_complete(n, ell, rng).unwrap(),
        Regime::K2eq => {
            let half = rng.random_range(1..=2);
            let n = n.min(1 + (MAX_COLS - half) / half);
            plant_sunflower_matrix(n, half, half, ell.max(half * n)).unwrap()
        }
    };
    let width = t.num_cols().max(ell);
    let t = scramble(&pad(&t, width, rng), rng);
    noise(&t, 0.25, rng)
}

#[derive(Clone, Copy, Debug)]
enum Regime {
    D0b1,
    D0b2,
    D0b3,
    AlphaEqBeta(usize),
    AlphaPlus1(usize),
    K1,
    K2eq,
}

impl Regime {
    fn solver(self) -> SolverChoice {
        match self {
            Regime::D0b1 => SolverChoice::D0b1,
            Regime::D0b2 => SolverChoice::D0b2,
            Regime::D0b3 => SolverChoice::D0b3,
            Regime::AlphaEqBeta(_) => SolverChoice::AlphaEqBeta,
            Regime::AlphaPlus1(_) => SolverChoice::AlphaPlus1,
            Regime::K1 => SolverChoice::K1,
            Regime::K2eq => SolverChoice::K2eq,
        }
    }

    fn label(self) -> String {
        match self {
            Regime::AlphaEqBeta(a) | Regime::AlphaPlus1(a) => format!("{}(a={a})", self.solver()),
            _ => self.solver().to_string(),
        }
    }

    fn instance(self, rng: &mut ChaCha8Rng) -> DmcInstance {
        let t = shaped(&self, rng);
        let per_row = match self {
            Regime::K1 => 1,
            Regime::K2eq => 2,
            _ => MAX_COLS,
        };
        let s = erase_some(&t, per_row, rng);
        let (alpha, beta) = match self {
            Regime::D0b1 => (0, 1),
            Regime::D0b2 => (0, 2),
            Regime::D0b3 => (0, 3),
            Regime::AlphaEqBeta(a) => (a, a),
            Regime::AlphaPlus1(a) => (a, a + 1),
            Regime::K1 | Regime::K2eq => {
                // bounds near the planted matrix's own, nudged either way
                let st = diameter_stats(&t, &PairOffsets::zeros(t.num_rows()));
                let g = st.gamma.unwrap_or(0) as i64 + rng.random_range(-1..=1);
                let g = g.max(0) as usize;
                match self {
                    Regime::K2eq => (g, g),
                    _ => {
                        let d = (st.delta as i64 + rng.random_range(-1..=1)).max(g as i64) as usize;
                        (g, d)
                    }
                }
            }
        };
        DmcInstance::new(s, alpha, beta).unwrap()
    }
}

// ---------------------------------------------------------------- criteria

fn criterion1() -> Outcome {
    let regimes = [
        Regime::D0b1,
        Regime::D0b2,
        Regime::D0b3,
        Regime::AlphaEqBeta(2),
        Regime::AlphaEqBeta(3),
        Regime::AlphaEqBeta(4),
        Regime::AlphaPlus1(1),
        Regime::AlphaPlus1(2),
        Regime::AlphaPlus1(3),
        Regime::K1,
        Regime::K2eq,
    ];
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for (tag, regime) in regimes.iter().enumerate() {
        let start = Instant::now();
        let results: Vec<Result<bool, String>> = (0..PER_REGIME)
            .into_par_iter()
            .map(|idx| {
                let mut rng = rng_for(100 + tag as u64, idx);
                let inst = regime.instance(&mut rng);
                let want = solve_exhaustive(&inst, budget()).map_err(|e| format!("oracle: {e}"))?;
                let got = solve(&inst, regime.solver(), budget()).map_err(|e| format!("#{idx}: {e}"))?;
                if got.is_yes() != want.is_yes() {
                    return Err(format!("#{idx}: verdict {} vs oracle {}", got.is_yes(), want.is_yes()));
                }
                if let Verdict::Yes(t) = &got {
                    if !verify_instance(&inst, t).unwrap_or(false) {
                        return Err(format!("#{idx}: witness fails verification"));
                    }
                }
                Ok(got.is_yes())
            })
            .collect();
        let yes = results.iter().filter(|r| matches!(r, Ok(true))).count();
        let bad: Vec<&String> = results.iter().filter_map(|r| r.as_ref().err()).collect();
        println!("  info: {} {yes}/{PER_REGIME} yes, {:.1}s", regime.label(), start.elapsed().as_secs_f64());
        summary.push(format!("{} {}/{} yes", regime.label(), yes, PER_REGIME));
        if let Some(first) = bad.first() {
            failures.push(format!("{}: {} mismatches, first {first}", regime.label(), bad.len()));
        }
    }
    if failures.is_empty() {
        Outcome::new(true, format!("{} instances per regime; {}", PER_REGIME, summary.join(", ")))
    } else {
        Outcome::new(false, failures.join("; "))
    }
}

/// Every matrix with n ≤ 3, ℓ ≤ 3.
fn criterion2() -> Outcome {
    let cells = [Cell::Zero, Cell::One, Cell::Missing];
    let mut checked = 0usize;
    for n in 1..=3 {
        for ell in 1..=3 {
            let total = 3usize.pow((n * ell) as u32);
            for code in 0..total {
                let mut s = IncompleteMatrix::parse(&vec!["0".repeat(ell); n]).unwrap();
                let mut c = code;
                for i in 0..n {
                    for j in 0..ell {
                        s.set(i, j, cells[c % 3]);
                        c /= 3;
                    }
                }
                let inst = DmcInstance::new(s.clone(), 0, 1).unwrap();
                let fast = solve_d0b1(&inst).map(|v| v.is_yes());
                let oracle = solve_exhaustive(&inst, budget()).map(|v| v.is_yes());
                let dirty = dirty_columns(&s).len() <= 1;
                if fast.as_ref().ok() != Some(&dirty) || oracle.as_ref().ok() != Some(&dirty) {
                    return Outcome::new(false, format!("n={n} l={ell}:\n{s}\nd0b1 {fast:?}, oracle {oracle:?}, dirty<=1 {dirty}"));
                }
                checked += 1;
            }
        }
    }
    Outcome::new(true, format!("{checked} matrices"))
}

fn set(xs: &[usize]) -> ColumnSet {
    xs.iter().copied().collect()
}

/// All families of 2-sets over 8 points meeting pairwise in exactly one point.
fn weak_delta_families() -> Vec<Vec<ColumnSet>> {
    let edges: Vec<ColumnSet> = (0..8).flat_map(|a| (a + 1..8).map(move |b| set(&[a, b]))).collect();
    let meets = |x: &ColumnSet, y: &ColumnSet| x.intersection(y).count() == 1;
    let mut out = Vec::new();
    fn extend(
        edges: &[ColumnSet],
        meets: &dyn Fn(&ColumnSet, &ColumnSet) -> bool,
        chosen: &mut Vec<usize>,
        start: usize,
        out: &mut Vec<Vec<ColumnSet>>,
    ) {
        if chosen.len() >= 2 {
            out.push(chosen.iter().map(|&e| edges[e].clone()).collect());
        }
        for e in start..edges.len() {
            if chosen.iter().all(|&c| meets(&edges[c], &edges[e])) {
                chosen.push(e);
                extend(edges, meets, chosen, e + 1, out);
                chosen.pop();
            }
        }
    }
    extend(&edges, &meets, &mut Vec::new(), 0, &mut out);
    out
}

fn criterion3() -> Outcome {
    let families = weak_delta_families();
    let large: Vec<&Vec<ColumnSet>> = families.iter().filter(|f| f.len() >= 4).collect();
    for f in &large {
        if !deza_certified(f) {
            return Outcome::new(false, format!("uncertified weak system {f:?}"));
        }
    }
    for f in &families {
        if deza_certified(f) && detect_sunflower(f).is_none() {
            return Outcome::new(false, format!("certified but not a sunflower: {f:?}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for case in 0..500 {
        let petals = rng.random_range(8..=12);
        let ground = 2 + 2 * petals + rng.random_range(0..4);
        let points = sample(&mut rng, ground, 2 + 2 * petals).into_vec();
        let core = set(&points[..2]);
        let mut fam: Vec<ColumnSet> = (0..petals)
            .map(|p| {
                let mut s = core.clone();
                s.extend(&points[2 + 2 * p..4 + 2 * p]);
                s
            })
            .collect();
        fam.shuffle(&mut rng);
        if !deza_certified(&fam) {
            return Outcome::new(false, format!("random case {case} not certified"));
        }
        match detect_sunflower(&fam) {
            Some(sf) if sf.core == core => {}
            other => return Outcome::new(false, format!("random case {case}: detected {other:?}")),
        }
    }
    Outcome::new(
        true,
        format!("{} weak systems ({} with |F|>=4), 500 random mu=2 sunflowers", families.len(), large.len()),
    )
}

fn criterion4() -> Outcome {
    let mut pairs = 0;
    for n in 3..=8 {
        let g = gamma_b(n);
        if g != 2 * n * (n - 1) - 6 {
            return Outcome::new(false, format!("gamma_b({n}) = {g}"));
        }
        for i in 0..n {
            for i2 in i + 1..n {
                let b = gen_b(n, i, i2).unwrap();
                let off = gen_b_offsets(n, i, i2, 1).unwrap();
                for x in 0..n {
                    for y in x + 1..n {
                        let d = b.row(x).distance(b.row(y));
                        let want = if (x, y) == (i, i2) { g + 2 } else { g };
                        if d != want || off.get(x, y) != d {
                            return Outcome::new(
                                false,
                                format!("B^{n}_({i},{i2}) rows ({x},{y}): {d}, law {want}, offset {}", off.get(x, y)),
                            );
                        }
                    }
                }
                pairs += 1;
            }
        }
    }
    Outcome::new(true, format!("{pairs} blocks, n = 3..8"))
}

fn criterion5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for case in 0..100 {
        let phi = CnfFormula::random_3b2(4, &mut rng).unwrap();
        let Some(tau) = phi.brute_force_sat() else {
            return Outcome::new(false, format!("(3,B2) case {case} unsatisfiable:\n{phi}"));
        };
        let red = reduce_3b2sat(&phi, None).unwrap();
        let t = red.completion_from_assignment(&phi, &tau).unwrap();
        if !verify_instance(&red.instance, &t).unwrap() {
            return Outcome::new(false, format!("(3,B2) case {case}: completion fails\n{phi}"));
        }
    }
    let mut yes = 0;
    let mut nodes_note = Vec::new();
    for case in 0..100 {
        let m = rng.random_range(3..=5);
        let phi = CnfFormula::random_cubic_monotone(m, &mut rng).unwrap();
        let label = phi.brute_force_one_in_three();
        let red = reduce_1in3sat(&phi).unwrap();
        let missing = red.instance.matrix().missing_count();
        let verdict = if missing <= 20 {
            solve_exhaustive(&red.instance, budget())
        } else {
            solve_backtracking(&red.instance, budget())
        };
        let verdict = match verdict {
            Ok(v) => v,
            Err(e) => return Outcome::new(false, format!("1-in-3 case {case} (m={m}): {e}")),
        };
        if verdict.is_yes() != label.is_some() {
            return Outcome::new(false, format!("1-in-3 case {case}: label {} vs verdict {}\n{phi}", label.is_some(), verdict.is_yes()));
        }
        if let Verdict::Yes(t) = &verdict {
            if !verify_instance(&red.instance, t).unwrap() || !phi.is_one_in_three_by(&red.decode(t)) {
                return Outcome::new(false, format!("1-in-3 case {case}: witness does not decode"));
            }
            yes += 1;
        }
        if missing > 20 && nodes_note.is_empty() {
            nodes_note.push("m=5 via backtracking");
        }
    }
    Outcome::new(
        true,
        format!("100 (3,B2) completions verify; 100 cubic monotone labels agree ({yes} yes{})", {
            if nodes_note.is_empty() { String::new() } else { format!(", {}", nodes_note.join("")) }
        }),
    )
}

fn criterion6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0;
    let mut corrected_moves = 0;
    for m in [4, 8] {
        for case in 0..10 {
            let phi = CnfFormula::random_3b2(m, &mut rng).unwrap();
            let red = reduce_3b2sat_with(&phi, None, MultiplierRule::Published).unwrap();
            let bad = red.class_table_violations();
            if let Some(&(h, h2, class, d)) = bad.first() {
                return Outcome::new(
                    false,
                    format!("m={m} case {case}: pair ({h},{h2}) {class:?} at beta-{}", red.beta as i64 - d as i64),
                );
            }
            let n = red.instance.num_rows();
            checked += n * (n - 1) / 2;
            corrected_moves += reduce_3b2sat(&phi, None).unwrap().class_table_violations().len();
        }
    }
    println!("  info: corrected multipliers move {corrected_moves} pairs (one per clause) off the table");
    Outcome::new(true, format!("{checked} pairs over 20 formulas, published multipliers"))
}

fn ov_holds(inst: &OvInstance) -> bool {
    let t = gen_ov(inst).unwrap();
    let delta = diameter_stats(&t, &PairOffsets::zeros(t.num_rows())).delta;
    inst.orthogonal_pair().is_some() == (delta == 5 * inst.len())
}

fn ov_from_code(n: usize, ell: usize, code: u64) -> OvInstance {
    let vec_of = |k: usize| (0..ell).map(|b| code >> (k * ell + b) & 1 == 1).collect::<Vec<bool>>();
    OvInstance::new((0..n).map(vec_of).collect(), (n..2 * n).map(vec_of).collect()).unwrap()
}

fn criterion7() -> Outcome {
    const SAMPLES: u64 = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut exhaustive, mut sampled) = (0u64, 0u64);
    for n in 1..=4 {
        for ell in 1..=4 {
            let bits = 2 * n * ell;
            let codes: Vec<u64> = if 1u64 << bits <= SAMPLES {
                exhaustive += 1u64 << bits;
                (0..1u64 << bits).collect()
            } else {
                sampled += SAMPLES;
                (0..SAMPLES).map(|_| rng.random_range(0..1u64 << bits)).collect()
            };
            if let Some(code) = codes.into_iter().find(|&c| !ov_holds(&ov_from_code(n, ell, c))) {
                return Outcome::new(false, format!("n={n} l={ell}: {:?}", ov_from_code(n, ell, code)));
            }
        }
    }
    Outcome::new(true, format!("{exhaustive} exhaustive, {sampled} sampled"))
}

fn criterion8() -> Outcome {
    let bad: Vec<String> = (0..10_000usize)
        .into_par_iter()
        .filter_map(|idx| {
            let mut rng = rng_for(8, idx);
            let n = rng.random_range(3..=MAX_ROWS);
            let ell = rng.random_range(1..=MAX_COLS);
            let t = if rng.random_bool(0.5) {
                random_complete(n, ell, &mut rng).unwrap()
            } else {
                // nearly equidistant: a sunflower with one flipped cell
                let t = plant_sunflower_matrix(n.min(4), 1, 2, ell.max(7)).unwrap();
                noise(&scramble(&t, &mut rng), 0.8, &mut rng)
            };
            let alpha = 2 * rng.random_range(0..=(t.num_cols().saturating_sub(1)) / 2) + 1;
            let inst = DmcInstance::new(erase_some(&t, MAX_COLS, &mut rng), alpha, alpha).unwrap();
            let fast = solve_alpha_eq_beta(&inst, budget());
            let oracle = solve_exhaustive(&inst, budget());
            match (&fast, &oracle) {
                (Ok(Verdict::No), Ok(Verdict::No)) => None,
                _ => Some(format!("#{idx}: solver {:?}, oracle {:?}", fast.map(|v| v.is_yes()), oracle.map(|v| v.is_yes()))),
            }
        })
        .collect();
    match bad.first() {
        None => Outcome::new(true, "10000 instances, all No"),
        Some(first) => Outcome::new(false, format!("{} failures, first {first}", bad.len())),
    }
}

fn criterion9() -> Outcome {
    let s = IncompleteMatrix::parse(&["?1101", "?1010", "10010", "0?101"]).unwrap();
    let inst = DmcInstance::new(s, 0, 4).unwrap();
    let verdict = solve(&inst, SolverChoice::Auto, budget());
    let middle = CompleteMatrix::parse(&["11101", "01010", "10010", "00101"]).unwrap();
    let stats = diameter_stats(&middle, &PairOffsets::zeros(4));
    let ok_verdict = matches!(&verdict, Ok(Verdict::Yes(t)) if verify_instance(&inst, t).unwrap());
    let ok_middle = middle.is_completion_of(inst.matrix()) && verify_instance(&inst, &middle).unwrap() && stats.delta == 4;
    Outcome::new(
        ok_verdict && ok_middle,
        format!("solver yes {ok_verdict}; middle completion verifies with delta {}", stats.delta),
    )
}

fn time_d0b2(ell: usize) -> Duration {
    let mut rng = ChaCha8Rng::seed_from_u64(10 + ell as u64);
    let instances: Vec<DmcInstance> = (0..20)
        .map(|_| {
            let t = plant_ball(50, ell, 1, &mut rng).unwrap();
            let s = dmc_core::gadgets::erase(&t, 0.1, &mut rng).unwrap();
            DmcInstance::new(s, 0, 2).unwrap()
        })
        .collect();
    let mut best = Duration::MAX;
    for _ in 0..5 {
        let start = Instant::now();
        for inst in &instances {
            let v = solve_d0b2(inst, budget()).unwrap();
            assert!(v.is_yes());
        }
        best = best.min(start.elapsed());
    }
    best
}

fn criterion10() -> Outcome {
    let times: Vec<(usize, Duration)> = [10, 20, 40, 80].into_iter().map(|l| (l, time_d0b2(l))).collect();
    let factors: Vec<f64> = times
        .windows(2)
        .map(|w| w[1].1.as_secs_f64() / w[0].1.as_secs_f64().max(1e-9))
        .collect();
    let detail = format!(
        "{}; doubling factors {}",
        times.iter().map(|(l, t)| format!("l={l} {:.3}ms", t.as_secs_f64() * 1e3)).collect::<Vec<_>>().join(", "),
        factors.iter().map(|f| format!("{f:.2}")).collect::<Vec<_>>().join(", ")
    );
    Outcome::new(factors.iter().all(|&f| f < 4.0), detail)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, bool); 10] = [
        ("1 oracle equivalence per regime", criterion1, true),
        ("2 dirty-column characterization", criterion2, true),
        ("3 Deza certification", criterion3, true),
        ("4 gadget distance laws", criterion4, true),
        ("5 reduction soundness", criterion5, true),
        ("6 (3,B2) distance-class table", criterion6, true),
        ("7 OV gadget", criterion7, true),
        ("8 parity law", criterion8, true),
        ("9 worked example fixture", criterion9, true),
        ("10 d0b2 scaling (soft)", criterion10, false),
    ];
    let mut hard_fail = false;
    for (name, run, hard) in criteria {
        let start = Instant::now();
        let out = run();
        let secs = start.elapsed().as_secs_f64();
        let status = match (out.pass, hard) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "FAIL (soft)",
        };
        println!("{status} criterion {name} [{secs:.1}s]: {}", out.detail);
        hard_fail |= hard && !out.pass;
    }
    if hard_fail {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
