//! `dmc bench`: agreement and timing sweeps driven by a TOML config.
//!
//! ```toml
//! [[sweep]]
//! regime = "d0b2"     # any solver name
//! alpha = 2           # used by alpha_eq_beta, alpha_plus1
//! n = [10, 20, 50]
//! l = [10, 20, 40, 80]
//! instances = 20
//! missing = 0.1
//! noise = 0.0         # chance of flipping one cell after planting
//! seed = 1
//! ```
//!
//! Instances are planted in the regime, so without noise the answer is
//! always YES. Small instances are also checked against an oracle.

use std::time::Instant;

use anyhow::{bail, ensure, Result};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Deserialize;

use dmc_core::gadgets::{plant_ball, plant_sunflower_matrix, random_complete};
use dmc_core::{
    diameter_stats, solve_backtracking, solve_with, verify_instance, Cell, CompleteMatrix, DmcError, DmcInstance,
    PairOffsets, SearchBudget, SolverChoice, Verdict,
};

pub const CSV_HEADER: &str = "regime,n,l,solver,agreement,mean_time_us";

/// Oracle cross-check only up to this many missing cells.
const ORACLE_MISSING: usize = 20;
const ORACLE_BUDGET: u64 = 2_000_000;

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchConfig {
    #[serde(default)]
    pub sweep: Vec<Sweep>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sweep {
    pub regime: String,
    #[serde(default = "default_alpha")]
    pub alpha: usize,
    pub n: Vec<usize>,
    pub l: Vec<usize>,
    #[serde(default = "default_instances")]
    pub instances: usize,
    #[serde(default)]
    pub missing: f64,
    #[serde(default)]
    pub noise: f64,
    #[serde(default)]
    pub seed: u64,
}

fn default_alpha() -> usize {
    2
}

fn default_instances() -> usize {
    10
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub regime: String,
    pub n: usize,
    pub ell: usize,
    pub solver: String,
    pub agreement: bool,
    pub mean_time_us: f64,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{:.3}",
            self.regime, self.n, self.ell, self.solver, self.agreement, self.mean_time_us
        )
    }
}

pub fn parse_config(text: &str) -> Result<BenchConfig> {
    Ok(toml::from_str(text)?)
}

/// Erases cells at `rate`, keeping at most `per_row` per row.
fn erase_capped<R: Rng>(t: &CompleteMatrix, rate: f64, per_row: usize, rng: &mut R) -> dmc_core::IncompleteMatrix {
    let mut s = t.as_incomplete().clone();
    let ell = t.num_cols();
    for i in 0..t.num_rows() {
        let want = (0..ell).filter(|_| rate > 0.0 && rng.random_bool(rate)).count().min(per_row);
        for j in sample(rng, ell, want) {
            s.set(i, j, Cell::Missing);
        }
    }
    s
}

/// A planted instance for `choice`, plus whether it must be YES.
fn instance_for(choice: SolverChoice, sweep: &Sweep, n: usize, ell: usize, rng: &mut ChaCha8Rng) -> Result<(DmcInstance, bool)> {
    let a = sweep.alpha;
    let sunflower = |core: usize, petal: usize| -> Result<CompleteMatrix> {
        let need = core + (n - 1) * petal;
        ensure!(need <= ell, "{} needs l >= {need} at n = {n}", choice);
        Ok(plant_sunflower_matrix(n, core, petal, ell)?)
    };
    let (t, alpha, beta, per_row) = match choice {
        SolverChoice::D0b1 => (plant_ball(n, ell, 0, rng)?, 0, 1, ell),
        SolverChoice::D0b2 => (plant_ball(n, ell, 1, rng)?, 0, 2, ell),
        SolverChoice::D0b3 => (plant_ball(n, ell, 1, rng)?, 0, 3, ell),
        SolverChoice::AlphaEqBeta => {
            ensure!(a % 2 == 0 && a > 0, "alpha_eq_beta sweeps plant sunflowers and need an even positive alpha");
            (sunflower(a / 2, a / 2)?, a, a, ell)
        }
        SolverChoice::AlphaPlus1 => {
            ensure!(a > 0, "alpha_plus1 sweeps need alpha >= 1");
            let petal = a.div_ceil(2);
            (sunflower(a - petal, petal)?, a, a + 1, ell)
        }
        SolverChoice::K1 | SolverChoice::K2eq => {
            let t = random_complete(n, ell, rng)?;
            let st = diameter_stats(&t, &PairOffsets::zeros(n));
            let g = st.gamma.unwrap_or(0);
            if choice == SolverChoice::K1 {
                (t, g, st.delta, 1)
            } else {
                ensure!(a % 2 == 0 && a > 0, "k2eq sweeps plant sunflowers and need an even positive alpha");
                (sunflower(a / 2, a / 2)?, a, a, 2)
            }
        }
        SolverChoice::Auto | SolverChoice::Oracle | SolverChoice::Backtrack => {
            let t = random_complete(n, ell, rng)?;
            let st = diameter_stats(&t, &PairOffsets::zeros(n));
            (t, st.gamma.unwrap_or(0), st.delta, ell)
        }
    };
    let mut s = erase_capped(&t, sweep.missing, per_row, rng);
    let mut planted = true;
    if sweep.noise > 0.0 && rng.random_bool(sweep.noise) {
        let (i, j) = (rng.random_range(0..n), rng.random_range(0..ell));
        if let Some(b) = s.get(i, j).bit() {
            s.set(i, j, Cell::from_bit(!b));
            planted = false;
        }
    }
    Ok((DmcInstance::new(s, alpha, beta)?, planted))
}

struct Trial {
    agree: bool,
    route: &'static str,
    micros: f64,
}

fn run_one(choice: SolverChoice, inst: &DmcInstance, planted: bool) -> Result<Trial> {
    let start = Instant::now();
    let (verdict, route) = match solve_with(inst, choice, SearchBudget::default()) {
        Ok(x) => x,
        Err(DmcError::BudgetExceeded(_)) => {
            return Ok(Trial {
                agree: false,
                route: choice.name(),
                micros: start.elapsed().as_secs_f64() * 1e6,
            })
        }
        Err(e) => return Err(e.into()),
    };
    let micros = start.elapsed().as_secs_f64() * 1e6;
    let mut agree = match &verdict {
        Verdict::Yes(t) => verify_instance(inst, t)?,
        Verdict::No => !planted,
    };
    if inst.matrix().missing_count() <= ORACLE_MISSING {
        if let Ok(o) = solve_backtracking(inst, SearchBudget::new(ORACLE_BUDGET)) {
            agree &= o.is_yes() == verdict.is_yes();
        }
    }
    Ok(Trial { agree, route, micros })
}

pub fn run_sweep(sweep: &Sweep, parallel: bool) -> Result<Vec<BenchRow>> {
    let choice: SolverChoice = sweep.regime.parse()?;
    ensure!(sweep.instances > 0, "instances must be positive");
    if !(0.0..1.0).contains(&sweep.missing) || !(0.0..=1.0).contains(&sweep.noise) {
        bail!("missing must lie in [0, 1) and noise in [0, 1]");
    }
    let mut rows = Vec::new();
    for &n in &sweep.n {
        for &ell in &sweep.l {
            ensure!(n >= 1 && ell >= 1, "n and l must be positive");
            let mut rng = ChaCha8Rng::seed_from_u64(sweep.seed ^ ((n as u64) << 32) ^ ell as u64);
            let instances: Vec<(DmcInstance, bool)> = (0..sweep.instances)
                .map(|_| instance_for(choice, sweep, n, ell, &mut rng))
                .collect::<Result<_>>()?;
            let trials: Vec<Trial> = if parallel {
                instances.par_iter().map(|(i, p)| run_one(choice, i, *p)).collect::<Result<_>>()?
            } else {
                instances.iter().map(|(i, p)| run_one(choice, i, *p)).collect::<Result<_>>()?
            };
            let mut routes: Vec<&str> = trials.iter().map(|t| t.route).collect();
            routes.sort_unstable();
            routes.dedup();
            rows.push(BenchRow {
                regime: sweep.regime.clone(),
                n,
                ell,
                solver: routes.join("|"),
                agreement: trials.iter().all(|t| t.agree),
                mean_time_us: trials.iter().map(|t| t.micros).sum::<f64>() / trials.len() as f64,
            });
        }
    }
    Ok(rows)
}

pub fn run_bench(config: &BenchConfig, parallel: bool) -> Result<String> {
    let mut out = format!("{CSV_HEADER}\n");
    for sweep in &config.sweep {
        for row in run_sweep(sweep, parallel)? {
            out.push_str(&row.to_csv());
            out.push('\n');
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_config_gives_header_only() {
        let c = parse_config("").unwrap();
        assert_eq!(run_bench(&c, false).unwrap(), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn d0b2_sweep_agrees() {
        let c = parse_config(
            "[[sweep]]\nregime = \"d0b2\"\nn = [10, 30]\nl = [10, 20]\ninstances = 5\nmissing = 0.1\nnoise = 0.3\nseed = 3\n",
        )
        .unwrap();
        let csv = run_bench(&c, false).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 5);
        for l in &lines[1..] {
            assert_eq!(l.split(',').nth(4), Some("true"), "{l}");
        }
    }

    #[test]
    fn every_regime_plants() {
        for regime in ["d0b1", "d0b3", "alpha_eq_beta", "alpha_plus1", "k1", "k2eq", "auto"] {
            let c = parse_config(&format!(
                "[[sweep]]\nregime = \"{regime}\"\nalpha = 2\nn = [5]\nl = [12]\ninstances = 4\nmissing = 0.15\n"
            ))
            .unwrap();
            let rows = run_sweep(&c.sweep[0], true).unwrap();
            assert!(rows[0].agreement, "{regime}: {rows:?}");
        }
    }

    #[test]
    fn rejects_bad_config() {
        assert!(parse_config("[[sweep]]\nregime = \"d0b2\"\nn = [1]\nl = [1]\nbogus = 1\n").is_err());
        let c = parse_config("[[sweep]]\nregime = \"nope\"\nn = [1]\nl = [1]\n").unwrap();
        assert!(run_bench(&c, false).is_err());
    }
}
