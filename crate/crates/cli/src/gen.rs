//! Instance generators behind `dmc gen`.

use std::path::PathBuf;

use anyhow::{bail, ensure, Context, Result};
use clap::Subcommand;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dmc_core::gadgets::{
    erase, gamma_b, gen_b, gen_ov, plant_from, plant_sunflower_matrix, plant_yes_instance, random_complete,
    reduce_1in3sat, reduce_3b2sat_with, reduce_conrmc_r2, CnfFormula, MultiplierRule, OvInstance,
};
use dmc_core::{verify_instance, Cell, CompleteMatrix, DmcInstance, IncompleteMatrix, RowVector};

/// Brute-force labels are skipped above this many variables or columns.
const MAX_BRUTE_FORCE: usize = 22;

#[derive(Subcommand, Clone, Debug)]
pub enum GenKind {
    /// Random complete matrix with cells erased; α = γ, β = δ of the original.
    Planted {
        #[arg(long)]
        n: usize,
        #[arg(long = "l")]
        ell: usize,
        #[arg(long, default_value_t = 0.2)]
        missing: f64,
    },
    /// Sunflower-shaped matrix (base row last) with cells erased.
    Sunflower {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        core: usize,
        #[arg(long)]
        petal: usize,
        /// Width; defaults to core + (n - 1) * petal.
        #[arg(long = "l")]
        ell: Option<usize>,
        #[arg(long, default_value_t = 0.2)]
        missing: f64,
    },
    /// Orthogonal Vectors gadget with bounds (0, 5l - 1): YES iff no orthogonal pair.
    Ov {
        /// File with the U vectors, a line "--", then the V vectors.
        #[arg(long)]
        vectors: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long = "l")]
        ell: Option<usize>,
    },
    /// (3,B2)-SAT reduction in offset form.
    Sat3b2 {
        /// Number of clauses, a multiple of 4.
        #[arg(long)]
        m: Option<usize>,
        /// DIMACS formula instead of a random one.
        #[arg(long)]
        formula: Option<PathBuf>,
        #[arg(long)]
        alpha: Option<usize>,
        /// Use the multipliers exactly as published (known to break the forward direction).
        #[arg(long)]
        published: bool,
    },
    /// Cubic monotone 1-in-3 SAT reduction in offset form.
    Oneinthree {
        /// Number of variables (= clauses), at least 3.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        formula: Option<PathBuf>,
    },
    /// Radius-2 closest string embedded into DMC.
    ConrmcR2 {
        #[arg(long)]
        n: usize,
        #[arg(long = "l")]
        ell: usize,
        #[arg(long, default_value_t = 0.2)]
        missing: f64,
        #[arg(long, default_value_t = 0)]
        alpha: usize,
        /// Defaults to 2 * ceil(alpha / 2) + 4.
        #[arg(long)]
        beta: Option<usize>,
    },
    /// Materialized B^n_{i,j} block (0-based rows i < j), repeated `copies` times.
    Bmatrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, default_value_t = 1)]
        copies: usize,
    },
}

/// What a generator produced: the instance plus whatever is known about it.
#[derive(Clone, Debug)]
pub struct Generated {
    pub instance: DmcInstance,
    pub witness: Option<CompleteMatrix>,
    /// First line YES/NO/UNKNOWN, then `key value` lines.
    pub label: Option<String>,
}

fn label(yes: Option<bool>, extra: &[(&str, String)]) -> String {
    let mut out = match yes {
        Some(true) => "YES\n".to_string(),
        Some(false) => "NO\n".to_string(),
        None => "UNKNOWN\n".to_string(),
    };
    for (k, v) in extra {
        out.push_str(&format!("{k} {v}\n"));
    }
    out
}

fn bits(a: &[bool]) -> String {
    a.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn read_formula(path: &PathBuf) -> Result<CnfFormula> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(CnfFormula::parse_dimacs(&text)?)
}

fn parse_vectors(text: &str) -> Result<OvInstance> {
    let mut u = Vec::new();
    let mut v = Vec::new();
    let mut second = false;
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        if line == "--" {
            ensure!(!second, "more than one \"--\" separator");
            second = true;
        } else if second {
            v.push(line);
        } else {
            u.push(line);
        }
    }
    ensure!(second, "missing \"--\" between U and V");
    Ok(OvInstance::parse(&u, &v)?)
}

/// Some center within distance 2 of every row, by enumeration.
fn radius2_center(s: &IncompleteMatrix) -> Option<RowVector> {
    let ell = s.num_cols();
    (0..1u64 << ell).find_map(|code| {
        let bits: Vec<bool> = (0..ell).map(|j| code >> j & 1 == 1).collect();
        let v = RowVector::from_bits(&bits);
        s.rows().iter().all(|r| r.distance(&v) <= 2).then_some(v)
    })
}

pub fn generate(kind: &GenKind, seed: u64) -> Result<Generated> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match kind {
        GenKind::Planted { n, ell, missing } => {
            ensure!(*n >= 1 && *ell >= 1, "need n >= 1 and l >= 1");
            let p = plant_yes_instance(*n, *ell, *missing, seed)?;
            Generated {
                instance: p.instance,
                witness: Some(p.witness),
                label: Some(label(Some(true), &[])),
            }
        }
        GenKind::Sunflower {
            n,
            core,
            petal,
            ell,
            missing,
        } => {
            ensure!(*n >= 1, "need n >= 1");
            let width = ell.unwrap_or(core + (n - 1) * petal);
            ensure!(width >= 1, "sunflower has zero width");
            let t = plant_sunflower_matrix(*n, *core, *petal, width)?;
            let p = plant_from(&t, *missing, &mut rng)?;
            Generated {
                instance: p.instance,
                witness: Some(p.witness),
                label: Some(label(Some(true), &[])),
            }
        }
        GenKind::Ov { vectors, n, ell } => {
            let ov = match (vectors, n, ell) {
                (Some(path), None, None) => {
                    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                    parse_vectors(&text)?
                }
                (None, Some(n), Some(ell)) => {
                    let mut draw = || (0..*n).map(|_| (0..*ell).map(|_| rng.random_bool(0.5)).collect()).collect();
                    let u = draw();
                    OvInstance::new(u, draw())?
                }
                _ => bail!("give either --vectors or both --n and --l"),
            };
            ensure!(!ov.is_empty() && ov.len() >= 1, "need at least one vector of positive length");
            let t = gen_ov(&ov)?;
            let instance = DmcInstance::new(t.as_incomplete().clone(), 0, 5 * ov.len() - 1)?;
            let pair = ov.orthogonal_pair();
            let extra: Vec<(&str, String)> = pair.map(|(a, b)| vec![("orthogonal", format!("{a} {b}"))]).unwrap_or_default();
            Generated {
                witness: pair.is_none().then_some(t),
                instance,
                label: Some(label(Some(pair.is_none()), &extra)),
            }
        }
        GenKind::Sat3b2 {
            m,
            formula,
            alpha,
            published,
        } => {
            let phi = match (formula, m) {
                (Some(path), None) => read_formula(path)?,
                (None, Some(m)) => CnfFormula::random_3b2(*m, &mut rng)?,
                _ => bail!("give either --formula or --m"),
            };
            let rule = if *published { MultiplierRule::Published } else { MultiplierRule::Corrected };
            let red = reduce_3b2sat_with(&phi, *alpha, rule)?;
            let (yes, witness, extra) = if phi.num_vars() <= MAX_BRUTE_FORCE {
                match phi.brute_force_sat() {
                    Some(tau) => {
                        let t = red.completion_from_assignment(&phi, &tau)?;
                        // the published rule can reject a satisfying assignment's completion
                        let w = verify_instance(&red.instance, &t)?.then_some(t);
                        (Some(true), w, vec![("assignment", bits(&tau))])
                    }
                    None => (Some(false), None, vec![]),
                }
            } else {
                (None, None, vec![])
            };
            let mut extra = extra;
            extra.push(("formula", phi.to_dimacs().lines().collect::<Vec<_>>().join(" | ")));
            Generated {
                instance: red.instance,
                witness,
                label: Some(label(yes, &extra)),
            }
        }
        GenKind::Oneinthree { m, formula } => {
            let phi = match (formula, m) {
                (Some(path), None) => read_formula(path)?,
                (None, Some(m)) => CnfFormula::random_cubic_monotone(*m, &mut rng)?,
                _ => bail!("give either --formula or --m"),
            };
            let red = reduce_1in3sat(&phi)?;
            let (yes, witness, mut extra) = if phi.num_vars() <= MAX_BRUTE_FORCE {
                match phi.brute_force_one_in_three() {
                    Some(tau) => {
                        let t = red.completion_from_assignment(&phi, &tau)?;
                        (Some(true), Some(t), vec![("assignment", bits(&tau))])
                    }
                    None => (Some(false), None, vec![]),
                }
            } else {
                (None, None, vec![])
            };
            extra.push(("formula", phi.to_dimacs().lines().collect::<Vec<_>>().join(" | ")));
            Generated {
                instance: red.instance,
                witness,
                label: Some(label(yes, &extra)),
            }
        }
        GenKind::ConrmcR2 {
            n,
            ell,
            missing,
            alpha,
            beta,
        } => {
            ensure!(*n >= 1 && *ell >= 1, "need n >= 1 and l >= 1");
            let beta = beta.unwrap_or(2 * alpha.div_ceil(2) + 4);
            let s = erase(&random_complete(*n, *ell, &mut rng)?, *missing, &mut rng)?;
            let instance = reduce_conrmc_r2(&s, *alpha, beta)?;
            if *ell > MAX_BRUTE_FORCE {
                return Ok(Generated {
                    instance,
                    witness: None,
                    label: Some(label(None, &[])),
                });
            }
            let center = radius2_center(&s);
            let witness = center.as_ref().map(|c| {
                // rows take the center's values where missing; the extra row is the center
                let mut t = instance.matrix().clone();
                for i in 0..=*n {
                    for j in 0..*ell {
                        if t.get(i, j) == Cell::Missing {
                            t.set(i, j, Cell::from_bit(c.bit(j)));
                        }
                    }
                }
                CompleteMatrix::try_from(t).expect("every missing cell filled")
            });
            if let Some(t) = &witness {
                ensure!(verify_instance(&instance, t)?, "internal error: center completion fails");
            }
            let extra: Vec<(&str, String)> = center.iter().map(|c| ("center", c.to_string())).collect();
            Generated {
                instance,
                witness,
                label: Some(label(Some(center.is_some()), &extra)),
            }
        }
        GenKind::Bmatrix { n, i, j, copies } => {
            ensure!(*copies >= 1, "need at least one copy");
            let b = gen_b(*n, *i, *j)?;
            let mut t = b.clone();
            for _ in 1..*copies {
                t = t.hstack(&b)?;
            }
            let g = gamma_b(*n) * copies;
            let instance = DmcInstance::new(t.as_incomplete().clone(), g, g + 2 * copies)?;
            Generated {
                instance,
                witness: Some(t),
                label: Some(label(Some(true), &[])),
            }
        }
    })
}
