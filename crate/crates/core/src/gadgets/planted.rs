//! Random instances with a known completion.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{DmcError, Result};
use crate::matrix::{diameter_stats, Cell, CompleteMatrix, DmcInstance, IncompleteMatrix, PairOffsets, RowVector};

/// An instance together with a completion that solves it.
#[derive(Clone, Debug)]
pub struct PlantedInstance {
    pub instance: DmcInstance,
    pub witness: CompleteMatrix,
}

fn check_rate(rate: f64) -> Result<()> {
    if !(0.0..1.0).contains(&rate) {
        return Err(DmcError::InvalidParameter(format!("missing rate {rate} outside [0, 1)")));
    }
    Ok(())
}

pub fn random_complete<R: Rng + ?Sized>(n: usize, ell: usize, rng: &mut R) -> Result<CompleteMatrix> {
    let rows: Vec<Vec<bool>> = (0..n).map(|_| (0..ell).map(|_| rng.random_bool(0.5)).collect()).collect();
    CompleteMatrix::from_bits(&rows)
}

/// Erases each cell of `t` independently with probability `rate`.
pub fn erase<R: Rng + ?Sized>(t: &CompleteMatrix, rate: f64, rng: &mut R) -> Result<IncompleteMatrix> {
    check_rate(rate)?;
    let mut s = t.as_incomplete().clone();
    for i in 0..t.num_rows() {
        for j in 0..t.num_cols() {
            if rate > 0.0 && rng.random_bool(rate) {
                s.set(i, j, Cell::Missing);
            }
        }
    }
    Ok(s)
}

/// Erases cells of `t` and sets α = γ(T), β = δ(T).
pub fn plant_from<R: Rng + ?Sized>(t: &CompleteMatrix, rate: f64, rng: &mut R) -> Result<PlantedInstance> {
    let stats = diameter_stats(t, &PairOffsets::zeros(t.num_rows()));
    let s = erase(t, rate, rng)?;
    let instance = DmcInstance::new(s, stats.gamma.unwrap_or(0), stats.delta)?;
    Ok(PlantedInstance {
        instance,
        witness: t.clone(),
    })
}

pub fn plant_yes_instance(n: usize, ell: usize, missing_rate: f64, seed: u64) -> Result<PlantedInstance> {
    check_rate(missing_rate)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = random_complete(n, ell, &mut rng)?;
    plant_from(&t, missing_rate, &mut rng)
}

/// Base row 0^ℓ last; row i < n − 1 flips the core columns and its own
/// petal block.
pub fn plant_sunflower_matrix(n: usize, core_size: usize, petal_size: usize, ell: usize) -> Result<CompleteMatrix> {
    if n == 0 {
        return Err(DmcError::InvalidParameter("no rows".into()));
    }
    let need = core_size + (n - 1) * petal_size;
    if ell < need {
        return Err(DmcError::InvalidParameter(format!("width {ell} below {need}")));
    }
    let rows = (0..n)
        .map(|i| {
            let mut r = RowVector::zeros(ell);
            if i + 1 < n {
                for j in 0..core_size {
                    r.set_bit(j, true);
                }
                let start = core_size + i * petal_size;
                for j in start..start + petal_size {
                    r.set_bit(j, true);
                }
            }
            r
        })
        .collect();
    CompleteMatrix::new(rows)
}

/// Rows within Hamming distance `radius` of a random center.
pub fn plant_ball<R: Rng + ?Sized>(n: usize, ell: usize, radius: usize, rng: &mut R) -> Result<CompleteMatrix> {
    let center: Vec<bool> = (0..ell).map(|_| rng.random_bool(0.5)).collect();
    let rows: Vec<Vec<bool>> = (0..n)
        .map(|_| {
            let mut r = center.clone();
            let flips = rng.random_range(0..=radius.min(ell));
            for j in sample(rng, ell, flips) {
                r[j] = !r[j];
            }
            r
        })
        .collect();
    CompleteMatrix::from_bits(&rows)
}

/// The two ways a matrix of diameter at most 3 can sit around a center.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter3Shape {
    /// One column is free; elsewhere every row is within 1 of the center.
    FreeColumn,
    /// Three core columns; a row off the center on one or two of them
    /// matches it elsewhere, the other rows are within 1 outside the core.
    ThreeColumnCore,
}

/// A complete matrix of diameter at most 3 of the given shape. Needs ℓ ≥ 3.
pub fn plant_diameter3<R: Rng + ?Sized>(n: usize, ell: usize, shape: Diameter3Shape, rng: &mut R) -> Result<CompleteMatrix> {
    if ell < 3 {
        return Err(DmcError::InvalidParameter(format!("width {ell} below 3")));
    }
    let center: Vec<bool> = (0..ell).map(|_| rng.random_bool(0.5)).collect();
    let special = sample(rng, ell, 3).into_vec();
    let rows: Vec<Vec<bool>> = (0..n)
        .map(|_| {
            let mut r = center.clone();
            let outside = |rng: &mut R, r: &mut Vec<bool>, skip: &[usize]| {
                let free: Vec<usize> = (0..ell).filter(|j| !skip.contains(j)).collect();
                if !free.is_empty() && rng.random_bool(0.8) {
                    let j = free[rng.random_range(0..free.len())];
                    r[j] = !r[j];
                }
            };
            match shape {
                Diameter3Shape::FreeColumn => {
                    r[special[0]] = rng.random_bool(0.5);
                    outside(rng, &mut r, &special[..1]);
                }
                Diameter3Shape::ThreeColumnCore => match rng.random_range(0..3) {
                    0 => outside(rng, &mut r, &special),
                    k => {
                        for &j in sample(rng, 3, k).iter().map(|q| &special[q]) {
                            r[j] = !r[j];
                        }
                    }
                },
            }
            r
        })
        .collect();
    CompleteMatrix::from_bits(&rows)
}
