//! Seeded inputs shared by the criterion benches.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dmc_core::gadgets::{erase, plant_ball, plant_sunflower_matrix, random_complete};
use dmc_core::{diameter_stats, DmcInstance, PairOffsets, RowVector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_row(len: usize, seed: u64) -> RowVector {
    let mut r = rng(seed);
    let bits: Vec<bool> = (0..len).map(|_| r.random_bool(0.5)).collect();
    RowVector::from_bits(&bits)
}

/// Rows around a center at distance ≤ radius, erased at `missing`, with α = 0, β = 2·radius.
pub fn ball_instance(n: usize, ell: usize, radius: usize, missing: f64, seed: u64) -> DmcInstance {
    let mut r = rng(seed);
    let t = plant_ball(n, ell, radius, &mut r).expect("valid ball");
    let s = erase(&t, missing, &mut r).expect("valid rate");
    DmcInstance::new(s, 0, 2 * radius).expect("bounds ordered")
}

/// Sunflower with core = petal = α/2 padded to width ℓ; α = β.
pub fn sunflower_instance(n: usize, alpha: usize, ell: usize, missing: f64, seed: u64) -> DmcInstance {
    let half = alpha / 2;
    let t = plant_sunflower_matrix(n, half, half, ell.max(half * n)).expect("valid sunflower");
    let s = erase(&t, missing, &mut rng(seed)).expect("valid rate");
    DmcInstance::new(s, alpha, alpha).expect("bounds ordered")
}

/// Random matrix with at most `per_row` missing cells per row; bounds from the matrix itself.
pub fn bounded_instance(n: usize, ell: usize, per_row: usize, equal: bool, seed: u64) -> DmcInstance {
    let mut r = rng(seed);
    let t = if equal {
        plant_sunflower_matrix(n, 1, 1, ell.max(n)).expect("valid sunflower")
    } else {
        random_complete(n, ell, &mut r).expect("valid size")
    };
    let st = diameter_stats(&t, &PairOffsets::zeros(n));
    let mut s = t.as_incomplete().clone();
    for i in 0..n {
        for q in 0..per_row {
            let j = (i * 7 + q * 3) % t.num_cols();
            s.set(i, j, dmc_core::Cell::Missing);
        }
    }
    let g = st.gamma.unwrap_or(0);
    let beta = if equal { g } else { st.delta };
    DmcInstance::new(s, g, beta).expect("bounds ordered")
}
