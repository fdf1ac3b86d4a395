//! Seed derivation and the small sampling helpers used across stages.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type HouseRng = ChaCha8Rng;

/// SplitMix64 finalizer.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of house `index` within a dataset rooted at `root`.
pub fn house_seed(root: u64, index: u64) -> u64 {
    mix64(mix64(root) ^ index.wrapping_mul(0xD6E8_FEB8_6659_FD93))
}

/// Independent stream for one stage of one generation attempt.
pub fn stage_rng(seed: u64, attempt: u32, stage: u32) -> HouseRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((attempt as u64) << 16) | stage as u64);
    rng
}

/// Index drawn with probability proportional to `weights`. `None` when the
/// total weight is not positive.
pub fn choose_weighted<R: Rng + ?Sized>(rng: &mut R, weights: &[f64]) -> Option<usize> {
    let total: f64 = weights.iter().filter(|w| **w > 0.0).sum();
    if !(total > 0.0) {
        return None;
    }
    let mut u = rng.random::<f64>() * total;
    let mut last = None;
    for (i, w) in weights.iter().enumerate() {
        if *w <= 0.0 {
            continue;
        }
        if u < *w {
            return Some(i);
        }
        u -= w;
        last = Some(i);
    }
    last
}

/// Draw from a finite probability mass function over `values`.
pub fn sample_pmf<R: Rng + ?Sized, T: Copy>(rng: &mut R, pmf: &[(T, f64)]) -> T {
    let weights: Vec<f64> = pmf.iter().map(|(_, p)| *p).collect();
    let idx = choose_weighted(rng, &weights).expect("pmf has positive mass");
    pmf[idx].0
}

pub fn choose<'a, R: Rng + ?Sized, T>(rng: &mut R, items: &'a [T]) -> Option<&'a T> {
    if items.is_empty() {
        None
    } else {
        Some(&items[rng.random_range(0..items.len())])
    }
}
