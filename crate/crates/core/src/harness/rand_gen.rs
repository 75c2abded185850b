//! Deterministic random instance generators for the property checks.
//!
//! Every trial derives its own seed by a fixed splitting rule, so serial and
//! parallel runs (and re-runs of a single failing trial) see identical data.

use num_complex::Complex64;
use rand::RngExt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::antidual::certified::WeightSeq;
use crate::antidual::{oracles, Antifunctional};
use crate::clifford::{Monomial, Multivector, RealVector};

pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// The fixed seed-splitting rule: check index and trial index are hashed
/// into the base seed.
pub fn trial_seed(base: u64, check_index: u64, trial: u64) -> u64 {
    splitmix64(base ^ splitmix64((check_index << 32) | trial))
}

pub fn trial_rng(base: u64, check_index: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(trial_seed(base, check_index, trial))
}

/// Uniform draw from the closed complex unit disc.
pub fn rand_complex_disc(rng: &mut ChaCha8Rng) -> Complex64 {
    let r = rng.random_range(0.0..1.0f64).sqrt();
    let theta = rng.random_range(0.0..std::f64::consts::TAU);
    Complex64::from_polar(r, theta)
}

/// Uniform random monomial over indices `1..=max_dim`.
pub fn rand_monomial(rng: &mut ChaCha8Rng, max_dim: u32) -> Monomial {
    let mask: u64 = rng.random_range(0..(1u64 << max_dim));
    Monomial::from_set((1..=max_dim).filter(|i| mask >> (i - 1) & 1 == 1))
}

/// Random multivector: at most eight monomials over `1..=max_dim`,
/// coefficients in the unit disc.
pub fn rand_multivector(rng: &mut ChaCha8Rng, max_dim: u32) -> Multivector {
    let max_terms = 8usize.min(1 << max_dim);
    let terms = rng.random_range(1..=max_terms);
    let mut mv = Multivector::zero();
    for _ in 0..terms {
        mv.add_term(rand_monomial(rng, max_dim), rand_complex_disc(rng));
    }
    mv
}

/// Random vector with components in `[-1, 1]` on `1..=max_dim`.
pub fn rand_real_vector(rng: &mut ChaCha8Rng, max_dim: u32) -> RealVector {
    RealVector::from_comps((1..=max_dim).map(|i| (i, rng.random_range(-1.0..1.0))))
}

/// Random square-summable weights `q_i = u_i / i`, `u_i` in `[0, 0.9]`,
/// vanishing past `max_dim` so closed forms stay exactly enumerable.
pub fn rand_weights(rng: &mut ChaCha8Rng, max_dim: u32) -> WeightSeq {
    WeightSeq::Finite(
        (1..=max_dim)
            .map(|i| rng.random_range(0.0..0.9) / i as f64)
            .collect(),
    )
}

/// A random bounded functional with certificates, labelled for
/// counterexample replay.
pub fn rand_certified(rng: &mut ChaCha8Rng, max_dim: u32) -> (Antifunctional, String) {
    if rng.random_bool(0.5) {
        let w = rand_weights(rng, max_dim);
        let label = format!("product-weights {w:?}");
        (Antifunctional::product_weights(w), label)
    } else {
        let mv = rand_multivector(rng, max_dim);
        let label = format!("certified theta({mv})");
        (
            Antifunctional::theta(mv).as_certified().expect("finite certifies"),
            label,
        )
    }
}

/// A random functional of any representation kind.
pub fn rand_functional(rng: &mut ChaCha8Rng, max_dim: u32) -> (Antifunctional, String) {
    match rng.random_range(0..3u8) {
        0 => {
            let mv = rand_multivector(rng, max_dim);
            let label = format!("theta({mv})");
            (Antifunctional::theta(mv), label)
        }
        1 => rand_certified(rng, max_dim),
        _ => {
            let seed: u64 = rng.random_range(0..u64::MAX);
            (oracles::pseudorandom_oracle(seed), format!("pseudorandom-oracle {seed}"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trials_are_reproducible() {
        let mut a = trial_rng(42, 3, 17);
        let mut b = trial_rng(42, 3, 17);
        assert_eq!(rand_multivector(&mut a, 5), rand_multivector(&mut b, 5));
        let mut c = trial_rng(42, 3, 18);
        assert_ne!(rand_multivector(&mut a, 5), rand_multivector(&mut c, 5));
    }

    #[test]
    fn monomials_stay_in_range() {
        let mut rng = trial_rng(1, 0, 0);
        for _ in 0..50 {
            let m = rand_monomial(&mut rng, 4);
            assert!(m.max_index().unwrap_or(0) <= 4);
        }
    }
}
