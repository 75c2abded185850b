//! Builtin oracle families.

use num_complex::Complex64;

use super::certified::WeightSeq;
use super::Antifunctional;
use crate::clifford::Monomial;

/// The unbounded witness family `phi(e_S) = r^{|S|}`: for `|r| > 1` the net
/// of approximant norms grows geometrically.
pub fn power_oracle(r: f64) -> Antifunctional {
    Antifunctional::from_oracle(move |m: &Monomial| Complex64::new(r.powi(m.degree() as i32), 0.0))
}

/// A product-weights family wrapped as a plain oracle, deliberately carrying
/// no certificate.
pub fn product_weights_oracle(weights: WeightSeq) -> Antifunctional {
    Antifunctional::from_oracle(move |m: &Monomial| {
        let mut w = 1.0f64;
        for &i in m.indices() {
            w *= weights.weight(i);
        }
        Complex64::new(w, 0.0)
    })
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// A deterministic pseudorandom oracle: a pure function of the seed and the
/// monomial, with coefficients in the complex unit disc. Useful as a generic
/// element of the antidual with no special structure.
pub fn pseudorandom_oracle(seed: u64) -> Antifunctional {
    Antifunctional::from_oracle(move |m: &Monomial| {
        let mut h = splitmix64(seed ^ 0xa076_1d64_78bd_642f);
        for &i in m.indices() {
            h = splitmix64(h ^ u64::from(i).wrapping_mul(0xe703_7ed1_a0b4_28db));
        }
        let re = (splitmix64(h) >> 11) as f64 / (1u64 << 53) as f64;
        let im = (splitmix64(h ^ 1) >> 11) as f64 / (1u64 << 53) as f64;
        // map [0,1)^2 into the unit disc by shrinking the square
        Complex64::new(2.0 * re - 1.0, 2.0 * im - 1.0) / std::f64::consts::SQRT_2
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_oracle_counts_degree() {
        let phi = power_oracle(2.0);
        let m = Monomial::new(vec![1, 3, 5]).unwrap();
        assert_eq!(phi.coeff(&m).unwrap(), Complex64::new(8.0, 0.0));
        assert_eq!(phi.coeff(&Monomial::unit()).unwrap(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn pseudorandom_is_pure_and_in_the_disc() {
        let phi = pseudorandom_oracle(42);
        let psi = pseudorandom_oracle(42);
        let other = pseudorandom_oracle(43);
        let m = Monomial::new(vec![2, 7]).unwrap();
        assert_eq!(phi.coeff(&m).unwrap(), psi.coeff(&m).unwrap());
        assert_ne!(phi.coeff(&m).unwrap(), other.coeff(&m).unwrap());
        assert!(phi.coeff(&m).unwrap().norm() <= 1.0);
    }
}
