//! Bounded antifunctionals with computable certificates.
//!
//! A certified functional is a finite complex combination of leaves, each of
//! which exposes its coefficient oracle together with enough structure to
//! bound norms and coordinate tails:
//!
//! * `Finite` — an explicit coefficient map (optionally with a declared
//!   squared-norm upper bound, which loosens but never unsounds the tails);
//! * `ProductWeights` — `coeff(S) = prod_{i in S} w_i` for a real weight
//!   sequence with square-summable certificate, optionally twisted by the
//!   reversal sign (the image of such a family under the involution);
//! * `Generic` — an arbitrary oracle carrying externally supplied norm and
//!   tail bounds (produced e.g. by module actions on power-law families).
//!
//! Pairwise inner products between leaves have closed or finitely computable
//! forms; combinations reduce to a Gram expansion. Power-law tails are
//! evaluated with an Euler-Maclaurin remainder so that infinite families
//! like `w_i = 1/i` get certificates far below the tolerances in play.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::clifford::{inner, monomials_over, Monomial, Multivector};

pub type CoeffOracle = Arc<dyn Fn(&Monomial) -> Complex64 + Send + Sync>;
pub type TailBound = Arc<dyn Fn(&BTreeSet<u32>) -> f64 + Send + Sync>;

/// Largest coordinate dimension we are willing to enumerate (2^k subsets).
pub const ENUM_DIM_CAP: usize = 20;

/// Truncation dimension for inner products that have no closed form.
const FALLBACK_TRUNC_DIM: u32 = 14;

fn slack(scale: f64) -> f64 {
    1e-12 * (1.0 + scale.abs())
}

/// A square-summable real weight sequence `(w_i)_{i >= 1}`.
#[derive(Clone, Debug, PartialEq)]
pub enum WeightSeq {
    /// `w_i` for `i <= len`, zero beyond.
    Finite(Vec<f64>),
    /// `w_i = scale / i^exponent` with `exponent > 0.5`.
    PowerLaw { scale: f64, exponent: f64 },
}

impl WeightSeq {
    pub fn weight(&self, i: u32) -> f64 {
        match self {
            WeightSeq::Finite(w) => w.get(i as usize - 1).copied().unwrap_or(0.0),
            WeightSeq::PowerLaw { scale, exponent } => scale / (i as f64).powf(*exponent),
        }
    }

    /// Index past which every weight vanishes, when the support is finite.
    pub fn finite_support(&self) -> Option<u32> {
        match self {
            WeightSeq::Finite(w) => Some(w.len() as u32),
            WeightSeq::PowerLaw { scale, .. } if *scale == 0.0 => Some(0),
            WeightSeq::PowerLaw { .. } => None,
        }
    }
}

/// `sum_{i > k} i^{-s}` for `s > 1`, by Euler-Maclaurin. The remainder is
/// burried far below the slack normally attached to these values.
pub fn zeta_tail(s: f64, k: u64) -> f64 {
    debug_assert!(s > 1.0);
    let t = (k + 1) as f64;
    t.powf(1.0 - s) / (s - 1.0) + t.powf(-s) / 2.0 + s * t.powf(-s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * t.powf(-s - 3.0) / 720.0
}

/// `prod_{i >= 1} (1 + x_i)` with `x_i = c / i^m`, `m > 1`: a finite head
/// computed directly plus an Euler-Maclaurin bound for the logarithm of the
/// tail. Returns `(value, absolute error bound)`.
fn power_law_product(c: f64, m: f64) -> (f64, f64) {
    if c == 0.0 {
        return (1.0, 0.0);
    }
    debug_assert!(m > 1.0);
    // head long enough that |x_i| <= 1/2 on the tail
    let k = 1000u64.max(((2.0 * c.abs()).powf(1.0 / m)).ceil() as u64 + 1);
    let mut head = 1.0f64;
    for i in 1..=k {
        head *= 1.0 + c / (i as f64).powf(m);
    }
    let mut log_tail = 0.0f64;
    let mut cj = 1.0f64;
    const J: u32 = 8;
    for j in 1..=J {
        cj *= c;
        let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
        log_tail += sign * cj / j as f64 * zeta_tail(j as f64 * m, k);
    }
    // remainder of the log series: |x| <= 1/2 past the head
    let rem = c.abs().powi(J as i32 + 1) / (J + 1) as f64 * zeta_tail((J + 1) as f64 * m, k) * 2.0;
    let value = head * log_tail.exp();
    let err = value.abs() * (rem + 1e-13 * k as f64) + slack(value);
    (value, err)
}

/// `prod_i (1 + w1_i * w2_i)` over all indices. Exact (up to rounding) when
/// either sequence has finite support.
fn weight_product_sum(w1: &WeightSeq, w2: &WeightSeq) -> (f64, f64) {
    let bound = match (w1.finite_support(), w2.finite_support()) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (Some(a), None) => Some(a),
        (None, Some(b)) => Some(b),
        (None, None) => None,
    };
    match bound {
        Some(n) => {
            let mut p = 1.0f64;
            for i in 1..=n {
                p *= 1.0 + w1.weight(i) * w2.weight(i);
            }
            (p, slack(p))
        }
        None => {
            let (WeightSeq::PowerLaw { scale: c1, exponent: p1 }, WeightSeq::PowerLaw { scale: c2, exponent: p2 }) =
                (w1, w2)
            else {
                unreachable!("finite_support covered the other variants")
            };
            power_law_product(c1 * c2, p1 + p2)
        }
    }
}

/// `prod_{i in f} (1 + w1_i * w2_i)` over a finite coordinate set.
fn weight_product_sum_over(w1: &WeightSeq, w2: &WeightSeq, f: &BTreeSet<u32>) -> (f64, f64) {
    let mut p = 1.0f64;
    for &i in f {
        p *= 1.0 + w1.weight(i) * w2.weight(i);
    }
    (p, slack(p))
}

/// One structured summand of a certified functional.
#[derive(Clone)]
pub enum Leaf {
    Finite {
        mv: Multivector,
        /// Declared upper bound for the squared norm; tails are derived from
        /// it when present, so a loose declaration merely loosens bounds.
        declared_norm_sq: Option<f64>,
    },
    ProductWeights {
        weights: WeightSeq,
        /// When set, coefficients carry the reversal sign of the monomial:
        /// the image of the plain family under the involution.
        reversed: bool,
    },
    Generic {
        oracle: CoeffOracle,
        norm_sq_upper: f64,
        tail_sq: TailBound,
    },
}

impl fmt::Debug for Leaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf::Finite { mv, declared_norm_sq } => f
                .debug_struct("Finite")
                .field("mv", mv)
                .field("declared_norm_sq", declared_norm_sq)
                .finish(),
            Leaf::ProductWeights { weights, reversed } => f
                .debug_struct("ProductWeights")
                .field("weights", weights)
                .field("reversed", reversed)
                .finish(),
            Leaf::Generic { norm_sq_upper, .. } => f
                .debug_struct("Generic")
                .field("norm_sq_upper", norm_sq_upper)
                .finish_non_exhaustive(),
        }
    }
}

impl Leaf {
    pub fn coeff(&self, m: &Monomial) -> Complex64 {
        match self {
            Leaf::Finite { mv, .. } => mv.coeff(m),
            Leaf::ProductWeights { weights, reversed } => {
                let mut w = 1.0f64;
                for &i in m.indices() {
                    w *= weights.weight(i);
                    if w == 0.0 {
                        return Complex64::ZERO;
                    }
                }
                if *reversed {
                    w *= m.reversal_sign() as f64;
                }
                Complex64::new(w, 0.0)
            }
            Leaf::Generic { oracle, .. } => oracle(m),
        }
    }

    /// Upper bound for the squared norm of the leaf alone.
    fn norm_sq_upper(&self) -> f64 {
        match self {
            Leaf::Finite { mv, declared_norm_sq } => declared_norm_sq.unwrap_or_else(|| mv.norm_sq()),
            Leaf::ProductWeights { weights, .. } => {
                let (v, e) = weight_product_sum(weights, weights);
                v + e
            }
            Leaf::Generic { norm_sq_upper, .. } => *norm_sq_upper,
        }
    }

    /// `||leaf_F||^2` over a coordinate set, with an error bound.
    fn partial_norm_sq(&self, f: &BTreeSet<u32>) -> (f64, f64) {
        match self {
            Leaf::Finite { mv, .. } => {
                let keep: Vec<u32> = f.iter().copied().collect();
                let v = mv
                    .terms()
                    .filter(|(m, _)| m.supported_on(&keep))
                    .map(|(_, c)| c.norm_sqr())
                    .sum();
                (v, slack(v))
            }
            Leaf::ProductWeights { weights, .. } => weight_product_sum_over(weights, weights, f),
            Leaf::Generic { oracle, .. } => {
                if f.len() <= ENUM_DIM_CAP {
                    let v = monomials_over(f).iter().map(|m| oracle(m).norm_sqr()).sum();
                    (v, slack(v))
                } else {
                    (0.0, f64::INFINITY)
                }
            }
        }
    }

    /// Upper bound on `||leaf||^2 - ||leaf_F||^2`.
    fn tail_sq(&self, f: &BTreeSet<u32>) -> f64 {
        match self {
            Leaf::Generic { tail_sq, .. } => tail_sq(f),
            _ => {
                let upper = self.norm_sq_upper();
                let (partial, err) = self.partial_norm_sq(f);
                (upper - partial + err).max(0.0) + slack(upper)
            }
        }
    }

    /// `sum_S conj(coeff_a(S)) coeff_b(S)` over all monomials, with error.
    fn full_inner(a: &Leaf, b: &Leaf) -> (Complex64, f64) {
        match (a, b) {
            (Leaf::Finite { mv: x, .. }, Leaf::Finite { mv: y, .. }) => {
                let v = inner(x, y);
                (v, slack(v.norm()))
            }
            (Leaf::Finite { mv, .. }, _) => {
                let mut acc = Complex64::ZERO;
                for (m, &c) in mv.terms() {
                    acc += c.conj() * b.coeff(m);
                }
                (acc, slack(acc.norm()))
            }
            (_, Leaf::Finite { mv, .. }) => {
                let mut acc = Complex64::ZERO;
                for (m, &c) in mv.terms() {
                    acc += a.coeff(m).conj() * c;
                }
                (acc, slack(acc.norm()))
            }
            (
                Leaf::ProductWeights { weights: w1, reversed: r1 },
                Leaf::ProductWeights { weights: w2, reversed: r2 },
            ) if r1 == r2 => {
                // reversal signs square away; coefficients are real
                let (v, e) = weight_product_sum(w1, w2);
                (Complex64::new(v, 0.0), e)
            }
            _ => Self::truncated_inner(a, b),
        }
    }

    /// Fallback: truncate to a coordinate prefix and bound the rest by
    /// Cauchy-Schwarz on the two tails.
    fn truncated_inner(a: &Leaf, b: &Leaf) -> (Complex64, f64) {
        let f: BTreeSet<u32> = (1..=FALLBACK_TRUNC_DIM).collect();
        let (v, e) = Self::partial_inner(a, b, &f);
        let tail = (a.tail_sq(&f) * b.tail_sq(&f)).sqrt();
        (v, e + tail)
    }

    /// `sum_{S subset F} conj(coeff_a(S)) coeff_b(S)`.
    fn partial_inner(a: &Leaf, b: &Leaf, f: &BTreeSet<u32>) -> (Complex64, f64) {
        match (a, b) {
            (Leaf::Finite { mv: x, .. }, _) => {
                let keep: Vec<u32> = f.iter().copied().collect();
                let mut acc = Complex64::ZERO;
                for (m, &c) in x.terms() {
                    if m.supported_on(&keep) {
                        acc += c.conj() * b.coeff(m);
                    }
                }
                (acc, slack(acc.norm()))
            }
            (_, Leaf::Finite { .. }) => {
                let (v, e) = Self::partial_inner(b, a, f);
                (v.conj(), e)
            }
            (
                Leaf::ProductWeights { weights: w1, reversed: r1 },
                Leaf::ProductWeights { weights: w2, reversed: r2 },
            ) if r1 == r2 => {
                let (v, e) = weight_product_sum_over(w1, w2, f);
                (Complex64::new(v, 0.0), e)
            }
            _ => {
                if f.len() <= ENUM_DIM_CAP {
                    let mut acc = Complex64::ZERO;
                    for m in monomials_over(f) {
                        acc += a.coeff(&m).conj() * b.coeff(&m);
                    }
                    (acc, slack(acc.norm()))
                } else {
                    (Complex64::ZERO, f64::INFINITY)
                }
            }
        }
    }

    fn adjoint(&self) -> Leaf {
        match self {
            Leaf::Finite { mv, declared_norm_sq } => Leaf::Finite {
                mv: mv.star(),
                declared_norm_sq: *declared_norm_sq,
            },
            Leaf::ProductWeights { weights, reversed } => Leaf::ProductWeights {
                weights: weights.clone(),
                reversed: !reversed,
            },
            Leaf::Generic { oracle, norm_sq_upper, tail_sq } => {
                let inner_oracle = oracle.clone();
                Leaf::Generic {
                    oracle: Arc::new(move |m: &Monomial| {
                        inner_oracle(m).conj() * m.reversal_sign() as f64
                    }),
                    norm_sq_upper: *norm_sq_upper,
                    tail_sq: tail_sq.clone(),
                }
            }
        }
    }

    fn grading(&self) -> Leaf {
        match self {
            Leaf::Finite { mv, declared_norm_sq } => Leaf::Finite {
                mv: mv.gamma(),
                declared_norm_sq: *declared_norm_sq,
            },
            Leaf::ProductWeights { weights, reversed } => {
                let negated = match weights {
                    WeightSeq::Finite(w) => WeightSeq::Finite(w.iter().map(|x| -x).collect()),
                    WeightSeq::PowerLaw { scale, exponent } => WeightSeq::PowerLaw {
                        scale: -scale,
                        exponent: *exponent,
                    },
                };
                Leaf::ProductWeights { weights: negated, reversed: *reversed }
            }
            Leaf::Generic { oracle, norm_sq_upper, tail_sq } => {
                let inner_oracle = oracle.clone();
                Leaf::Generic {
                    oracle: Arc::new(move |m: &Monomial| inner_oracle(m) * m.grading_sign() as f64),
                    norm_sq_upper: *norm_sq_upper,
                    tail_sq: tail_sq.clone(),
                }
            }
        }
    }

    /// Expands to an explicit coefficient map when the support is finite and
    /// small enough to enumerate.
    fn expand(&self) -> Option<Multivector> {
        match self {
            Leaf::Finite { mv, .. } => Some(mv.clone()),
            Leaf::ProductWeights { weights, .. } => {
                let n = weights.finite_support()?;
                if n as usize > ENUM_DIM_CAP {
                    return None;
                }
                let f: BTreeSet<u32> = (1..=n).collect();
                Some(Multivector::from_terms(
                    monomials_over(&f).into_iter().map(|m| {
                        let c = self.coeff(&m);
                        (m, c)
                    }),
                ))
            }
            Leaf::Generic { .. } => None,
        }
    }
}

/// A bounded antifunctional with certificates: a finite complex combination
/// of structured leaves.
#[derive(Clone, Debug)]
pub struct CertifiedFunctional {
    terms: Vec<(Complex64, Leaf)>,
}

impl CertifiedFunctional {
    pub fn from_leaf(leaf: Leaf) -> Self {
        CertifiedFunctional { terms: vec![(Complex64::new(1.0, 0.0), leaf)] }
    }

    /// Wraps an explicit coefficient map (the re-certification of a finitely
    /// supported functional).
    pub fn from_multivector(mv: Multivector) -> Self {
        Self::from_leaf(Leaf::Finite { mv, declared_norm_sq: None })
    }

    pub fn from_multivector_with_bound(mv: Multivector, declared_norm_sq: f64) -> Self {
        Self::from_leaf(Leaf::Finite { mv, declared_norm_sq: Some(declared_norm_sq) })
    }

    pub fn product_weights(weights: WeightSeq) -> Self {
        if let WeightSeq::PowerLaw { exponent, scale } = &weights {
            assert!(
                *scale == 0.0 || *exponent > 0.5,
                "power-law weights need exponent > 0.5 to be square-summable"
            );
        }
        Self::from_leaf(Leaf::ProductWeights { weights, reversed: false })
    }

    pub fn terms(&self) -> &[(Complex64, Leaf)] {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Complex64 {
        self.terms.iter().map(|(a, l)| a * l.coeff(m)).sum()
    }

    pub fn scale(&self, z: Complex64) -> Self {
        if z == Complex64::ZERO {
            return Self::from_multivector(Multivector::zero());
        }
        CertifiedFunctional {
            terms: self.terms.iter().map(|(a, l)| (a * z, l.clone())).collect(),
        }
    }

    pub fn add(&self, other: &CertifiedFunctional) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        CertifiedFunctional { terms }
    }

    pub fn adjoint(&self) -> Self {
        CertifiedFunctional {
            terms: self.terms.iter().map(|(a, l)| (a.conj(), l.adjoint())).collect(),
        }
    }

    pub fn grading(&self) -> Self {
        CertifiedFunctional {
            terms: self.terms.iter().map(|(a, l)| (*a, l.grading())).collect(),
        }
    }

    /// `<self|other> = sum_S conj(self_S) other_S` with an error bound, by
    /// Gram expansion over the leaves.
    pub fn full_inner(&self, other: &CertifiedFunctional) -> (Complex64, f64) {
        let mut acc = Complex64::ZERO;
        let mut err = 0.0f64;
        for (a, la) in &self.terms {
            for (b, lb) in &other.terms {
                let (v, e) = Leaf::full_inner(la, lb);
                acc += a.conj() * b * v;
                err += (a.conj() * b).norm() * e;
            }
        }
        (acc, err)
    }

    /// `<(self)_F|(other)_F>` over a coordinate set.
    pub fn partial_inner(&self, other: &CertifiedFunctional, f: &BTreeSet<u32>) -> (Complex64, f64) {
        let mut acc = Complex64::ZERO;
        let mut err = 0.0f64;
        for (a, la) in &self.terms {
            for (b, lb) in &other.terms {
                let (v, e) = Leaf::partial_inner(la, lb, f);
                acc += a.conj() * b * v;
                err += (a.conj() * b).norm() * e;
            }
        }
        (acc, err)
    }

    /// `||self||^2` with an error bound.
    pub fn norm_sq(&self) -> (f64, f64) {
        let (v, e) = self.full_inner(self);
        (v.re.max(0.0), e + v.im.abs())
    }

    /// Sound upper bound for `||self||^2`.
    pub fn norm_sq_upper(&self) -> f64 {
        let (v, e) = self.norm_sq();
        v + e
    }

    /// `||self_F||^2` with an error bound.
    pub fn partial_norm_sq(&self, f: &BTreeSet<u32>) -> (f64, f64) {
        let (v, e) = self.partial_inner(self, f);
        (v.re.max(0.0), e + v.im.abs())
    }

    /// Upper bound for `||self||^2 - ||self_F||^2` (the mass outside the
    /// coordinate subspace).
    pub fn tail_sq(&self, f: &BTreeSet<u32>) -> f64 {
        let root: f64 = self
            .terms
            .iter()
            .map(|(a, l)| a.norm() * l.tail_sq(f).max(0.0).sqrt())
            .sum();
        root * root + slack(root)
    }

    /// The whole functional as one explicit coefficient map, when every leaf
    /// has small finite support.
    pub fn expand(&self) -> Option<Multivector> {
        let mut acc = Multivector::zero();
        for (a, l) in &self.terms {
            acc = &acc + &l.expand()?.scale(*a);
        }
        Some(acc)
    }

    /// True when all norm data is exact rather than upper-bounded.
    pub fn is_exact(&self) -> bool {
        self.terms.iter().all(|(_, l)| match l {
            Leaf::Finite { declared_norm_sq, .. } => declared_norm_sq.is_none(),
            Leaf::ProductWeights { weights, .. } => weights.finite_support().is_some(),
            Leaf::Generic { .. } => false,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_tail_matches_direct_summation() {
        for &(s, k) in &[(2.0f64, 100u64), (3.0, 50), (1.5, 400)] {
            let direct: f64 = ((k + 1)..=30_000_000u64).map(|i| (i as f64).powf(-s)).sum();
            // direct summation itself truncates; add its own tail crudely
            let trunc = (30_000_000f64).powf(1.0 - s) / (s - 1.0);
            let em = zeta_tail(s, k);
            assert!(
                (em - direct - trunc).abs() < 1e-9 * em,
                "s={s} k={k}: em={em} direct+trunc={}",
                direct + trunc
            );
        }
    }

    #[test]
    fn inverse_index_family_matches_closed_form() {
        // prod (1 + 1/i^2) = sinh(pi)/pi
        let w = WeightSeq::PowerLaw { scale: 1.0, exponent: 1.0 };
        let (v, e) = weight_product_sum(&w, &w);
        let expected = std::f64::consts::PI.sinh() / std::f64::consts::PI;
        assert!((v - expected).abs() <= e + 1e-12, "{v} vs {expected} (err {e})");
        assert!(e < 1e-9);
    }

    #[test]
    fn finite_weights_are_exact_products() {
        let w = WeightSeq::Finite(vec![0.5, 0.25]);
        let (v, _) = weight_product_sum(&w, &w);
        assert!((v - (1.0 + 0.25) * (1.0 + 0.0625)).abs() < 1e-15);
    }

    #[test]
    fn product_weights_coeffs_multiply() {
        let f = CertifiedFunctional::product_weights(WeightSeq::PowerLaw {
            scale: 1.0,
            exponent: 1.0,
        });
        let m = Monomial::new(vec![1, 2]).unwrap();
        assert!((f.coeff(&m).re - 0.5).abs() < 1e-15);
        assert_eq!(f.coeff(&Monomial::unit()), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn adjoint_toggles_reversal_and_is_involutive() {
        let f = CertifiedFunctional::product_weights(WeightSeq::Finite(vec![0.9, 0.8, 0.7]));
        let m = Monomial::new(vec![1, 2]).unwrap();
        let a = f.adjoint();
        assert_eq!(a.coeff(&m), f.coeff(&m) * m.reversal_sign() as f64);
        assert_eq!(a.adjoint().coeff(&m), f.coeff(&m));
    }

    #[test]
    fn tails_shrink_and_dominate_reality() {
        let f = CertifiedFunctional::product_weights(WeightSeq::Finite(vec![0.9, 0.45, 0.3]));
        let full: BTreeSet<u32> = (1..=3).collect();
        let partial: BTreeSet<u32> = (1..=1).collect();
        let tail_full = f.tail_sq(&full);
        let tail_partial = f.tail_sq(&partial);
        assert!(tail_full <= tail_partial);
        assert!(tail_full < 1e-9);
        // actual mass outside {1}
        let (n, _) = f.norm_sq();
        let (p, _) = f.partial_norm_sq(&partial);
        assert!(tail_partial >= n - p - 1e-12);
    }

    #[test]
    fn gram_norm_matches_enumeration_for_combinations() {
        let f = CertifiedFunctional::product_weights(WeightSeq::Finite(vec![0.4, 0.3]));
        let g = CertifiedFunctional::from_multivector(Multivector::from_terms([
            (Monomial::unit(), Complex64::new(0.5, 0.0)),
            (Monomial::new(vec![1, 2]).unwrap(), Complex64::new(0.0, 1.0)),
        ]));
        let combo = f.scale(Complex64::new(0.0, 2.0)).add(&g.scale(Complex64::new(-1.0, 0.0)));
        let (gram, err) = combo.norm_sq();
        let direct = combo.expand().unwrap().norm_sq();
        assert!((gram - direct).abs() <= err + 1e-12, "{gram} vs {direct}");
    }

    #[test]
    fn declared_bound_loosens_tails() {
        let mv = Multivector::from_terms([(Monomial::basis(1), Complex64::new(1.0, 0.0))]);
        let f = CertifiedFunctional::from_multivector_with_bound(mv, 9.0);
        let set: BTreeSet<u32> = (1..=1).collect();
        // declared mass 9, visible mass 1: tail certificate is 8-ish
        assert!(f.tail_sq(&set) >= 8.0 - 1e-9);
        assert!(!f.is_exact());
    }
}
