//! Antilinear functionals on the Clifford algebra.
//!
//! A functional is one of four kinds:
//!
//! * `Finite` — the canonical embedding of an algebra element, `theta(a)`;
//! * `Certified` — a bounded functional carrying norm and tail certificates
//!   (see [`certified`]);
//! * `Oracle` — an arbitrary total coefficient oracle, bounded or not;
//! * `Derived` — a pointwise-defined functional whose evaluation may fail
//!   (lazy partial products and their transforms).
//!
//! The involution, grading and bimodule actions act kind-preservingly; norms
//! are exact on the embedded image, certified on the bounded class, and
//! semi-decided (lower bound or divergence flag) on oracles.

pub mod certified;
pub mod oracles;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use thiserror::Error;

use crate::clifford::{inner, monomials_over, op_norm, Monomial, Multivector, Subspace};
use crate::product::ProductError;
use certified::{CertifiedFunctional, Leaf, WeightSeq, ENUM_DIM_CAP};

pub type CoeffOracle = certified::CoeffOracle;
pub type EvalFn = Arc<dyn Fn(&Multivector) -> Result<Complex64, ProductError> + Send + Sync>;

#[derive(Clone)]
pub(crate) enum Kind {
    Finite(Multivector),
    Certified(CertifiedFunctional),
    Oracle(CoeffOracle),
    Derived(EvalFn),
}

/// Which representation class a functional belongs to. Derived (lazy)
/// functionals report as `Oracle`: nothing more is known about them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KindTag {
    Finite,
    L2Certified,
    Oracle,
}

/// An antilinear functional on the algebra: `phi(sum c_S e_S) =
/// sum conj(c_S) phi(e_S)`.
#[derive(Clone)]
pub struct Antifunctional {
    pub(crate) kind: Kind,
}

impl fmt::Debug for Antifunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Finite(mv) => write!(f, "Antifunctional::Finite({mv})"),
            Kind::Certified(c) => write!(f, "Antifunctional::Certified({:?})", c.terms().len()),
            Kind::Oracle(_) => write!(f, "Antifunctional::Oracle(..)"),
            Kind::Derived(_) => write!(f, "Antifunctional::Derived(..)"),
        }
    }
}

#[derive(Debug, Error)]
pub enum NormError {
    #[error("budget must be at least 1")]
    ZeroBudget,
    #[error("coordinate dimension {0} too large to enumerate")]
    BudgetTooLarge(usize),
    #[error(transparent)]
    Undefined(#[from] ProductError),
}

#[derive(Debug, Error)]
pub enum ApproximantError {
    #[error("coordinate dimension {0} too large to enumerate")]
    TooLarge(usize),
    #[error(transparent)]
    Undefined(#[from] ProductError),
}

#[derive(Debug, Error)]
pub enum PythagorasError {
    #[error("both subspaces must be coordinate subspaces")]
    NotCoordinate,
    #[error("the first subspace must be contained in the second")]
    NotNested,
    #[error(transparent)]
    Approximant(#[from] ApproximantError),
}

/// Outcome of a norm computation.
#[derive(Debug, Clone, PartialEq)]
pub enum NormVerdict {
    /// Exact value (embedded algebra elements).
    Exact(f64),
    /// `|true - value| <= error`, certified.
    Certified { value: f64, error: f64 },
    /// The increasing net of approximant norms stopped at the budget.
    LowerBound { value: f64, dims: u32 },
    /// The net grew without stabilizing; the witness lists its values.
    Diverged { witness: Vec<f64> },
}

impl NormVerdict {
    /// The numeric value carried by the verdict, when there is one.
    pub fn value(&self) -> Option<f64> {
        match self {
            NormVerdict::Exact(v) => Some(*v),
            NormVerdict::Certified { value, .. } => Some(*value),
            NormVerdict::LowerBound { value, .. } => Some(*value),
            NormVerdict::Diverged { .. } => None,
        }
    }
}

/// Knobs for norm computation on oracle kinds.
#[derive(Debug, Clone, Copy)]
pub struct NormOptions {
    /// Largest coordinate dimension enumerated for oracle kinds.
    pub budget: u32,
    /// Target certificate width for certified kinds.
    pub eps: f64,
    /// Net values past this are flagged as divergence.
    pub cap: f64,
}

impl Default for NormOptions {
    fn default() -> Self {
        NormOptions { budget: 10, eps: 1e-6, cap: 1e12 }
    }
}

/// Sustained-growth window for divergence detection: values strictly
/// increasing over this many steps with at least this overall factor.
const GROWTH_WINDOW: usize = 4;
const GROWTH_FACTOR: f64 = 10.0;

/// Decides whether the last `GROWTH_WINDOW` magnitudes look like divergence.
pub(crate) fn sustained_growth(values: &[f64]) -> bool {
    if values.len() < GROWTH_WINDOW {
        return false;
    }
    let w = &values[values.len() - GROWTH_WINDOW..];
    w.windows(2).all(|p| p[1] > p[0]) && w[GROWTH_WINDOW - 1] >= GROWTH_FACTOR * w[0] && w[GROWTH_WINDOW - 1] > 1.0
}

impl Antifunctional {
    // ---- constructors -----------------------------------------------------

    /// The canonical embedding: `theta(a)(b) = <b|a>`.
    pub fn theta(a: Multivector) -> Self {
        Antifunctional { kind: Kind::Finite(a) }
    }

    /// The antitrace `c -> conj(tau(c))`, the multiplicative identity of the
    /// partial product.
    pub fn taubar() -> Self {
        Self::theta(Multivector::unit())
    }

    pub fn from_certified(c: CertifiedFunctional) -> Self {
        Antifunctional { kind: Kind::Certified(c) }
    }

    /// The product-weights family `phi(e_S) = prod_{i in S} w_i`, with
    /// certificates.
    pub fn product_weights(weights: WeightSeq) -> Self {
        Self::from_certified(CertifiedFunctional::product_weights(weights))
    }

    /// Wraps a total coefficient oracle, with no boundedness claim.
    pub fn from_oracle(f: impl Fn(&Monomial) -> Complex64 + Send + Sync + 'static) -> Self {
        Antifunctional { kind: Kind::Oracle(Arc::new(f)) }
    }

    pub(crate) fn derived(f: EvalFn) -> Self {
        Antifunctional { kind: Kind::Derived(f) }
    }

    /// Re-wraps a `Finite` functional as a certified one (its own
    /// coefficients become the certificate). Certified functionals pass
    /// through; other kinds have nothing to certify.
    pub fn as_certified(&self) -> Option<Antifunctional> {
        match &self.kind {
            Kind::Finite(mv) => Some(Self::from_certified(CertifiedFunctional::from_multivector(
                mv.clone(),
            ))),
            Kind::Certified(_) => Some(self.clone()),
            _ => None,
        }
    }

    pub fn kind(&self) -> KindTag {
        match &self.kind {
            Kind::Finite(_) => KindTag::Finite,
            Kind::Certified(_) => KindTag::L2Certified,
            Kind::Oracle(_) | Kind::Derived(_) => KindTag::Oracle,
        }
    }

    /// The algebra element behind a `Finite` functional.
    pub fn finite_part(&self) -> Option<&Multivector> {
        match &self.kind {
            Kind::Finite(mv) => Some(mv),
            _ => None,
        }
    }

    pub(crate) fn certified_part(&self) -> Option<&CertifiedFunctional> {
        match &self.kind {
            Kind::Certified(c) => Some(c),
            _ => None,
        }
    }

    // ---- evaluation -------------------------------------------------------

    /// The coefficient `phi(e_S)`. Fails only on lazy products evaluated
    /// outside their domain.
    pub fn coeff(&self, m: &Monomial) -> Result<Complex64, ProductError> {
        match &self.kind {
            Kind::Finite(mv) => Ok(mv.coeff(m)),
            Kind::Certified(c) => Ok(c.coeff(m)),
            Kind::Oracle(f) => Ok(f(m)),
            Kind::Derived(f) => f(&Multivector::blade(m.clone(), Complex64::new(1.0, 0.0))),
        }
    }

    /// Evaluates the functional: antilinear in `a`.
    pub fn eval(&self, a: &Multivector) -> Result<Complex64, ProductError> {
        match &self.kind {
            Kind::Finite(mv) => Ok(inner(a, mv)),
            Kind::Certified(c) => Ok(a.terms().map(|(m, &z)| z.conj() * c.coeff(m)).sum()),
            Kind::Oracle(f) => Ok(a.terms().map(|(m, &z)| z.conj() * f(m)).sum()),
            Kind::Derived(f) => f(a),
        }
    }

    /// The extended trace: evaluation at the multiplicative identity.
    pub fn ext_trace(&self) -> Result<Complex64, ProductError> {
        self.eval(&Multivector::unit())
    }

    // ---- involution, grading, bimodule ------------------------------------

    /// The adjoint `phi*(a) = conj(phi(a*))`.
    pub fn adjoint(&self) -> Antifunctional {
        match &self.kind {
            Kind::Finite(mv) => Self::theta(mv.star()),
            Kind::Certified(c) => Self::from_certified(c.adjoint()),
            Kind::Oracle(f) => {
                let f = f.clone();
                Self::from_oracle(move |m| f(m).conj() * m.reversal_sign() as f64)
            }
            Kind::Derived(f) => {
                let f = f.clone();
                Self::derived(Arc::new(move |a: &Multivector| Ok(f(&a.star())?.conj())))
            }
        }
    }

    /// The grading `gamma(phi)(a) = phi(gamma(a))`.
    pub fn grading(&self) -> Antifunctional {
        match &self.kind {
            Kind::Finite(mv) => Self::theta(mv.gamma()),
            Kind::Certified(c) => Self::from_certified(c.grading()),
            Kind::Oracle(f) => {
                let f = f.clone();
                Self::from_oracle(move |m| f(m) * m.grading_sign() as f64)
            }
            Kind::Derived(f) => {
                let f = f.clone();
                Self::derived(Arc::new(move |a: &Multivector| f(&a.gamma())))
            }
        }
    }

    /// Left action `(a . psi)(c) = psi(a* c)`.
    pub fn act_left(a: &Multivector, psi: &Antifunctional) -> Antifunctional {
        match &psi.kind {
            Kind::Finite(b) => Self::theta(a.mul(b)),
            Kind::Certified(c) => match c.expand() {
                Some(b) => Self::from_certified(CertifiedFunctional::from_multivector(a.mul(&b))),
                None => Self::from_certified(acted_certified(c, Some(a), None)),
            },
            Kind::Oracle(f) => {
                let f = f.clone();
                let astar = a.star();
                Self::from_oracle(move |m| {
                    let arg = astar.mul(&Multivector::blade(m.clone(), Complex64::new(1.0, 0.0)));
                    arg.terms().map(|(t, &z)| z.conj() * f(t)).sum()
                })
            }
            Kind::Derived(f) => {
                let f = f.clone();
                let astar = a.star();
                Self::derived(Arc::new(move |c: &Multivector| f(&astar.mul(c))))
            }
        }
    }

    /// Right action `(phi . b)(c) = phi(c b*)`.
    pub fn act_right(phi: &Antifunctional, b: &Multivector) -> Antifunctional {
        match &phi.kind {
            Kind::Finite(a) => Self::theta(a.mul(b)),
            Kind::Certified(c) => match c.expand() {
                Some(a) => Self::from_certified(CertifiedFunctional::from_multivector(a.mul(b))),
                None => Self::from_certified(acted_certified(c, None, Some(b))),
            },
            Kind::Oracle(f) => {
                let f = f.clone();
                let bstar = b.star();
                Self::from_oracle(move |m| {
                    let arg = Multivector::blade(m.clone(), Complex64::new(1.0, 0.0)).mul(&bstar);
                    arg.terms().map(|(t, &z)| z.conj() * f(t)).sum()
                })
            }
            Kind::Derived(f) => {
                let f = f.clone();
                let bstar = b.star();
                Self::derived(Arc::new(move |c: &Multivector| f(&c.mul(&bstar))))
            }
        }
    }

    /// The functional `phi - theta(b)`, kind-preservingly.
    pub fn sub_theta(&self, b: &Multivector) -> Antifunctional {
        match &self.kind {
            Kind::Finite(mv) => Self::theta(mv - b),
            Kind::Certified(c) => Self::from_certified(c.add(
                &CertifiedFunctional::from_multivector(b.scale(Complex64::new(-1.0, 0.0))),
            )),
            Kind::Oracle(f) => {
                let f = f.clone();
                let b = b.clone();
                Self::from_oracle(move |m| f(m) - b.coeff(m))
            }
            Kind::Derived(f) => {
                let f = f.clone();
                let b = b.clone();
                Self::derived(Arc::new(move |c: &Multivector| Ok(f(c)? - inner(c, &b))))
            }
        }
    }

    // ---- approximants and norms -------------------------------------------

    /// The unique element of `C(M)` representing the restriction of the
    /// functional: `<c|phi_M> = phi(c)` for every `c` in `C(M)`.
    pub fn approximant(&self, m: &Subspace) -> Result<Multivector, ApproximantError> {
        if m.dim() > ENUM_DIM_CAP {
            return Err(ApproximantError::TooLarge(m.dim()));
        }
        if let Some(set) = m.coordinate_indices() {
            let mut out = Multivector::zero();
            for mono in monomials_over(set) {
                let c = self.coeff(&mono)?;
                out.add_term(mono, c);
            }
            return Ok(out);
        }
        // general subspace: orthonormal generator monomials u_S
        let positions: BTreeSet<u32> = (1..=m.dim() as u32).collect();
        let mut out = Multivector::zero();
        for s in monomials_over(&positions) {
            let u_s = crate::clifford::subspace::unrebase(
                &Multivector::blade(s, Complex64::new(1.0, 0.0)),
                m.onb(),
            );
            let c = self.eval(&u_s)?;
            out = &out + &u_s.scale(c);
        }
        Ok(out)
    }

    /// Coordinate-prefix approximant `phi_{span(e_1..e_k)}`.
    pub fn approximant_prefix(&self, k: u32) -> Result<Multivector, ApproximantError> {
        self.approximant(&Subspace::prefix(k))
    }

    /// The operator norm `sup ||phi_M||` over finite-dimensional subspaces,
    /// computed along the cofinal chain of coordinate prefixes.
    pub fn norm(&self, opts: NormOptions) -> Result<NormVerdict, NormError> {
        if opts.budget == 0 {
            return Err(NormError::ZeroBudget);
        }
        match &self.kind {
            Kind::Finite(mv) => Ok(NormVerdict::Exact(mv.trace_norm())),
            Kind::Certified(c) => {
                let (v, e) = c.norm_sq();
                let hi = (v + e).sqrt();
                let lo = (v - e).max(0.0).sqrt();
                Ok(NormVerdict::Certified {
                    value: 0.5 * (hi + lo),
                    error: 0.5 * (hi - lo) + f64::EPSILON,
                })
            }
            Kind::Oracle(_) | Kind::Derived(_) => {
                if opts.budget as usize > ENUM_DIM_CAP {
                    return Err(NormError::BudgetTooLarge(opts.budget as usize));
                }
                let mut witness = Vec::with_capacity(opts.budget as usize);
                let mut mass = self.coeff(&Monomial::unit())?.norm_sqr();
                for k in 1..=opts.budget {
                    // new monomials at step k are those containing index k
                    let below: BTreeSet<u32> = (1..k).collect();
                    for mut s in monomials_over(&below) {
                        s = Monomial::from_set(s.indices().iter().copied().chain([k]));
                        mass += self.coeff(&s)?.norm_sqr();
                    }
                    let s_k = mass.sqrt();
                    witness.push(s_k);
                    if s_k > opts.cap || sustained_growth(&witness) {
                        return Ok(NormVerdict::Diverged { witness });
                    }
                }
                Ok(NormVerdict::LowerBound {
                    value: *witness.last().unwrap(),
                    dims: opts.budget,
                })
            }
        }
    }
}

/// Certified image of a one-sided module action on a functional that cannot
/// be expanded: a generic leaf whose certificates scale by the operator norm
/// of the acting element.
fn acted_certified(
    base: &CertifiedFunctional,
    left: Option<&Multivector>,
    right: Option<&Multivector>,
) -> CertifiedFunctional {
    let a = left.or(right).expect("one side acts");
    let opn = op_norm(a);
    let opn_sq = opn * opn;
    let a_indices: BTreeSet<u32> = a.index_support();
    let norm_up = opn_sq * base.norm_sq_upper();

    let oracle: CoeffOracle = {
        let base = base.clone();
        let left = left.cloned().map(|m| m.star());
        let right = right.cloned().map(|m| m.star());
        Arc::new(move |m: &Monomial| {
            let blade = Multivector::blade(m.clone(), Complex64::new(1.0, 0.0));
            let arg = match (&left, &right) {
                (Some(astar), None) => astar.mul(&blade),
                (None, Some(bstar)) => blade.mul(bstar),
                _ => unreachable!(),
            };
            arg.terms().map(|(t, &z)| z.conj() * base.coeff(t)).sum()
        })
    };
    let tail: certified::TailBound = {
        let base = base.clone();
        let norm_up = base.norm_sq_upper();
        Arc::new(move |f: &BTreeSet<u32>| {
            if a_indices.iter().all(|i| f.contains(i)) {
                opn_sq * base.tail_sq(f)
            } else {
                opn_sq * norm_up
            }
        })
    };
    CertifiedFunctional::from_leaf(Leaf::Generic {
        oracle,
        norm_sq_upper: norm_up,
        tail_sq: tail,
    })
}

/// Both sides of the Pythagorean identity for nested coordinate subspaces,
/// plus the deviation of the difference-approximant identity
/// `(phi - theta(phi_M))_N = phi_N - phi_M`.
#[derive(Debug, Clone)]
pub struct PythagorasCheck {
    /// `||phi_N||^2`
    pub lhs: f64,
    /// `||phi_N - phi_M||^2 + ||phi_M||^2`
    pub rhs: f64,
    /// `max coefficient deviation of (phi - theta(phi_M))_N from phi_N - phi_M`
    pub identity_dev: f64,
}

pub fn pythagoras_check(
    phi: &Antifunctional,
    m: &Subspace,
    n: &Subspace,
) -> Result<PythagorasCheck, PythagorasError> {
    let (Some(ms), Some(ns)) = (m.coordinate_indices(), n.coordinate_indices()) else {
        return Err(PythagorasError::NotCoordinate);
    };
    if !ms.is_subset(ns) {
        return Err(PythagorasError::NotNested);
    }
    let phi_m = phi.approximant(m)?;
    let phi_n = phi.approximant(n)?;
    let diff = &phi_n - &phi_m;
    let lhs = phi_n.norm_sq();
    let rhs = diff.norm_sq() + phi_m.norm_sq();
    let shifted = phi.sub_theta(&phi_m).approximant(n)?;
    let identity_dev = shifted.distance(&diff);
    Ok(PythagorasCheck { lhs, rhs, identity_dev })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn e(ix: &[u32]) -> Multivector {
        Multivector::blade(Monomial::new(ix.to_vec()).unwrap(), c(1.0, 0.0))
    }

    fn ev(phi: &Antifunctional, a: &Multivector) -> Complex64 {
        phi.eval(a).expect("total kind")
    }

    #[test]
    fn theta_pairs_with_the_inner_product() {
        let b = &e(&[1]) + &e(&[2, 3]).scale(c(0.0, 1.0));
        let a = &e(&[1]).scale(c(2.0, 1.0)) + &e(&[2, 3]);
        assert_eq!(ev(&Antifunctional::theta(b.clone()), &a), inner(&a, &b));
        assert_eq!(ev(&Antifunctional::theta(e(&[1])), &e(&[1])), c(1.0, 0.0));
    }

    #[test]
    fn eval_is_antilinear() {
        let phi = Antifunctional::product_weights(WeightSeq::Finite(vec![0.5, 0.25]));
        let a = &e(&[1]) + &e(&[2]);
        let lhs = ev(&phi, &a.scale(c(0.0, 1.0)));
        assert!((lhs - ev(&phi, &a) * c(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn taubar_conjugates_the_trace() {
        let a = &Multivector::scalar(c(3.0, 1.0)) + &e(&[1]).scale(c(0.0, 1.0));
        assert_eq!(ev(&Antifunctional::taubar(), &a), c(3.0, -1.0));
    }

    #[test]
    fn adjoint_matches_definition_on_all_kinds() {
        let a = &e(&[1, 2]).scale(c(0.5, 1.5)) + &e(&[3]);
        let functionals = [
            Antifunctional::theta(&e(&[1, 2]).scale(c(0.0, 1.0)) + &Multivector::unit()),
            Antifunctional::product_weights(WeightSeq::Finite(vec![0.9, 0.4, 0.2])),
            oracles::pseudorandom_oracle(7),
        ];
        for phi in &functionals {
            let lhs = ev(&phi.adjoint(), &a);
            let rhs = ev(phi, &a.star()).conj();
            assert!((lhs - rhs).norm() < 1e-12);
            // involutive
            let back = ev(&phi.adjoint().adjoint(), &a);
            assert!((back - ev(phi, &a)).norm() < 1e-12);
        }
    }

    #[test]
    fn adjoint_of_theta_is_theta_of_star() {
        let a = e(&[1, 2]).scale(c(0.0, 1.0));
        let lhs = Antifunctional::theta(a.clone()).adjoint();
        assert_eq!(lhs.finite_part().unwrap(), &a.star());
    }

    #[test]
    fn grading_matches_definition() {
        let a = &e(&[1]) + &e(&[1, 2]);
        let phi = oracles::pseudorandom_oracle(3);
        let lhs = ev(&phi.grading(), &a);
        let rhs = ev(&phi, &a.gamma());
        assert!((lhs - rhs).norm() < 1e-12);
        let th = Antifunctional::theta(a.clone());
        assert_eq!(th.grading().finite_part().unwrap(), &a.gamma());
    }

    #[test]
    fn odd_part_annihilates_even_monomials() {
        let phi = oracles::pseudorandom_oracle(11);
        let even = e(&[1, 2]);
        // (phi - gamma(phi))/2 kills even elements
        let lhs = (ev(&phi, &even) - ev(&phi.grading(), &even)) * c(0.5, 0.0);
        assert!(lhs.norm() < 1e-15);
    }

    #[test]
    fn bimodule_actions_satisfy_their_definitions() {
        let a = &e(&[1]) + &e(&[2, 3]).scale(c(0.0, 0.5));
        let b = &e(&[2]) + &Multivector::unit();
        let cth = &e(&[1, 3]) + &e(&[2]).scale(c(1.0, -1.0));
        for psi in [
            Antifunctional::theta(e(&[2]).scale(c(1.0, 2.0))),
            Antifunctional::product_weights(WeightSeq::Finite(vec![0.7, 0.6, 0.5])),
            oracles::pseudorandom_oracle(5),
        ] {
            let lhs = ev(&Antifunctional::act_left(&a, &psi), &cth);
            let rhs = ev(&psi, &a.star().mul(&cth));
            assert!((lhs - rhs).norm() < 1e-12, "left action");
            let lhs = ev(&Antifunctional::act_right(&psi, &b), &cth);
            let rhs = ev(&psi, &cth.mul(&b.star()));
            assert!((lhs - rhs).norm() < 1e-12, "right action");
        }
    }

    #[test]
    fn left_action_by_unit_is_identity() {
        let psi = oracles::pseudorandom_oracle(2);
        let a = &e(&[1]) + &e(&[1, 2, 3]);
        let acted = Antifunctional::act_left(&Multivector::unit(), &psi);
        assert!((ev(&acted, &a) - ev(&psi, &a)).norm() < 1e-15);
    }

    #[test]
    fn theta_action_is_multiplication() {
        let a = e(&[1]);
        let b = e(&[2]);
        let acted = Antifunctional::act_left(&a, &Antifunctional::theta(b.clone()));
        assert_eq!(acted.finite_part().unwrap(), &a.mul(&b));
    }

    #[test]
    fn approximant_restricts_coefficients_on_coordinates() {
        let phi = Antifunctional::product_weights(WeightSeq::PowerLaw { scale: 1.0, exponent: 1.0 });
        let got = phi.approximant(&Subspace::coordinate([1, 2])).unwrap();
        let want = Multivector::from_terms([
            (Monomial::unit(), c(1.0, 0.0)),
            (Monomial::basis(1), c(1.0, 0.0)),
            (Monomial::basis(2), c(0.5, 0.0)),
            (Monomial::new(vec![1, 2]).unwrap(), c(0.5, 0.0)),
        ]);
        assert!(got.approx_eq(&want, 1e-15));
    }

    #[test]
    fn approximant_of_theta_recovers_the_element() {
        let a = &e(&[1]) + &e(&[1, 2]).scale(c(0.0, 2.0));
        let got = Antifunctional::theta(a.clone())
            .approximant(&Subspace::coordinate([1, 2]))
            .unwrap();
        assert_eq!(got, a);
    }

    #[test]
    fn approximant_represents_the_restriction_on_general_subspaces() {
        use crate::clifford::RealVector;
        let phi = oracles::pseudorandom_oracle(13);
        let m = Subspace::span([
            RealVector::from_comps([(1, 1.0), (2, 1.0)]),
            RealVector::from_comps([(3, 1.0)]),
        ]);
        let phi_m = phi.approximant(&m).unwrap();
        // <c|phi_M> = phi(c) for c in C(M)
        let c_vec = crate::clifford::subspace::unrebase(
            &(&e(&[1]) + &e(&[1, 2]).scale(c(0.3, -1.0))),
            m.onb(),
        );
        let lhs = inner(&c_vec, &phi_m);
        let rhs = ev(&phi, &c_vec);
        assert!((lhs - rhs).norm() < 1e-10);
    }

    #[test]
    fn norm_verdicts_by_kind() {
        let a = &e(&[1]).scale(c(3.0, 0.0)) + &e(&[2, 3]).scale(c(0.0, 4.0));
        match Antifunctional::theta(a).norm(NormOptions::default()).unwrap() {
            NormVerdict::Exact(v) => assert!((v - 5.0).abs() < 1e-15),
            v => panic!("expected exact, got {v:?}"),
        }

        let pw = Antifunctional::product_weights(WeightSeq::PowerLaw { scale: 1.0, exponent: 1.0 });
        match pw.norm(NormOptions::default()).unwrap() {
            NormVerdict::Certified { value, error } => {
                let want = (std::f64::consts::PI.sinh() / std::f64::consts::PI).sqrt();
                assert!(error < 1e-6);
                assert!((value - want).abs() <= error + 1e-9, "{value} vs {want}");
            }
            v => panic!("expected certified, got {v:?}"),
        }

        let power = oracles::power_oracle(2.0);
        match power.norm(NormOptions::default()).unwrap() {
            NormVerdict::Diverged { witness } => {
                // the squared net is 5^k
                assert!((witness[0] - 5.0f64.sqrt()).abs() < 1e-12);
                assert!((witness[1] - 5.0).abs() < 1e-12);
            }
            v => panic!("expected diverged, got {v:?}"),
        }

        let bounded_oracle = oracles::product_weights_oracle(WeightSeq::PowerLaw {
            scale: 1.0,
            exponent: 1.0,
        });
        match bounded_oracle.norm(NormOptions::default()).unwrap() {
            NormVerdict::LowerBound { value, dims } => {
                assert_eq!(dims, 10);
                let limit = (std::f64::consts::PI.sinh() / std::f64::consts::PI).sqrt();
                assert!(value < limit && value > 0.9 * limit);
            }
            v => panic!("expected lower bound, got {v:?}"),
        }
    }

    #[test]
    fn zero_budget_rejected() {
        let phi = Antifunctional::taubar();
        assert!(matches!(
            phi.norm(NormOptions { budget: 0, ..Default::default() }),
            Err(NormError::ZeroBudget)
        ));
    }

    #[test]
    fn ext_trace_examples() {
        assert_eq!(Antifunctional::taubar().ext_trace().unwrap(), c(1.0, 0.0));
        let a = &Multivector::scalar(c(2.0, 0.0)) + &e(&[1]);
        assert_eq!(Antifunctional::theta(a).ext_trace().unwrap(), c(2.0, 0.0));
        let phi = oracles::pseudorandom_oracle(17);
        let lhs = phi.grading().ext_trace().unwrap();
        assert_eq!(lhs, phi.ext_trace().unwrap());
    }

    #[test]
    fn pythagoras_on_nested_coordinates() {
        let phi = Antifunctional::product_weights(WeightSeq::Finite(vec![0.9, 0.5, 0.4, 0.3]));
        let m = Subspace::coordinate([1]);
        let n = Subspace::coordinate([1, 2, 3]);
        let check = pythagoras_check(&phi, &m, &n).unwrap();
        assert!((check.lhs - check.rhs).abs() < 1e-12);
        assert!(check.identity_dev < 1e-12);

        let taub = Antifunctional::taubar();
        let check = pythagoras_check(&taub, &m, &n).unwrap();
        assert_eq!((check.lhs, check.rhs), (1.0, 1.0));

        assert!(matches!(
            pythagoras_check(&phi, &n, &m),
            Err(PythagorasError::NotNested)
        ));
    }

    #[test]
    fn acted_certificates_remain_sound() {
        // power-law base cannot be expanded: the action must still carry a
        // valid certificate
        let base = Antifunctional::product_weights(WeightSeq::PowerLaw { scale: 0.8, exponent: 1.0 });
        let a = &e(&[1]) + &e(&[2]).scale(c(0.0, 1.0));
        let acted = Antifunctional::act_left(&a, &base);
        assert_eq!(acted.kind(), KindTag::L2Certified);
        let cert = acted.certified_part().unwrap();
        // certificate dominates the visible mass on a prefix
        let f: BTreeSet<u32> = (1..=4).collect();
        let (partial, _) = cert.partial_norm_sq(&f);
        assert!(cert.norm_sq_upper() >= partial - 1e-9);
        // oracle agrees with the definitional evaluation
        let s = Monomial::new(vec![1, 2]).unwrap();
        let lhs = cert.coeff(&s);
        let rhs = ev(&base, &a.star().mul(&e(&[1, 2])));
        assert!((lhs - rhs).norm() < 1e-12);
    }
}
