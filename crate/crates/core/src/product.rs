//! The partial product on the antidual.
//!
//! `(phi psi)(c)` is the limit of `psi(phi_M^* c)` (equivalently
//! `phi(c psi_M^*)`, equivalently `<c|phi_M psi_M>`) along the directed set
//! of finite-dimensional subspaces, where it exists. Three strategies
//! evaluate it:
//!
//! * **ExactStabilized** — one factor is an embedded algebra element, so the
//!   net is eventually constant and can be read off exactly;
//! * **Certified** — both factors carry norm/tail certificates; truncation at
//!   a coordinate prefix gives a value with a sound error bound that shrinks
//!   as the prefix grows;
//! * **Heuristic** — anything else: the net is sampled on growing prefixes
//!   and flagged as converged, diverged, or unknown. Heuristic results are
//!   never certified.

use num_complex::Complex64;
use thiserror::Error;

use crate::antidual::{sustained_growth, Antifunctional, KindTag};
use crate::clifford::{inner, op_norm, Multivector, Subspace};
use std::sync::Arc;

/// Evaluation strategy used for a product value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    ExactStabilized,
    Certified,
    Heuristic,
}

/// Verdict on the defining net at one evaluation point.
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Converged { error_bound: f64, strategy: Strategy },
    Diverged { witness: Vec<f64> },
    Unknown { last_values: Vec<Complex64> },
}

/// Result of evaluating `(phi psi)(c)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductEvaluation {
    /// Present exactly when the verdict is `Converged`.
    pub value: Option<Complex64>,
    pub verdict: Verdict,
}

impl ProductEvaluation {
    pub fn strategy(&self) -> Option<Strategy> {
        match &self.verdict {
            Verdict::Converged { strategy, .. } => Some(*strategy),
            _ => None,
        }
    }

    pub fn error_bound(&self) -> Option<f64> {
        match &self.verdict {
            Verdict::Converged { error_bound, .. } => Some(*error_bound),
            _ => None,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ProductError {
    #[error("eps must be positive")]
    InvalidEps,
    #[error("requested strategy {0:?} is not applicable to these factors")]
    StrategyUnavailable(Strategy),
    #[error("product undefined at evaluation point: {0:?}")]
    Undefined(Verdict),
}

/// Knobs for product evaluation.
#[derive(Debug, Clone, Copy)]
pub struct EvalOptions {
    /// Target error bound (certified) or agreement window width (heuristic).
    pub eps: f64,
    /// Largest coordinate prefix dimension sampled.
    pub budget: u32,
    /// Net magnitudes beyond this flag divergence.
    pub cap: f64,
    /// Force a particular strategy instead of dispatching on kinds.
    pub force: Option<Strategy>,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { eps: 1e-9, budget: 12, cap: 1e12, force: None }
    }
}

/// Width of the agreement window for the heuristic strategy.
const HEURISTIC_WINDOW: usize = 4;

/// Evaluates `(phi psi)(c)` with the best applicable strategy.
pub fn product_at(
    phi: &Antifunctional,
    psi: &Antifunctional,
    c: &Multivector,
    opts: EvalOptions,
) -> Result<ProductEvaluation, ProductError> {
    if opts.eps <= 0.0 {
        return Err(ProductError::InvalidEps);
    }
    let exact_ok = phi.finite_part().is_some() || psi.finite_part().is_some();
    let certified_ok =
        phi.kind() != KindTag::Oracle && psi.kind() != KindTag::Oracle && !exact_ok;
    match opts.force {
        Some(Strategy::ExactStabilized) if !exact_ok => {
            return Err(ProductError::StrategyUnavailable(Strategy::ExactStabilized))
        }
        Some(Strategy::Certified)
            if !(phi.as_certified().is_some() && psi.as_certified().is_some()) =>
        {
            return Err(ProductError::StrategyUnavailable(Strategy::Certified))
        }
        _ => {}
    }

    match opts.force {
        Some(Strategy::ExactStabilized) => exact_stabilized(phi, psi, c),
        Some(Strategy::Certified) => certified_eval(
            &phi.as_certified().unwrap(),
            &psi.as_certified().unwrap(),
            c,
            opts,
        ),
        Some(Strategy::Heuristic) => heuristic_eval(phi, psi, c, opts),
        None if exact_ok => exact_stabilized(phi, psi, c),
        None if certified_ok => certified_eval(
            &phi.as_certified().unwrap(),
            &psi.as_certified().unwrap(),
            c,
            opts,
        ),
        None => heuristic_eval(phi, psi, c, opts),
    }
}

/// One factor is embedded: past its own support the net is constant.
fn exact_stabilized(
    phi: &Antifunctional,
    psi: &Antifunctional,
    c: &Multivector,
) -> Result<ProductEvaluation, ProductError> {
    let value = if let Some(a) = phi.finite_part() {
        psi.eval(&a.star().mul(c))?
    } else if let Some(b) = psi.finite_part() {
        phi.eval(&c.mul(&b.star()))?
    } else {
        return Err(ProductError::StrategyUnavailable(Strategy::ExactStabilized));
    };
    Ok(ProductEvaluation {
        value: Some(value),
        verdict: Verdict::Converged { error_bound: 0.0, strategy: Strategy::ExactStabilized },
    })
}

/// Both factors certified: `<c|phi_F psi_F>` with the truncation error
/// bounded by the operator norm of `c` times the two norm-weighted tails.
fn certified_eval(
    phi: &Antifunctional,
    psi: &Antifunctional,
    c: &Multivector,
    opts: EvalOptions,
) -> Result<ProductEvaluation, ProductError> {
    let cphi = phi.certified_part().expect("certified factor");
    let cpsi = psi.certified_part().expect("certified factor");
    let opn_c = op_norm(c);
    let phi_up = cphi.norm_sq_upper().sqrt();
    let psi_up = cpsi.norm_sq_upper().sqrt();
    let budget = opts.budget.min(crate::antidual::certified::ENUM_DIM_CAP as u32);
    let mut last = Vec::new();
    for k in 1..=budget {
        let f: std::collections::BTreeSet<u32> = (1..=k).collect();
        let phi_f = phi.approximant(&Subspace::coordinate(f.clone())).expect("certified is total");
        let psi_f = psi.approximant(&Subspace::coordinate(f.clone())).expect("certified is total");
        let value = inner(c, &phi_f.mul(&psi_f));
        let bound = opn_c
            * (cphi.tail_sq(&f).sqrt() * psi_up + phi_up * cpsi.tail_sq(&f).sqrt())
            + 1e-14 * (1.0 + value.norm());
        if bound <= opts.eps {
            return Ok(ProductEvaluation {
                value: Some(value),
                verdict: Verdict::Converged { error_bound: bound, strategy: Strategy::Certified },
            });
        }
        last.push(value);
        if last.len() > HEURISTIC_WINDOW {
            last.remove(0);
        }
    }
    Ok(ProductEvaluation { value: None, verdict: Verdict::Unknown { last_values: last } })
}

/// Black-box factors: sample the net `<c|phi_k psi_k>` on growing prefixes.
fn heuristic_eval(
    phi: &Antifunctional,
    psi: &Antifunctional,
    c: &Multivector,
    opts: EvalOptions,
) -> Result<ProductEvaluation, ProductError> {
    let budget = opts.budget.min(crate::antidual::certified::ENUM_DIM_CAP as u32);
    let mut values: Vec<Complex64> = Vec::with_capacity(budget as usize);
    let mut mags: Vec<f64> = Vec::with_capacity(budget as usize);
    for k in 1..=budget {
        let phi_f = phi.approximant_prefix(k)?;
        let psi_f = psi.approximant_prefix(k)?;
        let v = inner(c, &phi_f.mul(&psi_f));
        values.push(v);
        mags.push(v.norm());
        if v.norm() > opts.cap || sustained_growth(&mags) {
            return Ok(ProductEvaluation {
                value: None,
                verdict: Verdict::Diverged { witness: mags },
            });
        }
        if values.len() >= HEURISTIC_WINDOW {
            let window = &values[values.len() - HEURISTIC_WINDOW..];
            let spread = window
                .iter()
                .flat_map(|a| window.iter().map(move |b| (a - b).norm()))
                .fold(0.0f64, f64::max);
            if spread <= opts.eps {
                return Ok(ProductEvaluation {
                    value: Some(*values.last().unwrap()),
                    verdict: Verdict::Converged {
                        error_bound: spread,
                        strategy: Strategy::Heuristic,
                    },
                });
            }
        }
    }
    let tail_start = values.len().saturating_sub(HEURISTIC_WINDOW);
    Ok(ProductEvaluation {
        value: None,
        verdict: Verdict::Unknown { last_values: values[tail_start..].to_vec() },
    })
}

/// The partial product `phi psi` as a functional. When a factor is embedded
/// the result is exact (and kind-preserving via the module actions); pairs
/// of certified factors give a lazily evaluated functional whose values are
/// certified at each point; anything else is lazy and heuristic.
pub fn product(phi: &Antifunctional, psi: &Antifunctional) -> Antifunctional {
    product_with(phi, psi, EvalOptions::default())
}

pub fn product_with(phi: &Antifunctional, psi: &Antifunctional, opts: EvalOptions) -> Antifunctional {
    match (phi.finite_part(), psi.finite_part()) {
        (Some(a), Some(b)) => Antifunctional::theta(a.mul(b)),
        (Some(a), None) => Antifunctional::act_left(a, psi),
        (None, Some(b)) => Antifunctional::act_right(phi, b),
        (None, None) => {
            let phi = phi.clone();
            let psi = psi.clone();
            Antifunctional::derived(Arc::new(move |c: &Multivector| {
                let ev = product_at(&phi, &psi, c, opts)?;
                match ev.value {
                    Some(v) => Ok(v),
                    None => Err(ProductError::Undefined(ev.verdict)),
                }
            }))
        }
    }
}

/// Domain verdict for a pair of factors.
#[derive(Debug, Clone, PartialEq)]
pub enum DomainVerdict {
    /// A strategy guarantees convergence at every evaluation point.
    Yes,
    /// Some probe point witnessed divergence.
    No { probe: Multivector, witness: Vec<f64> },
    /// Nothing was decided.
    Unknown,
}

/// Is `psi` in the domain of left multiplication by `phi`? `Yes` is returned
/// only on the strength of a guaranteeing strategy; probe points can produce
/// a divergence witness but never a `Yes`.
pub fn in_domain(
    phi: &Antifunctional,
    psi: &Antifunctional,
    probes: &[Multivector],
    opts: EvalOptions,
) -> DomainVerdict {
    if phi.finite_part().is_some() || psi.finite_part().is_some() {
        return DomainVerdict::Yes;
    }
    if phi.kind() == KindTag::L2Certified && psi.kind() == KindTag::L2Certified {
        return DomainVerdict::Yes;
    }
    for probe in probes {
        if let Ok(ev) = product_at(phi, psi, probe, opts) {
            if let Verdict::Diverged { witness } = ev.verdict {
                return DomainVerdict::No { probe: probe.clone(), witness };
            }
        }
    }
    DomainVerdict::Unknown
}

#[derive(Debug, Error)]
pub enum HilbertError {
    #[error("hilbert inner product needs finite or certified factors")]
    NotCertified,
}

/// The Hilbert-space inner product `<phi|psi> = sum_S conj(phi_S) psi_S` on
/// the bounded class, with an error bound at most `eps` when achievable.
pub fn hilbert_inner(
    phi: &Antifunctional,
    psi: &Antifunctional,
    _eps: f64,
) -> Result<(Complex64, f64), HilbertError> {
    if let (Some(a), Some(b)) = (phi.finite_part(), psi.finite_part()) {
        return Ok((inner(a, b), 0.0));
    }
    let cphi = phi.as_certified().ok_or(HilbertError::NotCertified)?;
    let cpsi = psi.as_certified().ok_or(HilbertError::NotCertified)?;
    let (v, e) = cphi
        .certified_part()
        .expect("as_certified yields certified kind")
        .full_inner(cpsi.certified_part().expect("as_certified yields certified kind"));
    Ok((v, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::antidual::certified::WeightSeq;
    use crate::antidual::oracles;
    use crate::clifford::Monomial;

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn e(ix: &[u32]) -> Multivector {
        Multivector::blade(Monomial::new(ix.to_vec()).unwrap(), c64(1.0, 0.0))
    }

    #[test]
    fn embedded_product_is_exact() {
        let phi = Antifunctional::theta(e(&[1]));
        let psi = Antifunctional::theta(e(&[2]));
        let ev = product_at(&phi, &psi, &e(&[1, 2]), EvalOptions::default()).unwrap();
        assert_eq!(ev.value, Some(c64(1.0, 0.0)));
        assert_eq!(ev.strategy(), Some(Strategy::ExactStabilized));
        assert_eq!(ev.error_bound(), Some(0.0));
    }

    #[test]
    fn unit_functional_is_the_identity() {
        let taub = Antifunctional::taubar();
        let psi = oracles::pseudorandom_oracle(9);
        let point = &e(&[1]) + &e(&[1, 3]).scale(c64(0.5, -0.5));
        let ev = product_at(&taub, &psi, &point, EvalOptions::default()).unwrap();
        assert!((ev.value.unwrap() - psi.eval(&point).unwrap()).norm() < 1e-15);
        let ev = product_at(&psi, &taub, &point, EvalOptions::default()).unwrap();
        assert!((ev.value.unwrap() - psi.eval(&point).unwrap()).norm() < 1e-15);
    }

    #[test]
    fn certified_product_bounds_are_sound() {
        // finitely supported functionals re-wrapped as certified: the bound
        // must cover the gap to the exact value
        let a = &e(&[1]).scale(c64(0.5, 0.25)) + &e(&[2, 3]);
        let b = &e(&[2]) + &Multivector::unit().scale(c64(0.0, 1.0));
        let phi = Antifunctional::theta(a.clone()).as_certified().unwrap();
        let psi = Antifunctional::theta(b.clone()).as_certified().unwrap();
        let point = &e(&[1, 2]) + &e(&[3]);
        let opts = EvalOptions { eps: 1e-6, ..Default::default() };
        let ev = product_at(&phi, &psi, &point, opts).unwrap();
        assert_eq!(ev.strategy(), Some(Strategy::Certified));
        let exact = inner(&point, &a.mul(&b));
        let bound = ev.error_bound().unwrap();
        assert!(bound <= 1e-6);
        assert!((ev.value.unwrap() - exact).norm() <= bound);
    }

    #[test]
    fn power_pair_diverges_at_the_unit() {
        let power = oracles::power_oracle(2.0);
        let pair = (power.adjoint(), power.clone());
        let ev = product_at(&pair.0, &pair.1, &Multivector::unit(), EvalOptions::default()).unwrap();
        match ev.verdict {
            Verdict::Diverged { witness } => {
                // partial sums are 5^k
                for (k, w) in witness.iter().enumerate() {
                    assert!((w - 5.0f64.powi(k as i32 + 1)).abs() < 1e-6 * w);
                }
            }
            v => panic!("expected divergence, got {v:?}"),
        }
    }

    #[test]
    fn lazy_product_evaluates_pointwise_and_fails_off_domain() {
        let power = oracles::power_oracle(2.0);
        let lazy = product(&power.adjoint(), &power);
        let err = lazy.eval(&Multivector::unit()).unwrap_err();
        assert!(matches!(err, ProductError::Undefined(Verdict::Diverged { .. })));

        let bounded = Antifunctional::product_weights(WeightSeq::Finite(vec![0.5, 0.25]));
        let lazy = product(&bounded, &bounded);
        let got = lazy.eval(&Multivector::unit()).unwrap();
        // tau(phi psi) at the unit: sum over S of coeff(S)^2 * sign(e_S e_S)
        // with weights {0.5, 0.25}: 1 + 0.25 + 0.0625^... computed directly
        let f: std::collections::BTreeSet<u32> = (1..=2).collect();
        let phi_f = bounded.approximant(&Subspace::coordinate(f)).unwrap();
        let want = inner(&Multivector::unit(), &phi_f.mul(&phi_f));
        assert!((got - want).norm() < 1e-9);
    }

    #[test]
    fn domain_verdicts() {
        let a = Antifunctional::theta(e(&[1]));
        let any = oracles::power_oracle(2.0);
        assert_eq!(in_domain(&a, &any, &[], EvalOptions::default()), DomainVerdict::Yes);

        let pw = Antifunctional::product_weights(WeightSeq::Finite(vec![0.5]));
        assert_eq!(in_domain(&pw, &pw, &[], EvalOptions::default()), DomainVerdict::Yes);

        let power = oracles::power_oracle(2.0);
        match in_domain(&power.adjoint(), &power, &[Multivector::unit()], EvalOptions::default()) {
            DomainVerdict::No { .. } => {}
            v => panic!("expected No, got {v:?}"),
        }

        match in_domain(&power.adjoint(), &power, &[], EvalOptions::default()) {
            DomainVerdict::Unknown => {}
            v => panic!("expected Unknown, got {v:?}"),
        }
    }

    #[test]
    fn hilbert_inner_matches_the_tracial_form() {
        let a = &e(&[1]) + &e(&[2]).scale(c64(0.0, 2.0));
        let b = &e(&[1]).scale(c64(3.0, 0.0)) + &Multivector::unit();
        let (v, err) = hilbert_inner(
            &Antifunctional::theta(a.clone()),
            &Antifunctional::theta(b.clone()),
            1e-9,
        )
        .unwrap();
        assert_eq!(err, 0.0);
        assert_eq!(v, inner(&a, &b));
    }

    #[test]
    fn hilbert_inner_of_inverse_weights_hits_the_closed_form() {
        let phi = Antifunctional::product_weights(WeightSeq::PowerLaw { scale: 1.0, exponent: 1.0 });
        let (v, err) = hilbert_inner(&phi, &phi, 1e-6).unwrap();
        let want = std::f64::consts::PI.sinh() / std::f64::consts::PI;
        assert!(err < 1e-6);
        assert!((v.re - want).abs() <= err + 1e-9);
        assert!(v.im.abs() < 1e-12);
    }

    #[test]
    fn invalid_eps_rejected() {
        let phi = Antifunctional::taubar();
        let res = product_at(&phi, &phi, &Multivector::unit(), EvalOptions { eps: 0.0, ..Default::default() });
        assert!(matches!(res, Err(ProductError::InvalidEps)));
    }

    #[test]
    fn forcing_an_inapplicable_strategy_errors() {
        let power = oracles::power_oracle(2.0);
        let res = product_at(
            &power,
            &power,
            &Multivector::unit(),
            EvalOptions { force: Some(Strategy::Certified), ..Default::default() },
        );
        assert!(matches!(res, Err(ProductError::StrategyUnavailable(Strategy::Certified))));
    }
}
