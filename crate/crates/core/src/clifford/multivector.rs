//! Sparse multivectors: finitely supported complex coefficient maps over
//! basis monomials.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::monomial::{mono_mul, Monomial};
use super::vector::RealVector;
use crate::format::fmt_complex;

/// An element of the Clifford algebra: a finite complex combination of basis
/// monomials. Kept in canonical sparse form (no stored zero coefficients).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Multivector {
    terms: BTreeMap<Monomial, Complex64>,
}

impl Multivector {
    pub fn zero() -> Self {
        Multivector::default()
    }

    /// The algebra unit `1`.
    pub fn unit() -> Self {
        Multivector::scalar(Complex64::new(1.0, 0.0))
    }

    /// `z * 1`.
    pub fn scalar(z: Complex64) -> Self {
        let mut mv = Multivector::default();
        mv.add_term(Monomial::unit(), z);
        mv
    }

    /// The generator `e_i`.
    pub fn basis_vector(i: u32) -> Self {
        Multivector::blade(Monomial::basis(i), Complex64::new(1.0, 0.0))
    }

    /// A single scaled monomial.
    pub fn blade(m: Monomial, z: Complex64) -> Self {
        let mut mv = Multivector::default();
        mv.add_term(m, z);
        mv
    }

    /// The image of a real vector `v = sum v_i e_i` in the algebra.
    pub fn from_vector(v: &RealVector) -> Self {
        let mut mv = Multivector::default();
        for (&i, &x) in v.comps() {
            mv.add_term(Monomial::basis(i), Complex64::new(x, 0.0));
        }
        mv
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Complex64)>) -> Self {
        let mut mv = Multivector::default();
        for (m, z) in terms {
            mv.add_term(m, z);
        }
        mv
    }

    /// Adds `z * e_m`, keeping the canonical no-zero form.
    pub fn add_term(&mut self, m: Monomial, z: Complex64) {
        if z == Complex64::ZERO {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(z);
            }
            Entry::Occupied(mut e) => {
                let s = *e.get() + z;
                if s == Complex64::ZERO {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Complex64 {
        self.terms.get(m).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Complex64)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the element is a complex multiple of the unit.
    pub fn is_scalar(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_unit())
    }

    /// Union of the basis indices appearing in the support.
    pub fn index_support(&self) -> BTreeSet<u32> {
        let mut set = BTreeSet::new();
        for m in self.terms.keys() {
            set.extend(m.indices().iter().copied());
        }
        set
    }

    pub fn scale(&self, z: Complex64) -> Self {
        if z == Complex64::ZERO {
            return Multivector::zero();
        }
        Multivector {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * z)).collect(),
        }
    }

    /// Clifford product, the bilinear extension of the monomial product.
    pub fn mul(&self, rhs: &Multivector) -> Multivector {
        let mut out = Multivector::default();
        for (s, &a) in &self.terms {
            for (t, &b) in &rhs.terms {
                let (sign, st) = mono_mul(s, t);
                out.add_term(st, a * b * sign as f64);
            }
        }
        out
    }

    /// The involution `*`: antilinear, `(ab)^* = b^* a^*`, fixes `V`.
    pub fn star(&self) -> Multivector {
        Multivector {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.conj() * m.reversal_sign() as f64))
                .collect(),
        }
    }

    /// The grading automorphism: `e_S -> (-1)^{|S|} e_S`, complex linear.
    pub fn gamma(&self) -> Multivector {
        Multivector {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * m.grading_sign() as f64))
                .collect(),
        }
    }

    /// The even tracial state: the coefficient of the unit monomial.
    pub fn trace(&self) -> Complex64 {
        self.coeff(&Monomial::unit())
    }

    /// Squared trace norm `= sum of squared coefficient moduli`.
    pub fn norm_sq(&self) -> f64 {
        self.terms.values().map(|c| c.norm_sqr()).sum()
    }

    /// Trace norm `sqrt(<a|a>)`.
    pub fn trace_norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Parity, if the element is homogeneous: 0 even, 1 odd.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(|m| m.parity());
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Largest coefficient difference against `other`.
    pub fn distance(&self, other: &Multivector) -> f64 {
        let mut d: f64 = 0.0;
        for m in self.terms.keys().chain(other.terms.keys()) {
            d = d.max((self.coeff(m) - other.coeff(m)).norm());
        }
        d
    }

    pub fn approx_eq(&self, other: &Multivector, tol: f64) -> bool {
        self.distance(other) <= tol
    }

    /// Drops coefficients of modulus at most `tol` (for display only; the
    /// arithmetic keeps everything that is not exactly zero).
    pub fn trimmed(&self, tol: f64) -> Multivector {
        Multivector {
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| c.norm() > tol)
                .map(|(m, c)| (m.clone(), *c))
                .collect(),
        }
    }
}

/// Tracial inner product `<a|b> = tau(a^* b)`, antilinear in the first slot.
///
/// Monomials are orthonormal for it, so it reduces to the coefficient
/// pairing; `inner_via_trace` below keeps the defining route for tests.
pub fn inner(a: &Multivector, b: &Multivector) -> Complex64 {
    let (small, large, flip) = if a.num_terms() <= b.num_terms() {
        (a, b, false)
    } else {
        (b, a, true)
    };
    let mut acc = Complex64::ZERO;
    for (m, &c) in small.terms() {
        let d = large.coeff(m);
        acc += if flip { d.conj() * c } else { c.conj() * d };
    }
    acc
}

/// The defining formula `tau(a^* b)`, kept as an independent route.
pub fn inner_via_trace(a: &Multivector, b: &Multivector) -> Complex64 {
    a.star().mul(b).trace()
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        let mut out = self.clone();
        for (m, &z) in rhs.terms() {
            out.add_term(m.clone(), z);
        }
        out
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        let mut out = self.clone();
        for (m, &z) in rhs.terms() {
            out.add_term(m.clone(), -z);
        }
        out
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        Multivector::mul(self, rhs)
    }
}

impl fmt::Display for Multivector {
    /// Prints in the expression syntax accepted by the CLI parser, e.g.
    /// `1+2i + -0.5*e1 + (0+1i)*e{1,3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.is_unit() {
                write!(f, "{}", fmt_complex(*c))?;
            } else if *c == Complex64::new(1.0, 0.0) {
                write!(f, "{m}")?;
            } else if c.im == 0.0 {
                write!(f, "{}*{m}", fmt_complex(*c))?;
            } else {
                write!(f, "({})*{m}", fmt_complex(*c))?;
            }
        }
        Ok(())
    }
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

    #[test]
    fn generators_square_to_unit() {
        assert_eq!(e(&[1]).mul(&e(&[1])), Multivector::unit());
    }

    #[test]
    fn clifford_relation_diagonal() {
        // (e1 + e2)^2 = 2 since (v|v) = 2
        let v = &e(&[1]) + &e(&[2]);
        assert_eq!(v.mul(&v), Multivector::scalar(c(2.0, 0.0)));
    }

    #[test]
    fn product_anticommutes() {
        // e12 * e1 = -e2
        let got = e(&[1, 2]).mul(&e(&[1]));
        assert_eq!(got, e(&[2]).scale(c(-1.0, 0.0)));
    }

    #[test]
    fn star_examples() {
        assert_eq!(Multivector::scalar(c(0.0, 1.0)).star(), Multivector::scalar(c(0.0, -1.0)));
        assert_eq!(e(&[1, 2]).star(), e(&[1, 2]).scale(c(-1.0, 0.0)));
        assert_eq!(e(&[1]).star(), e(&[1]));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(e(&[1]).gamma(), e(&[1]).scale(c(-1.0, 0.0)));
        assert_eq!(Multivector::unit().gamma(), Multivector::unit());
        assert_eq!(e(&[1, 2]).gamma(), e(&[1, 2]));
    }

    #[test]
    fn trace_examples() {
        assert_eq!(Multivector::unit().trace(), c(1.0, 0.0));
        assert_eq!(e(&[1]).trace(), c(0.0, 0.0));
        let a = &Multivector::scalar(c(3.0, 0.0)) + &e(&[1, 2]).scale(c(0.0, 5.0));
        assert_eq!(a.trace(), c(3.0, 0.0));
    }

    #[test]
    fn inner_matches_trace_route() {
        let a = &e(&[1]).scale(c(0.0, 2.0)) + &e(&[1, 3]);
        let b = &e(&[1]) + &(&e(&[2]) + &Multivector::unit());
        assert_eq!(inner(&a, &b), inner_via_trace(&a, &b));
        assert_eq!(inner(&e(&[1]), &e(&[1])), c(1.0, 0.0));
        assert_eq!(inner(&e(&[1]), &e(&[2])), c(0.0, 0.0));
    }

    #[test]
    fn inner_antilinear_in_first_slot() {
        let a = &e(&[1]) + &e(&[2, 3]);
        let b = &e(&[1]).scale(c(2.0, 1.0)) + &e(&[2, 3]);
        let lhs = inner(&a.scale(c(0.0, 1.0)), &b);
        assert_eq!(lhs, inner(&a, &b) * c(0.0, -1.0));
    }

    #[test]
    fn trace_norm_pythagorean() {
        let a = &e(&[1]).scale(c(3.0, 0.0)) + &e(&[2, 3]).scale(c(0.0, 4.0));
        assert_eq!(a.trace_norm(), 5.0);
        assert_eq!(Multivector::zero().trace_norm(), 0.0);
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let mut a = e(&[1]);
        a.add_term(Monomial::basis(1), c(-1.0, 0.0));
        assert!(a.is_zero());
        assert_eq!(a.num_terms(), 0);
    }

    #[test]
    fn display_roundtrip_form() {
        let a = &(&Multivector::unit() + &e(&[1]).scale(c(-0.5, 0.0)))
            + &e(&[1, 3]).scale(c(0.0, 1.0));
        assert_eq!(a.to_string(), "1 + -0.5*e1 + (0+1i)*e{1,3}");
    }
}
