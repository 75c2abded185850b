//! Sparse real vectors: the generating inner-product space `V`.

use std::collections::BTreeMap;
use std::fmt;

/// A finitely supported real coefficient map over basis indices; an element
/// of the real inner-product space generating the algebra.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RealVector {
    comps: BTreeMap<u32, f64>,
}

impl RealVector {
    pub fn zero() -> Self {
        RealVector::default()
    }

    /// The standard basis vector `e_i`. Panics if `i == 0`.
    pub fn basis(i: u32) -> Self {
        assert!(i > 0, "basis indices start at 1");
        let mut comps = BTreeMap::new();
        comps.insert(i, 1.0);
        RealVector { comps }
    }

    pub fn from_comps(comps: impl IntoIterator<Item = (u32, f64)>) -> Self {
        let mut v = RealVector::default();
        for (i, x) in comps {
            v.add_comp(i, x);
        }
        v
    }

    pub fn add_comp(&mut self, i: u32, x: f64) {
        assert!(i > 0, "basis indices start at 1");
        if x == 0.0 {
            return;
        }
        let entry = self.comps.entry(i).or_insert(0.0);
        *entry += x;
        if *entry == 0.0 {
            self.comps.remove(&i);
        }
    }

    pub fn comps(&self) -> &BTreeMap<u32, f64> {
        &self.comps
    }

    pub fn get(&self, i: u32) -> f64 {
        self.comps.get(&i).copied().unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn indices(&self) -> impl Iterator<Item = u32> + '_ {
        self.comps.keys().copied()
    }

    /// Euclidean dot product of the sparse coefficient maps.
    pub fn dot(&self, other: &RealVector) -> f64 {
        let (small, large) = if self.comps.len() <= other.comps.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .comps
            .iter()
            .map(|(&i, &x)| x * large.get(i))
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(&self, s: f64) -> RealVector {
        if s == 0.0 {
            return RealVector::zero();
        }
        RealVector {
            comps: self.comps.iter().map(|(&i, &x)| (i, x * s)).collect(),
        }
    }

    pub fn add(&self, other: &RealVector) -> RealVector {
        let mut out = self.clone();
        for (&i, &x) in &other.comps {
            out.add_comp(i, x);
        }
        out
    }

    pub fn sub(&self, other: &RealVector) -> RealVector {
        self.add(&other.scale(-1.0))
    }

    /// True when the vector is `e_i` for some `i`, up to `tol`.
    pub fn as_standard_basis(&self, tol: f64) -> Option<u32> {
        let mut hit = None;
        for (&i, &x) in &self.comps {
            if (x - 1.0).abs() <= tol {
                if hit.is_some() {
                    return None;
                }
                hit = Some(i);
            } else if x.abs() > tol {
                return None;
            }
        }
        hit
    }
}

impl fmt::Display for RealVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, x)) in self.comps.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*e{}", crate::format::fmt_sig(*x, 12), i)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_and_norm() {
        let v = RealVector::from_comps([(1, 3.0), (4, 4.0)]);
        let w = RealVector::from_comps([(1, 1.0), (2, 7.0)]);
        assert_eq!(v.dot(&w), 3.0);
        assert_eq!(v.norm(), 5.0);
    }

    #[test]
    fn zero_components_dropped() {
        let mut v = RealVector::basis(2);
        v.add_comp(2, -1.0);
        assert!(v.is_zero());
    }

    #[test]
    fn standard_basis_detection() {
        assert_eq!(RealVector::basis(3).as_standard_basis(1e-12), Some(3));
        let v = RealVector::from_comps([(1, 0.6), (2, 0.8)]);
        assert_eq!(v.as_standard_basis(1e-12), None);
    }
}
