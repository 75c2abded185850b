//! Finite-dimensional real subspaces of `V` and the orthogonal projector
//! from the algebra onto the subalgebra they generate.
//!
//! A subspace is held as its original spanning list plus a cached
//! orthonormal basis. Coordinate subspaces (spans of standard basis vectors)
//! are flagged so that projection and approximants can use plain coefficient
//! restriction instead of a change of generators.

use std::collections::BTreeSet;

use num_complex::Complex64;

use super::monomial::Monomial;
use super::multivector::Multivector;
use super::vector::RealVector;

/// Gram-Schmidt drop tolerance: vectors whose residual after
/// re-orthogonalization is below this are treated as dependent.
pub const GS_DROP_TOL: f64 = 1e-10;

/// Orthonormality tolerance the cached basis is validated against.
pub const ONB_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Subspace {
    spanning: Vec<RealVector>,
    onb: Vec<RealVector>,
    coordinate: Option<BTreeSet<u32>>,
}

impl Subspace {
    /// The zero subspace; `C({0})` is the scalars.
    pub fn zero() -> Self {
        Subspace::default()
    }

    /// The span of the given vectors (modified Gram-Schmidt with a
    /// re-orthogonalization pass; dependent vectors are dropped).
    pub fn span(vectors: impl IntoIterator<Item = RealVector>) -> Self {
        let spanning: Vec<RealVector> = vectors.into_iter().collect();
        let mut onb: Vec<RealVector> = Vec::new();
        for v in &spanning {
            let mut w = v.clone();
            // two passes of projection-removal for numerical stability
            for _ in 0..2 {
                for u in &onb {
                    let c = w.dot(u);
                    w = w.sub(&u.scale(c));
                }
            }
            let n = w.norm();
            if n >= GS_DROP_TOL {
                onb.push(w.scale(1.0 / n));
            }
        }
        let coordinate = detect_coordinate(&onb);
        Subspace { spanning, onb, coordinate }
    }

    /// The span of standard basis vectors `{e_i : i in indices}`.
    pub fn coordinate(indices: impl IntoIterator<Item = u32>) -> Self {
        let set: BTreeSet<u32> = indices.into_iter().collect();
        assert!(!set.contains(&0), "basis indices start at 1");
        let onb: Vec<RealVector> = set.iter().map(|&i| RealVector::basis(i)).collect();
        Subspace {
            spanning: onb.clone(),
            onb,
            coordinate: Some(set),
        }
    }

    /// The coordinate prefix `span{e_1, ..., e_k}`.
    pub fn prefix(k: u32) -> Self {
        Subspace::coordinate(1..=k)
    }

    pub fn dim(&self) -> usize {
        self.onb.len()
    }

    pub fn onb(&self) -> &[RealVector] {
        &self.onb
    }

    pub fn spanning(&self) -> &[RealVector] {
        &self.spanning
    }

    /// The index set when this is a coordinate subspace.
    pub fn coordinate_indices(&self) -> Option<&BTreeSet<u32>> {
        self.coordinate.as_ref()
    }

    /// Union of basis indices touched by the orthonormal basis.
    pub fn index_support(&self) -> BTreeSet<u32> {
        let mut set = BTreeSet::new();
        for u in &self.onb {
            set.extend(u.indices());
        }
        set
    }

    /// Orthogonal projection of a vector onto the subspace.
    pub fn project_vector(&self, v: &RealVector) -> RealVector {
        let mut out = RealVector::zero();
        for u in &self.onb {
            out = out.add(&u.scale(v.dot(u)));
        }
        out
    }

    /// True when `other` is contained in `self` (up to `tol` per basis
    /// vector of `other`).
    pub fn contains_subspace(&self, other: &Subspace, tol: f64) -> bool {
        other
            .onb
            .iter()
            .all(|u| u.sub(&self.project_vector(u)).norm() <= tol)
    }
}

fn detect_coordinate(onb: &[RealVector]) -> Option<BTreeSet<u32>> {
    let mut set = BTreeSet::new();
    for u in onb {
        set.insert(u.as_standard_basis(ONB_TOL)?);
    }
    Some(set)
}

/// Orthonormalizes a list of vectors into a subspace. Alias of
/// [`Subspace::span`] under the operation's own name.
pub fn orthonormalize(vectors: impl IntoIterator<Item = RealVector>) -> Subspace {
    Subspace::span(vectors)
}

/// Expresses `a` in the algebra generated by the orthonormal vectors `onb`
/// (which must span every index `a` touches). Monomial indices of the result
/// refer to positions `1..=onb.len()` in the list.
pub fn rebase(a: &Multivector, onb: &[RealVector]) -> Multivector {
    let mut out = Multivector::zero();
    for (m, &c) in a.terms() {
        let mut prod = Multivector::scalar(c);
        for &i in m.indices() {
            // e_i = sum_j (e_i | u_j) u_j, with u_j orthonormal generators
            let mut gen = Multivector::zero();
            for (j, u) in onb.iter().enumerate() {
                let x = u.get(i);
                if x != 0.0 {
                    gen.add_term(Monomial::basis(j as u32 + 1), Complex64::new(x, 0.0));
                }
            }
            prod = prod.mul(&gen);
        }
        out = &out + &prod;
    }
    out
}

/// Inverse of [`rebase`]: maps position-indexed monomials back to coordinate
/// monomials by substituting each generator with its coordinate expansion.
pub fn unrebase(a: &Multivector, onb: &[RealVector]) -> Multivector {
    let mut out = Multivector::zero();
    for (m, &c) in a.terms() {
        let mut prod = Multivector::scalar(c);
        for &j in m.indices() {
            let u = &onb[(j - 1) as usize];
            prod = prod.mul(&Multivector::from_vector(u));
        }
        out = &out + &prod;
    }
    out
}

/// Extends the orthonormal basis of `m` to an orthonormal basis of the
/// coordinate space spanned by `indices` (which must cover `m`'s support).
/// The first `m.dim()` vectors are `m`'s basis.
pub fn extend_basis(m: &Subspace, indices: &BTreeSet<u32>) -> Vec<RealVector> {
    let mut onb: Vec<RealVector> = m.onb().to_vec();
    for &i in indices {
        let mut w = RealVector::basis(i);
        for _ in 0..2 {
            for u in &onb {
                let c = w.dot(u);
                w = w.sub(&u.scale(c));
            }
        }
        let n = w.norm();
        if n >= GS_DROP_TOL {
            onb.push(w.scale(1.0 / n));
        }
    }
    onb
}

/// Orthogonal projection of `a` from the algebra onto the subalgebra
/// generated by `m`, along its orthogonal complement.
///
/// For a coordinate subspace this is coefficient restriction; in general the
/// element is rewritten in an orthonormal basis extending `m`'s, truncated
/// to monomials over `m`'s generators, and mapped back to coordinates.
pub fn project(a: &Multivector, m: &Subspace) -> Multivector {
    if let Some(set) = m.coordinate_indices() {
        let keep: Vec<u32> = set.iter().copied().collect();
        return Multivector::from_terms(
            a.terms()
                .filter(|(mono, _)| mono.supported_on(&keep))
                .map(|(mono, &c)| (mono.clone(), c)),
        );
    }
    let mut indices = a.index_support();
    indices.extend(m.index_support());
    if indices.is_empty() {
        return Multivector::scalar(a.trace());
    }
    let full = extend_basis(m, &indices);
    let rebased = rebase(a, &full);
    let d = m.dim() as u32;
    let kept = Multivector::from_terms(
        rebased
            .terms()
            .filter(|(mono, _)| mono.max_index().map_or(true, |x| x <= d))
            .map(|(mono, &c)| (mono.clone(), c)),
    );
    unrebase(&kept, &full[..m.dim()])
}
