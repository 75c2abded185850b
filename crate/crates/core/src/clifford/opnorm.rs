//! The C*-operator norm of multiplication, computed as the largest singular
//! value of the left-multiplication matrix on the finite subalgebra spanned
//! by the element's own indices. A finite-dimensional Clifford algebra acts
//! faithfully and isometrically on its tracial inner-product space, so the
//! value does not depend on which coordinate subalgebra hosts it.

use std::collections::BTreeSet;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::monomial::Monomial;
use super::multivector::Multivector;

/// All monomials over `indices`, in a fixed deterministic order.
pub fn monomials_over(indices: &BTreeSet<u32>) -> Vec<Monomial> {
    let ix: Vec<u32> = indices.iter().copied().collect();
    let n = ix.len();
    assert!(n < 63, "coordinate dimension too large to enumerate");
    (0u64..(1u64 << n))
        .map(|mask| {
            Monomial::from_set(
                ix.iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &i)| i),
            )
        })
        .collect()
}

/// The matrix of `c -> a c` on the monomial basis of the subalgebra over
/// `indices` (which must cover the support of `a`).
pub fn left_mul_matrix(a: &Multivector, indices: &BTreeSet<u32>) -> DMatrix<Complex64> {
    let basis = monomials_over(indices);
    let dim = basis.len();
    let col_of = |m: &Monomial| basis.binary_search(m).expect("closed under products");
    let mut mat = DMatrix::<Complex64>::zeros(dim, dim);
    for (j, m) in basis.iter().enumerate() {
        let col = a.mul(&Multivector::blade(m.clone(), Complex64::new(1.0, 0.0)));
        for (t, &z) in col.terms() {
            mat[(col_of(t), j)] += z;
        }
    }
    mat
}

/// Operator norm of multiplication by `a`, computed on the subalgebra over
/// the union of `a`'s own indices and `extra`.
pub fn op_norm_on(a: &Multivector, extra: &BTreeSet<u32>) -> f64 {
    let mut indices = a.index_support();
    indices.extend(extra.iter().copied());
    if indices.is_empty() {
        // multiplication by a scalar
        return a.trace().norm();
    }
    let mat = left_mul_matrix(a, &indices);
    let svd = mat.svd(false, false);
    svd.singular_values.iter().cloned().fold(0.0, f64::max)
}

/// Operator norm `|||a|||` of left (equivalently right) multiplication.
pub fn op_norm(a: &Multivector) -> f64 {
    op_norm_on(a, &BTreeSet::new())
}
