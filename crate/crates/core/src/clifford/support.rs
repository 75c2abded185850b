//! The smallest subspace `M_a` whose subalgebra contains a given element.
//!
//! The computation rests on twisted duality: a vector `w` satisfies
//! `w a = gamma(a) w` exactly when `a` lies in the subalgebra generated by
//! the orthogonal complement of `w`. Collecting the linear conditions
//! `x a - gamma(a) x = 0` over `x` in the coordinate span of `a`'s indices
//! gives a real nullspace whose orthogonal complement is `M_a`.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::multivector::Multivector;
use super::subspace::Subspace;
use super::vector::RealVector;

/// Rank tolerance for the nullspace split, relative to the largest singular
/// value.
const RANK_TOL: f64 = 1e-10;

/// The residual `w a - gamma(a) w` whose vanishing witnesses that `a` lives
/// over the complement of `w`.
pub fn twisted_residual(w: &RealVector, a: &Multivector) -> Multivector {
    let wm = Multivector::from_vector(w);
    &wm.mul(a) - &a.gamma().mul(&wm)
}

/// The unique smallest subspace `M` with `a` in `C(M)`.
pub fn support_subspace(a: &Multivector) -> Subspace {
    let indices: Vec<u32> = a.index_support().into_iter().collect();
    if indices.is_empty() {
        return Subspace::zero();
    }

    // Assemble the real linear system over x in the coordinate span: each
    // column i holds the coefficients of e_i a - gamma(a) e_i.
    let mut row_of: BTreeMap<super::monomial::Monomial, usize> = BTreeMap::new();
    let mut cols: Vec<Vec<(usize, Complex64)>> = Vec::with_capacity(indices.len());
    for &i in &indices {
        let d = twisted_residual(&RealVector::basis(i), a);
        let mut col = Vec::with_capacity(d.num_terms());
        for (m, &z) in d.terms() {
            let next = row_of.len();
            let r = *row_of.entry(m.clone()).or_insert(next);
            col.push((r, z));
        }
        cols.push(col);
    }

    let nrows = 2 * row_of.len().max(1);
    let mut mat = DMatrix::<f64>::zeros(nrows, indices.len());
    for (j, col) in cols.iter().enumerate() {
        for &(r, z) in col {
            mat[(2 * r, j)] = z.re;
            mat[(2 * r + 1, j)] = z.im;
        }
    }

    // Row space of the system = complement of the twisted commutant = M_a.
    let svd = mat.svd(false, true);
    let v_t = svd.v_t.expect("requested right singular vectors");
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let cutoff = RANK_TOL * smax.max(1.0);
    let mut basis = Vec::new();
    for (k, &s) in svd.singular_values.iter().enumerate() {
        if s > cutoff {
            let row = v_t.row(k);
            basis.push(RealVector::from_comps(
                indices.iter().enumerate().map(|(j, &i)| (i, row[j])),
            ));
        }
    }
    Subspace::span(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::monomial::Monomial;
    use super::super::subspace::project;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn e(ix: &[u32]) -> Multivector {
        Multivector::blade(Monomial::new(ix.to_vec()).unwrap(), c(1.0, 0.0))
    }

    #[test]
    fn scalars_need_no_directions() {
        assert_eq!(support_subspace(&Multivector::unit()).dim(), 0);
        assert_eq!(support_subspace(&Multivector::zero()).dim(), 0);
    }

    #[test]
    fn complex_vector_needs_the_plane() {
        // e1 + i e2 is not supported on any real line
        let a = &e(&[1]) + &e(&[2]).scale(c(0.0, 1.0));
        let m = support_subspace(&a);
        assert_eq!(m.dim(), 2);
        assert!(project(&a, &m).approx_eq(&a, 1e-10));
    }

    #[test]
    fn real_vector_needs_only_its_line() {
        let t = std::f64::consts::PI / 6.0;
        let v = RealVector::from_comps([(1, t.cos()), (2, t.sin())]);
        let a = Multivector::from_vector(&v);
        let m = support_subspace(&a);
        assert_eq!(m.dim(), 1);
        let u = &m.onb()[0];
        // the line is span(v), up to overall sign
        assert!((u.dot(&v).abs() - 1.0).abs() < 1e-10);
        assert!(project(&a, &m).approx_eq(&a, 1e-10));
    }

    #[test]
    fn element_lies_in_its_support_subalgebra() {
        let a = &(&e(&[1, 2]).scale(c(0.5, 1.0)) + &e(&[3])) + &Multivector::unit();
        let m = support_subspace(&a);
        assert!(project(&a, &m).approx_eq(&a, 1e-10));
        assert_eq!(m.dim(), 3);
    }

    #[test]
    fn twisted_residual_detects_membership() {
        // a = e1 e2 lives over span(e1, e2): residual vanishes for w = e3
        let a = e(&[1, 2]);
        assert!(twisted_residual(&RealVector::basis(3), &a).is_zero());
        assert!(!twisted_residual(&RealVector::basis(1), &a).is_zero());
    }
}
