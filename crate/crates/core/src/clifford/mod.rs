//! Exact sparse arithmetic in the Clifford algebra over a fixed countable
//! orthonormal basis: monomial products with integer signs, involution and
//! grading, the tracial state and its inner product, operator norms,
//! minimal support subspaces, and orthogonal projectors.

pub mod monomial;
pub mod multivector;
pub mod opnorm;
pub mod subspace;
pub mod support;
pub mod vector;

pub use monomial::{mono_mul, Monomial, MonomialError};
pub use multivector::{inner, inner_via_trace, Multivector};
pub use opnorm::{left_mul_matrix, monomials_over, op_norm, op_norm_on};
pub use subspace::{orthonormalize, project, rebase, Subspace, GS_DROP_TOL, ONB_TOL};
pub use support::{support_subspace, twisted_residual};
pub use vector::RealVector;
