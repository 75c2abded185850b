//! Complex Clifford algebra over a countable orthonormal basis, together
//! with the space of antilinear functionals on it: finite-dimensional
//! approximants, certified norms and tail bounds for the bounded class, a
//! limit-defined partial product, and a seeded property harness that replays
//! the algebraic laws as executable checks.

pub mod antidual;
pub mod clifford;
pub mod format;
pub mod harness;
pub mod product;

pub use num_complex::Complex64;

pub use antidual::{Antifunctional, KindTag, NormOptions, NormVerdict, PythagorasCheck};
pub use clifford::{
    inner, mono_mul, op_norm, orthonormalize, project, support_subspace, Monomial, Multivector,
    RealVector, Subspace,
};
pub use product::{
    hilbert_inner, in_domain, product, product_at, DomainVerdict, EvalOptions, ProductError,
    ProductEvaluation, Strategy, Verdict,
};

/// Default comparison tolerance for floating checks.
pub const DEFAULT_TOL: f64 = 1e-9;
