//! Exact scalars over Q(i) and dense linear algebra on top of them.

pub mod gaussian;
pub mod hermitian;
pub mod matrix;

pub use gaussian::{parse_rational, rat, rat_int, GaussianRational, Rational};
pub use hermitian::{descartes_inertia, HermitianMatrix, Signature};
pub use matrix::CMatrix;
