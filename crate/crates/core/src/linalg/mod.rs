//! Scalar and matrix arithmetic: complex matrices, rational angles, the
//! Hermitian eigensolver, matrix exponentials and subspace ranks.

mod angle;
mod eigen;
mod expm;
mod matrix;
mod partition;
mod rank;

pub use angle::{approximate_rational, RationalAngle, Trig};
pub use eigen::{hermitian_eigen, HermitianEigen};
pub use expm::{exp_generic, exp_structured, ClosedForm, StructuredExp};
pub use matrix::{commutator, ComplexMatrix};
pub use rank::{orthonormal_basis, residual_from_span, subspace_rank};

/// Numeric tolerances.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    /// Membership, Hermiticity, rank and closure tests.
    pub eps: f64,
    /// Clustering of ad(ξ) eigenvalues into frequencies.
    pub bucket: f64,
}

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;
    pub const DEFAULT_BUCKET: f64 = 1e-6;

    pub fn with_eps(eps: f64) -> Self {
        Self { eps, ..Self::default() }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { eps: Self::DEFAULT_EPS, bucket: Self::DEFAULT_BUCKET }
    }
}
