//! Exact matrices over the rationals and integers.
//!
//! Everything here is arbitrary precision. Symmetric matrices carry
//! [`BigRational`] entries (integer matrices are the special case where
//! every denominator is 1), while change-of-basis matrices are plain
//! [`BigInt`] grids.

mod det;
mod inertia;
mod int_matrix;
mod primitive;
mod sym_matrix;

pub use det::{determinant, int_determinant};
pub use inertia::{inertia, Inertia};
pub use int_matrix::IntMatrix;
pub use primitive::{extend_primitive, primitive_scale};
pub use sym_matrix::SymMatrix;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use thiserror::Error;

/// Shorthand for an exact rational.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: BigInt },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: String, found: String },
    #[error("vector is not primitive (gcd of entries is {gcd})")]
    NotPrimitive { gcd: BigInt },
    #[error("vector is zero")]
    ZeroVector,
    #[error("matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRows { row: usize, expected: usize, found: usize },
}

/// Applies the congruence `G -> P G Pᵀ`.
///
/// `P` must be square of the same size as `G` with determinant ±1.
pub fn congruence(g: &SymMatrix, p: &IntMatrix) -> Result<SymMatrix, LinalgError> {
    if p.rows() != p.cols() || p.rows() != g.size() {
        return Err(LinalgError::SizeMismatch {
            expected: format!("{0}x{0}", g.size()),
            found: format!("{}x{}", p.rows(), p.cols()),
        });
    }
    let det = int_determinant(p);
    if !is_unit(&det) {
        return Err(LinalgError::NotUnimodular { det });
    }
    Ok(g.transform(p))
}

/// True iff `p` is square with determinant ±1. The 0×0 matrix qualifies.
pub fn is_unimodular(p: &IntMatrix) -> bool {
    p.rows() == p.cols() && is_unit(&int_determinant(p))
}

pub(crate) fn is_unit(x: &BigInt) -> bool {
    use num_traits::{One, Signed};
    x.abs().is_one()
}
