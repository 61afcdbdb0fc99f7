//! Structure constants of the CK algebras: closed-form builders, the matrix
//! realization, Jacobi verification, contraction and central extensions.

mod algebra;
mod builders;
mod extension;
mod matrices;

pub use algebra::{jacobiator, verify_jacobi, Combination, LieAlgebra};
pub use builders::{build_family, build_so, build_sq, build_su, build_u, closed_form_bracket, EpsTensor};
pub use extension::{build_extended, ExtendedAlgebra};
pub use matrices::from_matrices;

use crate::ck_matrix::OmegaVector;
use crate::error::Result;

/// Inönü–Wigner contraction: the listed coefficients (1-based) set to zero.
pub fn contract(omega: &OmegaVector, zero_set: &[usize]) -> Result<OmegaVector> {
    omega.contract(zero_set)
}
