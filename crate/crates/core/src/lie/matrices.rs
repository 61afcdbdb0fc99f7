use alloc::vec::Vec;

use super::algebra::{Combination, LieAlgebra};
use crate::ck_matrix::{generator_matrices, mat_commutator, BasisDecomposer, Family, OmegaVector};
use crate::error::Result;

/// Structure constants read off the matrix realization: every pairwise
/// commutator of the generator matrices, decomposed in the basis.
///
/// Fails with [`Error::NotInSpan`](crate::Error::NotInSpan) if the matrices do
/// not close under commutation.
pub fn from_matrices(family: Family, omega: &OmegaVector) -> Result<LieAlgebra> {
    let gens = generator_matrices(family, omega)?;
    let (basis, mats): (Vec<_>, Vec<_>) = gens.into_iter().unzip();
    let decomposer = BasisDecomposer::new(&mats)?;
    let mut brackets = Vec::new();
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            let comm = mat_commutator(&mats[i], &mats[j])?;
            if comm.is_zero() {
                continue;
            }
            let combo: Combination = decomposer
                .decompose(&comm)?
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            brackets.push(((i, j), combo));
        }
    }
    LieAlgebra::from_brackets(family, omega.clone(), basis, brackets)
}
