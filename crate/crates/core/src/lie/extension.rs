use alloc::collections::BTreeMap;

use super::algebra::{accumulate, finish, Combination, LieAlgebra};
use crate::cohomology::TwoCochain;
use crate::error::{Error, Result};
use crate::scalars::Rational;

/// The algebra on `{X_1, …, X_r, Ξ}` with `[X_i, X_j] = Σ C_ij^k X_k + ξ_ij Ξ`
/// and `Ξ` central. `Ξ` is implicit and never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedAlgebra {
    base: LieAlgebra,
    xi: TwoCochain,
}

/// An element `Σ c_k X_k + z Ξ`.
pub type ExtendedElement = (Combination, Rational);

impl ExtendedAlgebra {
    pub fn base(&self) -> &LieAlgebra {
        &self.base
    }

    pub fn cocycle(&self) -> &TwoCochain {
        &self.xi
    }

    /// `[X_i, X_j]` including its central component.
    pub fn bracket(&self, i: usize, j: usize) -> ExtendedElement {
        (self.base.bracket(i, j), self.xi.get(i, j))
    }

    /// `[x, X_l]` for an element `x`; the central part of `x` drops out.
    fn bracket_with(&self, x: &ExtendedElement, l: usize) -> ExtendedElement {
        let mut acc = BTreeMap::new();
        let mut central = Rational::zero();
        for (k, c) in &x.0 {
            let (part, z) = self.bracket(*k, l);
            accumulate(&mut acc, &part, c);
            central += &(c * &z);
        }
        (finish(acc), central)
    }

    /// Jacobi identity on the extended algebra, including the triples
    /// involving `Ξ` (which hold trivially since `Ξ` is central).
    pub fn verify_jacobi(&self) -> bool {
        let r = self.base.dim();
        for i in 0..r {
            for j in i + 1..r {
                for l in j + 1..r {
                    let mut acc = BTreeMap::new();
                    let mut central = Rational::zero();
                    for (a, b, c) in [(i, j, l), (j, l, i), (l, i, j)] {
                        let (part, z) = self.bracket_with(&self.bracket(a, b), c);
                        accumulate(&mut acc, &part, &Rational::one());
                        central += &z;
                    }
                    if !finish(acc).is_empty() || !central.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

pub fn build_extended(base: &LieAlgebra, xi: TwoCochain) -> Result<ExtendedAlgebra> {
    if xi.dim() != base.dim() {
        return Err(Error::DimensionMismatch { expected: base.dim(), found: xi.dim() });
    }
    Ok(ExtendedAlgebra { base: base.clone(), xi })
}
