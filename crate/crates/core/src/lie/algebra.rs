use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::ck_matrix::{Family, GeneratorLabel, OmegaVector};
use crate::error::{Error, Result};
use crate::scalars::Rational;

/// A sparse linear combination of basis generators: `(index, coefficient)`
/// pairs sorted by index, with no zero coefficients.
pub type Combination = Vec<(usize, Rational)>;

/// Accumulates `coeff * combo` into `acc`.
pub(crate) fn accumulate(acc: &mut BTreeMap<usize, Rational>, combo: &[(usize, Rational)], coeff: &Rational) {
    for (k, c) in combo {
        let slot = acc.entry(*k).or_insert_with(Rational::zero);
        *slot += &(c * coeff);
    }
}

pub(crate) fn finish(acc: BTreeMap<usize, Rational>) -> Combination {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn negate(combo: &[(usize, Rational)]) -> Combination {
    combo.iter().map(|(k, c)| (*k, -c)).collect()
}

/// A finite-dimensional real Lie algebra given by exact structure constants
/// `C_ij^k` on a labeled basis.
///
/// Only brackets with `i < j` are stored; `[X_j, X_i] = -[X_i, X_j]` is
/// implied and `[X_i, X_i] = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    family: Family,
    omega: OmegaVector,
    basis: Vec<GeneratorLabel>,
    index: BTreeMap<GeneratorLabel, usize>,
    constants: BTreeMap<(usize, usize), Combination>,
}

impl LieAlgebra {
    /// Assembles an algebra from raw brackets. Keys may come in either order
    /// and zero coefficients are dropped; `(i, i)` keys must be zero.
    pub fn from_brackets(
        family: Family,
        omega: OmegaVector,
        basis: Vec<GeneratorLabel>,
        brackets: impl IntoIterator<Item = ((usize, usize), Combination)>,
    ) -> Result<Self> {
        let r = basis.len();
        let index = basis.iter().enumerate().map(|(i, l)| (*l, i)).collect::<BTreeMap<_, _>>();
        if index.len() != r {
            return Err(Error::DimensionMismatch { expected: r, found: index.len() });
        }
        let mut alg = LieAlgebra { family, omega, basis, index, constants: BTreeMap::new() };
        for ((i, j), combo) in brackets {
            alg.set_bracket(i, j, combo)?;
        }
        Ok(alg)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn omega(&self) -> &OmegaVector {
        &self.omega
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[GeneratorLabel] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> GeneratorLabel {
        self.basis[i]
    }

    pub fn index_of(&self, label: &GeneratorLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Overwrites `[X_i, X_j]`.
    pub fn set_bracket(&mut self, i: usize, j: usize, combo: Combination) -> Result<()> {
        let r = self.dim();
        let max = r.saturating_sub(1);
        for index in [i, j].into_iter().chain(combo.iter().map(|(k, _)| *k)) {
            if index >= r {
                return Err(Error::IndexOutOfRange { index, max });
            }
        }
        let mut acc = BTreeMap::new();
        accumulate(&mut acc, &combo, &Rational::one());
        let combo = finish(acc);
        if i == j {
            return if combo.is_empty() {
                Ok(())
            } else {
                Err(Error::IndexOutOfRange { index: j, max })
            };
        }
        let (key, combo) = if i < j { ((i, j), combo) } else { ((j, i), negate(&combo)) };
        if combo.is_empty() {
            self.constants.remove(&key);
        } else {
            self.constants.insert(key, combo);
        }
        Ok(())
    }

    /// `[X_i, X_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> Combination {
        use core::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Vec::new(),
            Less => self.constants.get(&(i, j)).cloned().unwrap_or_default(),
            Greater => self.constants.get(&(j, i)).map(|c| negate(c)).unwrap_or_default(),
        }
    }

    /// `C_ij^k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.bracket(i, j)
            .into_iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c)
            .unwrap_or_default()
    }

    /// Nonzero brackets `(i, j) -> [X_i, X_j]` with `i < j`, in key order.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (&(usize, usize), &Combination)> {
        self.constants.iter()
    }

    /// Bracket of two arbitrary elements given as sparse combinations.
    pub fn bracket_elements(&self, x: &[(usize, Rational)], y: &[(usize, Rational)]) -> Combination {
        let mut acc = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                if i == j {
                    continue;
                }
                accumulate(&mut acc, &self.bracket(*i, *j), &(a * b));
            }
        }
        finish(acc)
    }

    /// The same algebra on the reordered basis `new[p] = old[perm[p]]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let r = self.dim();
        let mut inverse = alloc::vec![usize::MAX; r];
        if perm.len() != r {
            return Err(Error::DimensionMismatch { expected: r, found: perm.len() });
        }
        for (p, &old) in perm.iter().enumerate() {
            if old >= r || inverse[old] != usize::MAX {
                return Err(Error::IndexOutOfRange { index: old, max: r.saturating_sub(1) });
            }
            inverse[old] = p;
        }
        let basis = perm.iter().map(|&old| self.basis[old]).collect();
        let brackets = self.constants.iter().map(|(&(i, j), combo)| {
            let mapped = combo.iter().map(|(k, c)| (inverse[*k], c.clone())).collect::<Vec<_>>();
            ((inverse[i], inverse[j]), sort_combination(mapped))
        });
        LieAlgebra::from_brackets(self.family, self.omega.clone(), basis, brackets)
    }
}

fn sort_combination(mut combo: Combination) -> Combination {
    combo.sort_by_key(|(k, _)| *k);
    combo
}

/// The Jacobiator `[[X_i,X_j],X_l] + [[X_j,X_l],X_i] + [[X_l,X_i],X_j]`.
pub fn jacobiator(alg: &LieAlgebra, i: usize, j: usize, l: usize) -> Combination {
    let unit = |k: usize| [(k, Rational::one())];
    let mut acc = BTreeMap::new();
    for (a, b, c) in [(i, j, l), (j, l, i), (l, i, j)] {
        let inner = alg.bracket(a, b);
        accumulate(&mut acc, &alg.bracket_elements(&inner, &unit(c)), &Rational::one());
    }
    finish(acc)
}

/// Exact check of the Jacobi identity over every triple `i < j < l`.
pub fn verify_jacobi(alg: &LieAlgebra) -> bool {
    let r = alg.dim();
    (0..r).all(|i| (i + 1..r).all(|j| (j + 1..r).all(|l| jacobiator(alg, i, j, l).is_empty())))
}
