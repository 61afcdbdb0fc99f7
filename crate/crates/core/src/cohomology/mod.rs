//! Central extensions of a Lie algebra: 2-cocycles, 2-coboundaries and
//! `H²(g, ℝ)`, all by exact elimination.
//!
//! Unknowns are the coefficients `ξ_ij`, `i < j`. Every triple `i < j < l`
//! contributes the equation
//!
//! ```text
//! Σ_k C_ij^k ξ_kl + C_jl^k ξ_ki + C_li^k ξ_kj = 0
//! ```
//!
//! whose solution space is `Z²`. The coboundaries `(δμ)_ij = Σ_k C_ij^k μ_k`
//! span `B² ⊆ Z²`.

mod cochain;

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

pub use cochain::{pair_index, pair_table, OneCochain, TwoCochain};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Echelon, SparseRow};
use crate::scalars::Rational;

/// The linear conditions a 2-cochain must satisfy to define a central
/// extension, one row per triple with a nonzero equation.
#[derive(Clone, Debug)]
pub struct CocycleSystem {
    dim: usize,
    rows: Vec<SparseRow>,
    triples: Vec<(usize, usize, usize)>,
}

impl CocycleSystem {
    /// Dimension `r` of the algebra.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of unknowns `r(r-1)/2`.
    pub fn unknowns(&self) -> usize {
        self.dim * self.dim.saturating_sub(1) / 2
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    /// The triple `(i, j, l)` each row came from.
    pub fn triples(&self) -> &[(usize, usize, usize)] {
        &self.triples
    }

    /// The first triple whose equation `xi` violates.
    pub fn first_violation(&self, xi: &TwoCochain) -> Option<(usize, usize, usize)> {
        let coords: BTreeMap<usize, Rational> = xi.to_coordinates().into_iter().collect();
        self.rows
            .iter()
            .zip(&self.triples)
            .find(|(row, _)| {
                let value: Rational = row
                    .iter()
                    .filter_map(|(c, v)| coords.get(c).map(|x| v * x))
                    .sum();
                !value.is_zero()
            })
            .map(|(_, t)| *t)
    }

    pub fn is_satisfied_by(&self, xi: &TwoCochain) -> bool {
        self.first_violation(xi).is_none()
    }
}

/// Assembles the cocycle equations of `alg`.
pub fn cocycle_equations(alg: &LieAlgebra) -> CocycleSystem {
    let r = alg.dim();
    let mut rows = Vec::new();
    let mut triples = Vec::new();
    // ξ_kx as a signed unknown
    let unknown = |k: usize, x: usize| -> Option<(usize, bool)> {
        use core::cmp::Ordering::*;
        match k.cmp(&x) {
            Equal => None,
            Less => Some((pair_index(k, x, r), false)),
            Greater => Some((pair_index(x, k, r), true)),
        }
    };
    for i in 0..r {
        for j in i + 1..r {
            let bij = alg.bracket(i, j);
            for l in j + 1..r {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (combo, x) in [(&bij, l), (&alg.bracket(j, l), i), (&alg.bracket(l, i), j)] {
                    for (k, c) in combo.iter() {
                        if let Some((col, negate)) = unknown(*k, x) {
                            let slot = acc.entry(col).or_insert_with(Rational::zero);
                            if negate {
                                *slot -= c;
                            } else {
                                *slot += c;
                            }
                        }
                    }
                }
                let row: SparseRow = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if !row.is_empty() {
                    rows.push(row);
                    triples.push((i, j, l));
                }
            }
        }
    }
    CocycleSystem { dim: r, rows, triples }
}

/// `(δμ)_ij = Σ_k C_ij^k μ_k`.
pub fn coboundary(mu: &OneCochain, alg: &LieAlgebra) -> Result<TwoCochain> {
    if mu.dim() != alg.dim() {
        return Err(Error::DimensionMismatch { expected: alg.dim(), found: mu.dim() });
    }
    let mut out = TwoCochain::zero(alg.dim());
    for (&(i, j), combo) in alg.nonzero_brackets() {
        let v: Rational = combo.iter().map(|(k, c)| c * mu.get(*k)).sum();
        out.set(i, j, v)?;
    }
    Ok(out)
}

/// Dimensions and canonical bases of `Z²`, `B²` and a complement of `B²` in
/// `Z²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyResult {
    pub dim_z2: usize,
    pub dim_b2: usize,
    pub dim_h2: usize,
    /// Reduced row echelon basis of `Z²`.
    pub z2_basis: Vec<TwoCochain>,
    /// Reduced row echelon basis of `B²`.
    pub b2_basis: Vec<TwoCochain>,
    /// The `Z²` echelon rows whose pivots are not `B²` pivots; their classes
    /// form a basis of `H²`.
    pub h2_representatives: Vec<TwoCochain>,
}

/// Cocycle system and coboundary space of one algebra, reusable across
/// triviality queries.
#[derive(Clone, Debug)]
pub struct Cohomology<'a> {
    algebra: &'a LieAlgebra,
    system: CocycleSystem,
    coboundaries: Echelon,
}

impl<'a> Cohomology<'a> {
    pub fn new(algebra: &'a LieAlgebra) -> Self {
        let r = algebra.dim();
        let system = cocycle_equations(algebra);
        let mut coboundaries = Echelon::new(system.unknowns());
        for k in 0..r {
            let d = coboundary(&OneCochain::unit(r, k), algebra).expect("matching dimension");
            coboundaries.insert(&d.to_coordinates());
        }
        Cohomology { algebra, system, coboundaries }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        self.algebra
    }

    pub fn system(&self) -> &CocycleSystem {
        &self.system
    }

    fn check_dim(&self, xi: &TwoCochain) -> Result<()> {
        if xi.dim() != self.algebra.dim() {
            return Err(Error::DimensionMismatch { expected: self.algebra.dim(), found: xi.dim() });
        }
        Ok(())
    }

    pub fn is_cocycle(&self, xi: &TwoCochain) -> Result<bool> {
        self.check_dim(xi)?;
        Ok(self.system.is_satisfied_by(xi))
    }

    pub fn is_coboundary(&self, xi: &TwoCochain) -> Result<bool> {
        self.check_dim(xi)?;
        Ok(self.coboundaries.contains(&xi.to_coordinates()))
    }

    /// Whether the extension defined by `xi` is trivial. Errors with
    /// [`Error::NotCocycle`] if `xi` does not define an extension at all.
    pub fn is_trivial(&self, xi: &TwoCochain) -> Result<bool> {
        if !self.is_cocycle(xi)? {
            return Err(Error::NotCocycle);
        }
        self.is_coboundary(xi)
    }

    pub fn dim_b2(&self) -> usize {
        self.coboundaries.rank()
    }

    /// Dimension of the span of the classes of `xs` in `Z²/B²`.
    pub fn class_rank(&self, xs: &[TwoCochain]) -> Result<usize> {
        let mut ech = self.coboundaries.clone();
        let mut rank = 0;
        for xi in xs {
            self.check_dim(xi)?;
            if ech.insert(&xi.to_coordinates()) {
                rank += 1;
            }
        }
        Ok(rank)
    }

    /// Full solve: `Z²` from the nullspace of the cocycle system.
    pub fn compute(&self) -> CohomologyResult {
        let r = self.algebra.dim();
        let m = self.system.unknowns();
        let mut eqs = Echelon::new(m);
        for row in self.system.rows() {
            eqs.insert(row);
        }
        let mut z2 = Echelon::new(m);
        for v in eqs.nullspace() {
            z2.insert(&v);
        }
        let to_cochain = |row: &SparseRow| TwoCochain::from_coordinates(r, row).expect("in range");
        let z2_rows = z2.reduced_basis();
        let b2_pivots: BTreeSet<usize> = self.coboundaries.pivot_columns().into_iter().collect();
        let h2_representatives = z2_rows
            .iter()
            .filter(|row| !b2_pivots.contains(&row[0].0))
            .map(to_cochain)
            .collect::<Vec<_>>();
        let dim_z2 = z2_rows.len();
        let dim_b2 = self.coboundaries.rank();
        CohomologyResult {
            dim_z2,
            dim_b2,
            dim_h2: dim_z2 - dim_b2,
            z2_basis: z2_rows.iter().map(to_cochain).collect(),
            b2_basis: self.coboundaries.reduced_basis().iter().map(to_cochain).collect(),
            h2_representatives,
        }
    }
}

/// Basis of the 2-cocycles of `alg`, in reduced echelon form.
pub fn cocycle_space(alg: &LieAlgebra) -> Vec<TwoCochain> {
    Cohomology::new(alg).compute().z2_basis
}

/// Basis of the 2-coboundaries of `alg`, in reduced echelon form.
pub fn coboundary_space(alg: &LieAlgebra) -> Vec<TwoCochain> {
    let r = alg.dim();
    Cohomology::new(alg)
        .coboundaries
        .reduced_basis()
        .iter()
        .map(|row| TwoCochain::from_coordinates(r, row).expect("in range"))
        .collect()
}

pub fn h2(alg: &LieAlgebra) -> CohomologyResult {
    Cohomology::new(alg).compute()
}

pub fn is_trivial(xi: &TwoCochain, alg: &LieAlgebra) -> Result<bool> {
    Cohomology::new(alg).is_trivial(xi)
}

#[cfg(test)]
mod tests;
