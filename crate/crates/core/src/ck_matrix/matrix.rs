use alloc::vec;
use alloc::vec::Vec;

use super::omega::MetricMatrix;
use crate::error::{Error, Result};
use crate::scalars::{Hypercomplex, Rational, ScalarKind};

/// A dense square matrix with entries in ℝ, ℂ or ℍ, all of one kind.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixOverK {
    dim: usize,
    kind: ScalarKind,
    entries: Vec<Hypercomplex>,
}

impl MatrixOverK {
    pub fn zero(dim: usize, kind: ScalarKind) -> Self {
        MatrixOverK {
            dim,
            kind,
            entries: vec![Hypercomplex::zero(kind); dim * dim],
        }
    }

    /// `e_ab`: a single 1 in row `a`, column `b`.
    pub fn elementary(dim: usize, kind: ScalarKind, a: usize, b: usize) -> Result<Self> {
        let max = dim.saturating_sub(1);
        for index in [a, b] {
            if index >= dim {
                return Err(Error::IndexOutOfRange { index, max });
            }
        }
        let mut m = Self::zero(dim, kind);
        m.entries[a * dim + b] = Hypercomplex::one(kind);
        Ok(m)
    }

    pub fn from_diagonal(metric: &MetricMatrix, kind: ScalarKind) -> Self {
        let dim = metric.dim();
        let mut m = Self::zero(dim, kind);
        for (a, d) in metric.diag().iter().enumerate() {
            m.entries[a * dim + a] = Hypercomplex::from_real(kind, d.clone());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn get(&self, row: usize, col: usize) -> &Hypercomplex {
        &self.entries[row * self.dim + col]
    }

    /// Rows of entries, for serialization.
    pub fn rows(&self) -> impl Iterator<Item = &[Hypercomplex]> {
        self.entries.chunks(self.dim.max(1))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Hypercomplex::is_zero)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        if self.kind != other.kind {
            return Err(Error::KindMismatch { left: self.kind, right: other.kind });
        }
        Ok(())
    }

    /// Left multiplication of every entry by the scalar `h`. The scalar must
    /// fit in the matrix kind.
    pub fn scale_left(&self, h: &Hypercomplex) -> Result<Self> {
        if h.kind() > self.kind {
            return Err(Error::KindMismatch { left: self.kind, right: h.kind() });
        }
        Ok(MatrixOverK {
            dim: self.dim,
            kind: self.kind,
            entries: self.entries.iter().map(|e| h.mul(e).with_kind(self.kind)).collect::<Result<_>>()?,
        })
    }

    pub fn scale_real(&self, r: &Rational) -> Self {
        MatrixOverK {
            dim: self.dim,
            kind: self.kind,
            entries: self.entries.iter().map(|e| e.scale(r)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(MatrixOverK {
            dim: self.dim,
            kind: self.kind,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(MatrixOverK {
            dim: self.dim,
            kind: self.kind,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.dim;
        let mut out = Self::zero(n, self.kind);
        for i in 0..n {
            for k in 0..n {
                let lhs = self.get(i, k);
                if lhs.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let rhs = other.get(k, j);
                    if rhs.is_zero() {
                        continue;
                    }
                    let slot = &mut out.entries[i * n + j];
                    *slot = slot.add(&lhs.mul(rhs));
                }
            }
        }
        Ok(out)
    }

    pub fn conj_transpose(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zero(n, self.kind);
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.get(i, j).conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Hypercomplex {
        (0..self.dim).fold(Hypercomplex::zero(self.kind), |acc, a| acc.add(self.get(a, a)))
    }

    /// Real coordinates, row-major over entries, then `(w, x, y, z)` truncated
    /// to the components of the matrix kind.
    pub fn flatten(&self) -> Vec<Rational> {
        let width = self.kind.components();
        self.entries
            .iter()
            .flat_map(|e| e.components()[..width].iter().cloned())
            .collect()
    }
}

pub fn mat_commutator(x: &MatrixOverK, y: &MatrixOverK) -> Result<MatrixOverK> {
    x.mul(y)?.sub(&y.mul(x)?)
}

/// `X† g + g X == 0`.
pub fn is_metric_antihermitian(x: &MatrixOverK, metric: &MetricMatrix) -> Result<bool> {
    if x.dim() != metric.dim() {
        return Err(Error::DimensionMismatch { expected: x.dim(), found: metric.dim() });
    }
    let g = MatrixOverK::from_diagonal(metric, x.kind());
    Ok(x.conj_transpose().mul(&g)?.add(&g.mul(x)?)?.is_zero())
}

pub fn is_traceless(x: &MatrixOverK) -> bool {
    x.trace().is_zero()
}

/// Reads coordinates off a fixed basis of matrices.
///
/// The basis is flattened to real vectors once and Gauss–Jordan reduced
/// together with an identity block; each decomposition is then a
/// matrix-vector product plus a consistency check.
#[derive(Clone, Debug)]
pub struct BasisDecomposer {
    dim: usize,
    kind: ScalarKind,
    rank: usize,
    // Row operations that bring the basis matrix to reduced echelon form.
    transform: Vec<Vec<(usize, Rational)>>,
}

impl BasisDecomposer {
    pub fn new(basis: &[MatrixOverK]) -> Result<Self> {
        let Some(first) = basis.first() else {
            return Ok(BasisDecomposer { dim: 0, kind: ScalarKind::Real, rank: 0, transform: Vec::new() });
        };
        for m in basis {
            first.check_compatible(m)?;
        }
        let cols: Vec<Vec<Rational>> = basis.iter().map(MatrixOverK::flatten).collect();
        let rows = cols[0].len();
        let r = basis.len();
        // [A | I] with A having the flattened basis as columns.
        let width = r + rows;
        let mut aug: Vec<Vec<Rational>> = (0..rows)
            .map(|i| {
                let mut row = vec![Rational::zero(); width];
                for (k, col) in cols.iter().enumerate() {
                    row[k] = col[i].clone();
                }
                row[r + i] = Rational::one();
                row
            })
            .collect();
        let mut pivot_row = 0;
        for col in 0..r {
            let Some(p) = (pivot_row..rows).find(|&i| !aug[i][col].is_zero()) else {
                return Err(Error::DependentBasis);
            };
            aug.swap(pivot_row, p);
            let inv = aug[pivot_row][col].recip().expect("nonzero pivot");
            for v in aug[pivot_row].iter_mut() {
                *v = &*v * &inv;
            }
            let pivot = aug[pivot_row].clone();
            for (i, row) in aug.iter_mut().enumerate() {
                if i == pivot_row || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot) {
                    if !p.is_zero() {
                        *v -= &(&factor * p);
                    }
                }
            }
            pivot_row += 1;
        }
        let transform = aug
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .skip(r)
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        Ok(BasisDecomposer { dim: first.dim(), kind: first.kind(), rank: r, transform })
    }

    pub fn decompose(&self, x: &MatrixOverK) -> Result<Vec<Rational>> {
        if self.rank == 0 {
            return if x.is_zero() { Ok(Vec::new()) } else { Err(Error::NotInSpan) };
        }
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.dim() });
        }
        if x.kind() != self.kind {
            return Err(Error::KindMismatch { left: self.kind, right: x.kind() });
        }
        let flat = x.flatten();
        let apply = |row: &Vec<(usize, Rational)>| -> Rational {
            row.iter().map(|(j, v)| v * &flat[*j]).sum()
        };
        if self.transform[self.rank..].iter().any(|row| !apply(row).is_zero()) {
            return Err(Error::NotInSpan);
        }
        Ok(self.transform[..self.rank].iter().map(apply).collect())
    }
}

pub fn decompose_in_basis(x: &MatrixOverK, basis: &[MatrixOverK]) -> Result<Vec<Rational>> {
    BasisDecomposer::new(basis)?.decompose(x)
}
