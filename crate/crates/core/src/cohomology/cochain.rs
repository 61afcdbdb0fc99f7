use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::SparseRow;
use crate::scalars::Rational;

/// Position of the unknown `ξ_ij` (`i < j`) among the `r(r-1)/2` cochain
/// coordinates, in lexicographic order of `(i, j)`.
pub fn pair_index(i: usize, j: usize, r: usize) -> usize {
    debug_assert!(i < j && j < r);
    i * (2 * r - i - 1) / 2 + (j - i - 1)
}

/// Inverse of [`pair_index`] as a lookup table.
pub fn pair_table(r: usize) -> Vec<(usize, usize)> {
    (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).collect()
}

/// An antisymmetric bilinear form `ξ` on the algebra, stored as `ξ_ij` for
/// `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TwoCochain {
    dim: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl TwoCochain {
    pub fn zero(dim: usize) -> Self {
        TwoCochain { dim, entries: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets `ξ_ij` (and so `ξ_ji = -ξ_ij`).
    pub fn set(&mut self, i: usize, j: usize, value: Rational) -> Result<()> {
        let max = self.dim.saturating_sub(1);
        for index in [i, j] {
            if index >= self.dim {
                return Err(Error::IndexOutOfRange { index, max });
            }
        }
        if i == j {
            return if value.is_zero() { Ok(()) } else { Err(Error::IndexOutOfRange { index: j, max }) };
        }
        let (key, value) = if i < j { ((i, j), value) } else { ((j, i), -value) };
        if value.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
        Ok(())
    }

    /// Adds `value` to `ξ_ij`.
    pub fn add_to(&mut self, i: usize, j: usize, value: &Rational) -> Result<()> {
        let current = self.get(i, j);
        self.set(i, j, current + value)
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        use core::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Rational::zero(),
            Less => self.entries.get(&(i, j)).cloned().unwrap_or_default(),
            Greater => self.entries.get(&(j, i)).map(|v| -v).unwrap_or_default(),
        }
    }

    /// Nonzero `((i, j), ξ_ij)` with `i < j`.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, &Rational::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, &Rational::from(-1))
    }

    fn combine(&self, other: &Self, sign: &Rational) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        let mut out = self.clone();
        for (&(i, j), v) in &other.entries {
            out.add_to(i, j, &(v * sign))?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = TwoCochain::zero(self.dim);
        if !c.is_zero() {
            out.entries = self.entries.iter().map(|(k, v)| (*k, v * c)).collect();
        }
        out
    }

    /// Coordinates in the `pair_index` ordering.
    pub fn to_coordinates(&self) -> SparseRow {
        // BTreeMap order on (i, j) coincides with pair_index order.
        self.entries
            .iter()
            .map(|(&(i, j), v)| (pair_index(i, j, self.dim), v.clone()))
            .collect()
    }

    pub fn from_coordinates(dim: usize, coords: &[(usize, Rational)]) -> Result<Self> {
        let table = pair_table(dim);
        let mut out = TwoCochain::zero(dim);
        for (p, v) in coords {
            let &(i, j) = table.get(*p).ok_or(Error::IndexOutOfRange {
                index: *p,
                max: table.len().saturating_sub(1),
            })?;
            out.set(i, j, v.clone())?;
        }
        Ok(out)
    }
}

/// A linear form `μ` on the algebra; shifting `X_k → X_k + μ_k Ξ` changes an
/// extension by the coboundary `δμ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneCochain {
    values: Vec<Rational>,
}

impl OneCochain {
    pub fn zero(dim: usize) -> Self {
        OneCochain { values: alloc::vec![Rational::zero(); dim] }
    }

    pub fn unit(dim: usize, k: usize) -> Self {
        let mut out = Self::zero(dim);
        out.values[k] = Rational::one();
        out
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, k: usize) -> &Rational {
        &self.values[k]
    }
}

impl From<Vec<Rational>> for OneCochain {
    fn from(values: Vec<Rational>) -> Self {
        OneCochain { values }
    }
}
