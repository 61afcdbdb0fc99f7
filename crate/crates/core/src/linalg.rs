//! Exact rank, echelon forms and nullspaces of rational systems.
//!
//! Rows are scaled to primitive integer vectors and eliminated
//! fraction-free: cancelling column `c` of `r` against pivot row `p` replaces
//! `r` by `(p_c/g)·r − (r_c/g)·p` with `g = gcd(p_c, r_c)`, and the result is
//! divided by its content. No rational arithmetic happens until the final
//! reduced form is read out.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalars::Rational;

/// A sparse rational vector: `(column, value)` sorted by column, no zeros.
pub type SparseRow = Vec<(usize, Rational)>;

/// Primitive integer row with positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
struct IntRow(Vec<(usize, BigInt)>);

impl IntRow {
    fn from_rational(row: &[(usize, Rational)]) -> Self {
        let den = Rational::common_denominator(row.iter().map(|(_, v)| v));
        let mut out = IntRow(
            row.iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (*c, v.numer() * (&den / v.denom())))
                .collect(),
        );
        out.0.sort_by_key(|(c, _)| *c);
        out.normalize();
        out
    }

    fn lead(&self) -> Option<usize> {
        self.0.first().map(|(c, _)| *c)
    }

    fn coeff(&self, col: usize) -> Option<&BigInt> {
        self.0
            .binary_search_by_key(&col, |(c, _)| *c)
            .ok()
            .map(|pos| &self.0[pos].1)
    }

    fn normalize(&mut self) {
        let Some((_, first)) = self.0.first() else { return };
        let mut g = first.abs();
        for (_, v) in &self.0[1..] {
            if g.is_one() {
                break;
            }
            g = g.gcd(v);
        }
        let flip = first.is_negative();
        if g.is_one() && !flip {
            return;
        }
        for (_, v) in self.0.iter_mut() {
            if !g.is_one() {
                *v = &*v / &g;
            }
            if flip {
                *v = -&*v;
            }
        }
    }

    /// Cancels column `col` of `self` against `pivot`.
    fn eliminate(&mut self, pivot: &IntRow, col: usize) {
        let (Some(p), Some(s)) = (pivot.coeff(col), self.coeff(col)) else { return };
        let g = p.gcd(s);
        let (ps, ss) = (p / &g, s / &g);
        let mut out = Vec::with_capacity(self.0.len() + pivot.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), pivot.0.iter().peekable());
        loop {
            let next = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some((ca, _)), Some((cb, _))) if ca == cb => {
                    let ((c, va), (_, vb)) = (a.next().unwrap(), b.next().unwrap());
                    (*c, &ps * va - &ss * vb)
                }
                (Some((ca, _)), Some((cb, _))) if ca < cb => {
                    let (c, va) = a.next().unwrap();
                    (*c, &ps * va)
                }
                (Some(_), None) => {
                    let (c, va) = a.next().unwrap();
                    (*c, &ps * va)
                }
                _ => {
                    let (c, vb) = b.next().unwrap();
                    (*c, -(&ss * vb))
                }
            };
            if !next.1.is_zero() {
                out.push(next);
            }
        }
        self.0 = out;
        self.normalize();
    }

    fn to_rational(&self) -> SparseRow {
        let lead = match self.0.first() {
            Some((_, v)) => Rational::from(v.clone()),
            None => return Vec::new(),
        };
        self.0.iter().map(|(c, v)| (*c, Rational::from(v.clone()) / &lead)).collect()
    }
}

/// An incrementally built row echelon form.
///
/// Rows are kept keyed by their leading column; inserting a row reduces its
/// leading entry against existing pivots until it is either zero (dependent)
/// or lands on a new column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    rows: BTreeMap<usize, IntRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    fn reduce(&self, mut row: IntRow) -> IntRow {
        while let Some(lead) = row.lead() {
            match self.rows.get(&lead) {
                Some(pivot) => row.eliminate(pivot, lead),
                None => break,
            }
        }
        row
    }

    /// Adds a row; returns `true` if it raised the rank.
    pub fn insert(&mut self, row: &[(usize, Rational)]) -> bool {
        let row = self.reduce(IntRow::from_rational(row));
        match row.lead() {
            Some(lead) => {
                self.rows.insert(lead, row);
                true
            }
            None => false,
        }
    }

    /// Whether `row` lies in the row space.
    pub fn contains(&self, row: &[(usize, Rational)]) -> bool {
        self.reduce(IntRow::from_rational(row)).lead().is_none()
    }

    /// The reduced row echelon basis: one row per pivot, leading entry 1 and
    /// zeros in every other pivot column, sorted by pivot column.
    pub fn reduced_basis(&self) -> Vec<SparseRow> {
        let mut rows: Vec<IntRow> = self.rows.values().cloned().collect();
        for idx in (0..rows.len()).rev() {
            let col = rows[idx].lead().expect("nonzero pivot row");
            let (head, tail) = rows.split_at_mut(idx);
            let pivot = &tail[0];
            for row in head.iter_mut() {
                if row.coeff(col).is_some() {
                    row.eliminate(pivot, col);
                }
            }
        }
        rows.iter().map(IntRow::to_rational).collect()
    }

    /// Basis of `{x : row · x = 0 for every row}`, one vector per free
    /// column (ascending), each with a 1 in its free column.
    pub fn nullspace(&self) -> Vec<SparseRow> {
        let reduced = self.reduced_basis();
        let pivots: Vec<usize> = self.pivot_columns();
        let mut by_free: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        for (row, &pc) in reduced.iter().zip(&pivots) {
            for (c, v) in row.iter().skip(1) {
                by_free.entry(*c).or_default().push((pc, -v));
            }
        }
        (0..self.ncols)
            .filter(|c| !self.rows.contains_key(c))
            .map(|f| {
                let mut v = by_free.remove(&f).unwrap_or_default();
                v.push((f, Rational::one()));
                v.sort_by_key(|(c, _)| *c);
                v
            })
            .collect()
    }
}

/// Rank, pivot columns and a nullspace basis of a rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankResult {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub nullspace: Vec<SparseRow>,
}

pub fn exact_rank_sparse(rows: &[SparseRow], ncols: usize) -> RankResult {
    let mut ech = Echelon::new(ncols);
    for row in rows {
        ech.insert(row);
    }
    RankResult { rank: ech.rank(), pivots: ech.pivot_columns(), nullspace: ech.nullspace() }
}

/// [`exact_rank_sparse`] for a dense matrix given by rows.
pub fn exact_rank(matrix: &[Vec<Rational>]) -> RankResult {
    let ncols = matrix.first().map_or(0, Vec::len);
    let rows: Vec<SparseRow> = matrix.iter().map(|r| to_sparse(r)).collect();
    exact_rank_sparse(&rows, ncols)
}

pub fn to_sparse(dense: &[Rational]) -> SparseRow {
    dense
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (c, v.clone()))
        .collect()
}

pub fn to_dense(sparse: &[(usize, Rational)], ncols: usize) -> Vec<Rational> {
    let mut out = alloc::vec![Rational::zero(); ncols];
    for (c, v) in sparse {
        out[*c] = v.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| Rational::from(v)).collect()).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(exact_rank(&m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).rank, 3);
        let z = exact_rank(&m(&[&[0, 0], &[0, 0]]));
        assert_eq!(z.rank, 0);
        assert_eq!(z.nullspace.len(), 2);
        let r = exact_rank(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.nullspace, vec![vec![(0, Rational::from(-2)), (1, Rational::one())]]);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = m(&[&[2, -4, 0, 6, 1], &[1, -2, 3, 0, 0], &[3, -6, 3, 6, 1], &[0, 0, 0, 5, -5]]);
        let res = exact_rank(&a);
        assert_eq!(res.rank + res.nullspace.len(), 5);
        for v in &res.nullspace {
            let dense = to_dense(v, 5);
            for row in &a {
                let s: Rational = row.iter().zip(&dense).map(|(x, y)| x * y).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn reduced_basis_is_canonical() {
        let mut e1 = Echelon::new(3);
        e1.insert(&to_sparse(&m(&[&[2, 4, 6]])[0]));
        e1.insert(&to_sparse(&m(&[&[1, 3, 5]])[0]));
        let mut e2 = Echelon::new(3);
        e2.insert(&to_sparse(&m(&[&[0, 1, 2]])[0]));
        e2.insert(&to_sparse(&m(&[&[1, 0, -1]])[0]));
        assert_eq!(e1.reduced_basis(), e2.reduced_basis());
        assert_eq!(
            e1.reduced_basis(),
            vec![
                vec![(0, Rational::one()), (2, Rational::from(-1))],
                vec![(1, Rational::one()), (2, Rational::from(2))]
            ]
        );
        let v = to_sparse(&m(&[&[3, -1, -5]])[0]);
        assert!(e1.contains(&v));
        assert!(!e1.contains(&to_sparse(&m(&[&[0, 0, 1]])[0])));
        assert_eq!(
            e1.nullspace(),
            vec![vec![(0, Rational::one()), (1, Rational::from(-2)), (2, Rational::one())]]
        );
    }

    #[test]
    fn rational_rows() {
        let half = Rational::new(1, 2).unwrap();
        let third = Rational::new(1, 3).unwrap();
        let rows = vec![vec![(0, half.clone()), (1, third.clone())], vec![(0, Rational::from(3)), (1, Rational::from(2))]];
        assert_eq!(exact_rank_sparse(&rows, 2).rank, 1);
    }
}
