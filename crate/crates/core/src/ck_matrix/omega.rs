use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::scalars::Rational;

/// The contraction coefficients `(ω_1, …, ω_N)` of a Cayley–Klein algebra.
///
/// Entries are arbitrary rationals. Setting an entry to zero performs the
/// corresponding Inönü–Wigner contraction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OmegaVector {
    coeffs: Vec<Rational>,
}

impl OmegaVector {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyOmega);
        }
        Ok(OmegaVector { coeffs })
    }

    /// Builds ω from a sign pattern in {-1, 0, 1}.
    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        Self::new(signs.iter().map(|&s| Rational::from(i64::from(s))).collect())
    }

    /// Every vector in {-1, 0, +1}^n, in lexicographic order with -1 < 0 < 1.
    pub fn sign_patterns(n: usize) -> impl Iterator<Item = OmegaVector> {
        let total = 3usize.pow(n as u32);
        (0..total).map(move |mut code| {
            let mut signs = alloc::vec![0i8; n];
            for slot in signs.iter_mut().rev() {
                *slot = (code % 3) as i8 - 1;
                code /= 3;
            }
            OmegaVector::from_signs(&signs).expect("n >= 1")
        })
    }

    /// N, the number of coefficients. The matrices are (N+1)×(N+1).
    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `ω_a` for `1 <= a <= N`.
    pub fn get(&self, a: usize) -> Result<&Rational> {
        if a == 0 || a > self.n() {
            return Err(Error::IndexOutOfRange { index: a, max: self.n() });
        }
        Ok(&self.coeffs[a - 1])
    }

    /// `ω_a` if it exists, `None` for the absent `ω_0` and `ω_{N+1}`.
    pub fn present(&self, a: usize) -> Option<&Rational> {
        self.get(a).ok()
    }

    pub fn is_zero_at(&self, a: usize) -> bool {
        self.present(a).is_some_and(Rational::is_zero)
    }

    /// The two-index coefficient `ω_ab = ω_{a+1}···ω_b`, with `ω_aa = 1`.
    pub fn product(&self, a: usize, b: usize) -> Result<Rational> {
        if b > self.n() {
            return Err(Error::IndexOutOfRange { index: b, max: self.n() });
        }
        if a > b {
            return Err(Error::ReversedIndices { a, b });
        }
        Ok(self.coeffs[a..b].iter().cloned().product())
    }

    /// Panicking [`product`](Self::product) for indices the caller has
    /// already validated.
    pub(crate) fn w(&self, a: usize, b: usize) -> Rational {
        self.product(a, b).expect("validated indices")
    }

    /// Sign of every entry: the {-1, 0, +1} representative reachable by
    /// positive rescaling.
    pub fn canonical_signs(&self) -> Vec<i8> {
        self.coeffs.iter().map(Rational::signum).collect()
    }

    /// 1-based indices `a` with `ω_a = 0`.
    pub fn zero_set(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&a| self.is_zero_at(a)).collect()
    }

    /// Replaces the listed entries (1-based) by zero.
    pub fn contract(&self, zero_set: &[usize]) -> Result<Self> {
        let mut out = self.clone();
        for &a in zero_set {
            if a == 0 || a > self.n() {
                return Err(Error::IndexOutOfRange { index: a, max: self.n() });
            }
            out.coeffs[a - 1] = Rational::zero();
        }
        Ok(out)
    }
}

impl fmt::Display for OmegaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Comma-separated rationals, e.g. `1,0,-1/2`.
impl FromStr for OmegaVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::EmptyOmega);
        }
        let coeffs = s
            .split(',')
            .map(|t| t.trim().parse::<Rational>())
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::ParseRational(s.to_string()))?;
        OmegaVector::new(coeffs)
    }
}

/// The diagonal metric `diag(1, ω_01, ω_02, …, ω_0N)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MetricMatrix {
    diag: Vec<Rational>,
}

impl MetricMatrix {
    pub fn diag(&self) -> &[Rational] {
        &self.diag
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// `(p, q)`, the numbers of positive and negative entries, when the
    /// metric is non-degenerate.
    pub fn signature(&self) -> Option<(usize, usize)> {
        if self.diag.iter().any(Rational::is_zero) {
            return None;
        }
        let p = self.diag.iter().filter(|d| d.signum() > 0).count();
        Some((p, self.diag.len() - p))
    }
}

pub fn omega_product(omega: &OmegaVector, a: usize, b: usize) -> Result<Rational> {
    omega.product(a, b)
}

pub fn build_metric(omega: &OmegaVector) -> MetricMatrix {
    MetricMatrix {
        diag: (0..=omega.n()).map(|b| omega.w(0, b)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn om(s: &str) -> OmegaVector {
        s.parse().unwrap()
    }

    #[test]
    fn two_index_products() {
        let w = om("2,3,5");
        assert_eq!(omega_product(&w, 1, 3).unwrap(), Rational::from(15));
        for a in 0..=3 {
            assert_eq!(omega_product(&w, a, a).unwrap(), Rational::one());
        }
        assert!(omega_product(&om("0,1,1"), 0, 2).unwrap().is_zero());
        assert!(matches!(omega_product(&w, 2, 1), Err(Error::ReversedIndices { .. })));
        assert!(matches!(omega_product(&w, 0, 4), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn metrics() {
        let one = Rational::one;
        assert_eq!(build_metric(&om("1,1")).diag(), &[one(), one(), one()]);
        assert_eq!(
            build_metric(&om("0,1")).diag(),
            &[one(), Rational::zero(), Rational::zero()]
        );
        let m = build_metric(&om("-1,1"));
        assert_eq!(m.diag(), &[one(), -one(), -one()]);
        assert_eq!(m.signature(), Some((1, 2)));
        assert_eq!(build_metric(&om("0,1")).signature(), None);
    }

    #[test]
    fn parsing() {
        assert_eq!(om(" 1, -1/2 ,0").to_string(), "1,-1/2,0");
        assert!("".parse::<OmegaVector>().is_err());
        assert!("1,0,x".parse::<OmegaVector>().is_err());
        assert!("1,,0".parse::<OmegaVector>().is_err());
    }

    #[test]
    fn contraction() {
        assert_eq!(om("1,1").contract(&[1]).unwrap(), om("0,1"));
        assert_eq!(om("1,1,1").contract(&[1, 2]).unwrap(), om("0,0,1"));
        let w = om("3,-2,7,1");
        assert_eq!(
            w.contract(&[1]).unwrap().contract(&[3]).unwrap(),
            w.contract(&[1, 3]).unwrap()
        );
        assert_eq!(w.contract(&[2, 2]).unwrap().zero_set(), vec![2]);
        assert!(w.contract(&[0]).is_err());
        assert!(w.contract(&[5]).is_err());
    }

    #[test]
    fn sign_enumeration() {
        let all: Vec<_> = OmegaVector::sign_patterns(2).collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], om("-1,-1"));
        assert_eq!(all[1], om("-1,0"));
        assert_eq!(all[8], om("1,1"));
        assert_eq!(om("5/2,0,-3").canonical_signs(), vec![1, 0, -1]);
    }
}
