//! Exact scalars: arbitrary-precision rationals and the real ⊂ complex ⊂
//! quaternion tower used for matrix entries.

use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number, always stored in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in canonical reduced form.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i8 {
        if self.0.is_zero() {
            0
        } else if self.0.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// Least common multiple of the denominators of `values` (1 when empty).
    pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
        values
            .into_iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p`, `-p` and `p/q` with `q > 0`.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        let s_trim = s.trim();
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        let (num, den) = match s_trim.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s_trim, None),
        };
        let unsigned = num.strip_prefix('-').unwrap_or(num);
        if !digits(unsigned) {
            return Err(bad());
        }
        let num: BigInt = num.parse().map_err(|_| bad())?;
        match den {
            None => Ok(Rational::from_integer(num)),
            Some(d) if digits(d) => {
                let d: BigInt = d.parse().map_err(|_| bad())?;
                Rational::new(num, d)
            }
            Some(_) => Err(bad()),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Division by zero panics, like integer division.
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl core::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl core::iter::Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// Which division algebra a scalar (or matrix) lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ScalarKind {
    Real,
    Complex,
    Quaternion,
}

impl ScalarKind {
    /// Number of real components: 1, 2 or 4.
    pub fn components(self) -> usize {
        match self {
            ScalarKind::Real => 1,
            ScalarKind::Complex => 2,
            ScalarKind::Quaternion => 4,
        }
    }
}

/// An element of ℝ, ℂ or ℍ with exact rational components along
/// `(1, i₁, i₂, i₃)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypercomplex {
    kind: ScalarKind,
    c: [Rational; 4],
}

impl Hypercomplex {
    pub fn new(kind: ScalarKind, c: [Rational; 4]) -> Result<Self> {
        if c[kind.components()..].iter().any(|v| !v.is_zero()) {
            return Err(Error::KindViolation { kind });
        }
        Ok(Hypercomplex { kind, c })
    }

    pub fn zero(kind: ScalarKind) -> Self {
        Hypercomplex {
            kind,
            c: [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn one(kind: ScalarKind) -> Self {
        Self::from_real(kind, Rational::one())
    }

    pub fn from_real(kind: ScalarKind, r: Rational) -> Self {
        let mut h = Self::zero(kind);
        h.c[0] = r;
        h
    }

    /// The imaginary unit `i_alpha` (`alpha` in 1..=3), of the smallest kind
    /// that contains it.
    pub fn unit(alpha: usize) -> Result<Self> {
        let kind = match alpha {
            1 => ScalarKind::Complex,
            2 | 3 => ScalarKind::Quaternion,
            _ => return Err(Error::IndexOutOfRange { index: alpha, max: 3 }),
        };
        let mut h = Self::zero(kind);
        h.c[alpha] = Rational::one();
        Ok(h)
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn components(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn re(&self) -> &Rational {
        &self.c[0]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    /// Re-tags the scalar as `kind`; fails if that would drop components.
    pub fn with_kind(&self, kind: ScalarKind) -> Result<Self> {
        Self::new(kind, self.c.clone())
    }

    fn lifted(&self, kind: ScalarKind) -> Self {
        Hypercomplex {
            kind: self.kind.max(kind),
            c: self.c.clone(),
        }
    }

    pub fn conj(&self) -> Self {
        Hypercomplex {
            kind: self.kind,
            c: [
                self.c[0].clone(),
                -&self.c[1],
                -&self.c[2],
                -&self.c[3],
            ],
        }
    }

    /// `a · conj(a) = w² + x² + y² + z²`.
    pub fn norm_sq(&self) -> Rational {
        self.c.iter().map(|v| v * v).sum()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Hypercomplex {
            kind: self.kind,
            c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r],
        }
    }

    /// Hamilton product; the result kind is the larger of the two kinds.
    pub fn mul(&self, rhs: &Self) -> Self {
        let [a1, b1, c1, d1] = &self.c;
        let [a2, b2, c2, d2] = &rhs.c;
        Hypercomplex {
            kind: self.kind.max(rhs.kind),
            c: [
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            ],
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.lifted(rhs.kind);
        for (o, r) in out.c.iter_mut().zip(&rhs.c) {
            *o += r;
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.lifted(rhs.kind);
        for (o, r) in out.c.iter_mut().zip(&rhs.c) {
            *o -= r;
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&Rational::from(-1))
    }
}

impl fmt::Debug for Hypercomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Hypercomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const UNITS: [&str; 4] = ["", "i", "j", "k"];
        let mut first = true;
        for (v, unit) in self.c.iter().zip(UNITS) {
            if v.is_zero() {
                continue;
            }
            if !first && v.signum() > 0 {
                f.write_str("+")?;
            }
            if unit.is_empty() {
                write!(f, "{v}")?;
            } else if v.is_one() {
                f.write_str(unit)?;
            } else if (-v).is_one() {
                write!(f, "-{unit}")?;
            } else {
                write!(f, "{v}{unit}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Canonical form of `num/den`.
pub fn rat_normalize(num: i64, den: i64) -> Result<Rational> {
    Rational::new(num, den)
}

pub fn hyper_mul(a: &Hypercomplex, b: &Hypercomplex) -> Hypercomplex {
    a.mul(b)
}

pub fn hyper_conj(a: &Hypercomplex) -> Hypercomplex {
    a.conj()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use proptest::prelude::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn q(w: i64, x: i64, y: i64, z: i64) -> Hypercomplex {
        Hypercomplex::new(ScalarKind::Quaternion, [r(w), r(x), r(y), r(z)]).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let half = rat_normalize(2, 4).unwrap();
        assert_eq!((half.numer().clone(), half.denom().clone()), (1.into(), 2.into()));
        let zero = rat_normalize(0, 5).unwrap();
        assert_eq!((zero.numer().clone(), zero.denom().clone()), (0.into(), 1.into()));
        let neg = rat_normalize(3, -6).unwrap();
        assert_eq!((neg.numer().clone(), neg.denom().clone()), ((-1).into(), 2.into()));
        assert_eq!(rat_normalize(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3".parse::<Rational>().unwrap(), r(3));
        assert_eq!("-7".parse::<Rational>().unwrap(), r(-7));
        assert_eq!("6/4".parse::<Rational>().unwrap(), Rational::new(3, 2).unwrap());
        assert_eq!("-1/2".parse::<Rational>().unwrap().to_string(), "-1/2");
        for bad in ["", "x", "1/0", "1/-2", "1.5", "--1", "/3", "2/"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad}");
        }
        assert_eq!(format!("{}", Rational::new(-4, 2).unwrap()), "-2");
    }

    #[test]
    fn unit_products() {
        let i = Hypercomplex::unit(1).unwrap();
        let j = Hypercomplex::unit(2).unwrap();
        let k = Hypercomplex::unit(3).unwrap();
        assert_eq!(hyper_mul(&i, &j), k);
        assert_eq!(hyper_mul(&j, &k), i.with_kind(ScalarKind::Quaternion).unwrap());
        assert_eq!(hyper_mul(&k, &i), j);
        assert_eq!(hyper_mul(&j, &i), k.neg());
        assert_eq!(hyper_mul(&i, &i), Hypercomplex::from_real(ScalarKind::Complex, r(-1)));
        let one = Hypercomplex::one(ScalarKind::Complex);
        assert_eq!(
            hyper_mul(&one.add(&i), &one.sub(&i)),
            Hypercomplex::from_real(ScalarKind::Complex, r(2))
        );
    }

    #[test]
    fn conjugation_examples() {
        let one = Hypercomplex::one(ScalarKind::Complex);
        let i = Hypercomplex::unit(1).unwrap();
        assert_eq!(hyper_conj(&one.add(&i)), one.sub(&i));
        let three = Hypercomplex::from_real(ScalarKind::Real, r(3));
        assert_eq!(hyper_conj(&three), three);
        assert_eq!(hyper_conj(&q(0, 0, 1, 1)), q(0, 0, -1, -1));
    }

    #[test]
    fn kind_tags() {
        assert!(Hypercomplex::new(ScalarKind::Real, [r(1), r(1), r(0), r(0)]).is_err());
        assert!(Hypercomplex::new(ScalarKind::Complex, [r(1), r(1), r(0), r(2)]).is_err());
        let i = Hypercomplex::unit(1).unwrap();
        assert_eq!(i.kind(), ScalarKind::Complex);
        assert!(i.with_kind(ScalarKind::Real).is_err());
        let real = Hypercomplex::one(ScalarKind::Real);
        assert_eq!(real.mul(&Hypercomplex::unit(3).unwrap()).kind(), ScalarKind::Quaternion);
    }

    #[test]
    fn conj_is_antihomomorphism_on_units() {
        let units: alloc::vec::Vec<_> = (0..4)
            .map(|a| {
                let mut c = [0, 0, 0, 0];
                c[a] = 1;
                q(c[0], c[1], c[2], c[3])
            })
            .collect();
        for a in &units {
            for b in &units {
                assert_eq!(a.mul(b).conj(), b.conj().mul(&a.conj()));
            }
        }
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=7).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    fn quaternion() -> impl Strategy<Value = Hypercomplex> {
        [small_rational(), small_rational(), small_rational(), small_rational()]
            .prop_map(|c| Hypercomplex::new(ScalarKind::Quaternion, c).unwrap())
    }

    proptest! {
        #[test]
        fn rational_add_sub_exact(a in small_rational(), b in small_rational()) {
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn quaternion_associative(a in quaternion(), b in quaternion(), c in quaternion()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn quaternion_conj_laws(a in quaternion(), b in quaternion()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!(a.mul(&b).conj(), b.conj().mul(&a.conj()));
            let n = a.mul(&a.conj());
            prop_assert_eq!(n, Hypercomplex::from_real(ScalarKind::Quaternion, a.norm_sq()));
            prop_assert!(a.norm_sq().signum() >= 0);
        }
    }
}
