use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::matrix::MatrixOverK;
use super::omega::OmegaVector;
use crate::error::{Error, Result};
use crate::scalars::{Hypercomplex, ScalarKind};

/// The four Cayley–Klein families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Orthogonal `so_ω(N+1)`, real matrices.
    So,
    /// Special unitary `su_ω(N+1)`, traceless complex matrices.
    Su,
    /// Unitary `u_ω(N+1)`.
    U,
    /// Quaternionic unitary `sq_ω(N+1)`.
    Sq,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::So, Family::Su, Family::U, Family::Sq];

    pub fn name(self) -> &'static str {
        match self {
            Family::So => "so",
            Family::Su => "su",
            Family::U => "u",
            Family::Sq => "sq",
        }
    }

    pub fn scalar_kind(self) -> ScalarKind {
        match self {
            Family::So => ScalarKind::Real,
            Family::Su | Family::U => ScalarKind::Complex,
            Family::Sq => ScalarKind::Quaternion,
        }
    }

    /// Dimension of the algebra for matrices of size (n+1)×(n+1).
    pub fn dimension(self, n: usize) -> usize {
        let m = n + 1;
        match self {
            Family::So => n * m / 2,
            Family::Su => m * m - 1,
            Family::U => m * m,
            Family::Sq => 2 * m * m + m,
        }
    }

    /// The canonical ordered basis: J(a,b) by (a,b), then M(a,b), then
    /// B(1..N), then I; for sq the J block, then Mq by (α,a,b), then E by
    /// (α,a).
    pub fn basis(self, n: usize) -> Vec<GeneratorLabel> {
        let pairs = || (0..=n).flat_map(move |a| (a + 1..=n).map(move |b| (a, b)));
        let mut out: Vec<GeneratorLabel> = pairs().map(|(a, b)| GeneratorLabel::J(a, b)).collect();
        match self {
            Family::So => {}
            Family::Su | Family::U => {
                out.extend(pairs().map(|(a, b)| GeneratorLabel::M(a, b)));
                out.extend((1..=n).map(GeneratorLabel::B));
                if self == Family::U {
                    out.push(GeneratorLabel::I);
                }
            }
            Family::Sq => {
                for alpha in 1..=3 {
                    out.extend(pairs().map(|(a, b)| GeneratorLabel::Mq(alpha, a, b)));
                }
                for alpha in 1..=3 {
                    out.extend((0..=n).map(|a| GeneratorLabel::E(alpha, a)));
                }
            }
        }
        out
    }

    /// Whether `label` is a generator of this family for the given N.
    pub fn contains(self, label: &GeneratorLabel, n: usize) -> bool {
        use GeneratorLabel::*;
        let pair_ok = |a: usize, b: usize| a < b && b <= n;
        match (self, *label) {
            (_, J(a, b)) => pair_ok(a, b),
            (Family::Su | Family::U, M(a, b)) => pair_ok(a, b),
            (Family::Su | Family::U, B(l)) => (1..=n).contains(&l),
            (Family::U, I) => true,
            (Family::Sq, Mq(alpha, a, b)) => (1..=3).contains(&alpha) && pair_ok(a, b),
            (Family::Sq, E(alpha, a)) => (1..=3).contains(&alpha) && a <= n,
            _ => false,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "so" => Ok(Family::So),
            "su" => Ok(Family::Su),
            "u" => Ok(Family::U),
            "sq" => Ok(Family::Sq),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// Name of a basis generator. Indices `a < b` run over `0..=N`, `l` over
/// `1..=N`, and the quaternionic index `α` over `1..=3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorLabel {
    J(usize, usize),
    M(usize, usize),
    B(usize),
    /// `M^α_ab`.
    Mq(usize, usize, usize),
    /// `E^α_a`.
    E(usize, usize),
    I,
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GeneratorLabel::J(a, b) => write!(f, "J[{a},{b}]"),
            GeneratorLabel::M(a, b) => write!(f, "M[{a},{b}]"),
            GeneratorLabel::B(l) => write!(f, "B[{l}]"),
            GeneratorLabel::Mq(alpha, a, b) => write!(f, "M{alpha}[{a},{b}]"),
            GeneratorLabel::E(alpha, a) => write!(f, "E{alpha}[{a}]"),
            GeneratorLabel::I => f.write_str("I"),
        }
    }
}

/// The antihermitian matrix realizing `label` in `family` at contraction
/// parameters `omega`.
pub fn build_generator(family: Family, label: GeneratorLabel, omega: &OmegaVector) -> Result<MatrixOverK> {
    let n = omega.n();
    if !family.contains(&label, n) {
        return Err(Error::LabelFamilyMismatch { label, family });
    }
    let kind = family.scalar_kind();
    let dim = n + 1;
    let e = |a: usize, b: usize| MatrixOverK::elementary(dim, kind, a, b);
    // ω_ab e_ab + e_ba
    let sym = |a: usize, b: usize| -> Result<MatrixOverK> {
        e(a, b)?.scale_real(&omega.w(a, b)).add(&e(b, a)?)
    };
    let unit = |alpha: usize| Hypercomplex::unit(alpha);
    match label {
        GeneratorLabel::J(a, b) => e(b, a)?.sub(&e(a, b)?.scale_real(&omega.w(a, b))),
        GeneratorLabel::M(a, b) => sym(a, b)?.scale_left(&unit(1)?),
        GeneratorLabel::B(l) => e(l - 1, l - 1)?.sub(&e(l, l)?)?.scale_left(&unit(1)?),
        GeneratorLabel::Mq(alpha, a, b) => sym(a, b)?.scale_left(&unit(alpha)?),
        GeneratorLabel::E(alpha, a) => e(a, a)?.scale_left(&unit(alpha)?),
        GeneratorLabel::I => {
            let mut id = MatrixOverK::zero(dim, kind);
            for a in 0..dim {
                id = id.add(&e(a, a)?)?;
            }
            id.scale_left(&unit(1)?)
        }
    }
}

/// All basis generators of `family` as matrices, in canonical order.
pub fn generator_matrices(family: Family, omega: &OmegaVector) -> Result<Vec<(GeneratorLabel, MatrixOverK)>> {
    family
        .basis(omega.n())
        .into_iter()
        .map(|label| Ok((label, build_generator(family, label, omega)?)))
        .collect()
}
