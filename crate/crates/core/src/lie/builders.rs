//! Closed-form bracket tables for the four CK families.
//!
//! Each rule is transcribed literally, including the Kronecker-delta
//! coefficients of the diagonal generators. The matrix route in
//! [`from_matrices`](super::from_matrices) is the independent check.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::algebra::{Combination, LieAlgebra};
use crate::ck_matrix::{Family, GeneratorLabel, OmegaVector};
use crate::error::{Error, Result};
use crate::scalars::Rational;

/// The totally antisymmetric symbol on {1, 2, 3} with `ε₁₂₃ = 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EpsTensor;

impl EpsTensor {
    /// `ε_αβγ`; zero unless `(α, β, γ)` is a permutation of `(1, 2, 3)`.
    pub fn value(self, alpha: usize, beta: usize, gamma: usize) -> i8 {
        match (alpha, beta, gamma) {
            (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
            (2, 1, 3) | (3, 2, 1) | (1, 3, 2) => -1,
            _ => 0,
        }
    }

    /// For distinct `α, β`, the remaining index `γ` and the sign `ε_αβγ`.
    pub fn complete(self, alpha: usize, beta: usize) -> Option<(usize, i8)> {
        if alpha == beta || !(1..=3).contains(&alpha) || !(1..=3).contains(&beta) {
            return None;
        }
        let gamma = 6 - alpha - beta;
        Some((gamma, self.value(alpha, beta, gamma)))
    }
}

/// Off-diagonal generators split into their real part `J` and their
/// imaginary parts `M` (unitary, stored as α = 1) and `M^α` (quaternionic).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Part {
    J,
    Im(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Gen {
    Off(Part, usize, usize),
    B(usize),
    E(usize, usize),
    I,
}

struct Table<'a> {
    family: Family,
    omega: &'a OmegaVector,
}

type Terms = Vec<(Gen, Rational)>;

fn delta(x: usize, y: usize) -> i64 {
    i64::from(x == y)
}

fn int(v: i64) -> Rational {
    Rational::from(v)
}

impl Table<'_> {
    fn w(&self, a: usize, b: usize) -> Rational {
        self.omega.w(a, b)
    }

    fn gen(&self, label: GeneratorLabel) -> Gen {
        match label {
            GeneratorLabel::J(a, b) => Gen::Off(Part::J, a, b),
            GeneratorLabel::M(a, b) => Gen::Off(Part::Im(1), a, b),
            GeneratorLabel::Mq(alpha, a, b) => Gen::Off(Part::Im(alpha), a, b),
            GeneratorLabel::B(l) => Gen::B(l),
            GeneratorLabel::E(alpha, a) => Gen::E(alpha, a),
            GeneratorLabel::I => Gen::I,
        }
    }

    fn label(&self, g: Gen) -> GeneratorLabel {
        match g {
            Gen::Off(Part::J, a, b) => GeneratorLabel::J(a, b),
            Gen::Off(Part::Im(alpha), a, b) => match self.family {
                Family::Sq => GeneratorLabel::Mq(alpha, a, b),
                _ => GeneratorLabel::M(a, b),
            },
            Gen::B(l) => GeneratorLabel::B(l),
            Gen::E(alpha, a) => GeneratorLabel::E(alpha, a),
            Gen::I => GeneratorLabel::I,
        }
    }

    fn bracket(&self, x: Gen, y: Gen) -> Terms {
        match (x, y) {
            (Gen::Off(px, a1, b1), Gen::Off(py, a2, b2)) => self.off_off(px, (a1, b1), py, (a2, b2)),
            (Gen::Off(p, a, b), d) => self.off_diag(p, a, b, d),
            (d, Gen::Off(p, a, b)) => negate(self.off_diag(p, a, b, d)),
            (Gen::E(alpha, a), Gen::E(beta, b)) => match EpsTensor.complete(alpha, beta) {
                // [E^α_a, E^β_b] = 2 δ_ab ε_αβγ E^γ_a
                Some((gamma, eps)) if a == b => {
                    alloc::vec![(Gen::E(gamma, a), int(2 * i64::from(eps)))]
                }
                _ => Vec::new(),
            },
            // B's commute among themselves; I is central.
            _ => Vec::new(),
        }
    }

    fn off_off(&self, px: Part, x: (usize, usize), py: Part, y: (usize, usize)) -> Terms {
        if x == y {
            return self.same_pair(px, py, x.0, x.1);
        }
        let ((p, q), (r, s)) = (x, y);
        let shared = [p == r, q == r, p == s, q == s];
        match shared {
            [false, false, false, false] => Vec::new(),
            // X = J_ab-type, Y = ac-type, shared first index
            [true, _, _, _] if q < s => self.shared_first(px, py, p, q, s),
            [true, _, _, _] => negate(self.shared_first(py, px, p, s, q)),
            // X = ab, Y = bc
            [_, true, _, _] => self.shared_middle(px, py, p, q, s),
            // Y = ab, X = bc
            [_, _, true, _] => negate(self.shared_middle(py, px, r, p, q)),
            // shared last index: X = ac, Y = bc when p < r
            [_, _, _, true] if p < r => self.shared_last(px, py, p, r, q),
            [_, _, _, true] => negate(self.shared_last(py, px, r, p, q)),
        }
    }

    /// `[X_ab, Y_ac]`, a < b < c.
    fn shared_first(&self, px: Part, py: Part, a: usize, b: usize, c: usize) -> Terms {
        let w = self.w(a, b);
        let out = |coef: Rational, part: Part| alloc::vec![(Gen::Off(part, b, c), coef)];
        match (px, py) {
            (Part::J, Part::J) => out(w, Part::J),
            (Part::J, Part::Im(alpha)) => out(w, Part::Im(alpha)),
            (Part::Im(alpha), Part::J) => out(-w, Part::Im(alpha)),
            (Part::Im(alpha), Part::Im(beta)) if alpha == beta => out(w, Part::J),
            (Part::Im(alpha), Part::Im(beta)) => self.mixed(alpha, beta, w, b, c),
        }
    }

    /// `[X_ab, Y_bc]`, a < b < c.
    fn shared_middle(&self, px: Part, py: Part, a: usize, _b: usize, c: usize) -> Terms {
        let out = |coef: i64, part: Part| alloc::vec![(Gen::Off(part, a, c), int(coef))];
        match (px, py) {
            (Part::J, Part::J) => out(-1, Part::J),
            (Part::J, Part::Im(alpha)) => out(-1, Part::Im(alpha)),
            (Part::Im(alpha), Part::J) => out(-1, Part::Im(alpha)),
            (Part::Im(alpha), Part::Im(beta)) if alpha == beta => out(1, Part::J),
            (Part::Im(alpha), Part::Im(beta)) => self.mixed(alpha, beta, Rational::one(), a, c),
        }
    }

    /// `[X_ac, Y_bc]`, a < b < c.
    fn shared_last(&self, px: Part, py: Part, a: usize, b: usize, c: usize) -> Terms {
        let w = self.w(b, c);
        let out = |coef: Rational, part: Part| alloc::vec![(Gen::Off(part, a, b), coef)];
        match (px, py) {
            (Part::J, Part::J) => out(w, Part::J),
            (Part::J, Part::Im(alpha)) => out(-w, Part::Im(alpha)),
            (Part::Im(alpha), Part::J) => out(w, Part::Im(alpha)),
            (Part::Im(alpha), Part::Im(beta)) if alpha == beta => out(w, Part::J),
            (Part::Im(alpha), Part::Im(beta)) => self.mixed(alpha, beta, w, a, b),
        }
    }

    /// `coef · ε_αβγ M^γ_ij`.
    fn mixed(&self, alpha: usize, beta: usize, coef: Rational, i: usize, j: usize) -> Terms {
        let (gamma, eps) = EpsTensor.complete(alpha, beta).expect("distinct quaternionic indices");
        alloc::vec![(Gen::Off(Part::Im(gamma), i, j), coef * int(i64::from(eps)))]
    }

    fn same_pair(&self, px: Part, py: Part, a: usize, b: usize) -> Terms {
        let w = self.w(a, b);
        match (self.family, px, py) {
            // [J_ab, M_ab] = -2 ω_ab Σ_{s=a+1}^{b} B_s
            (Family::Su | Family::U, Part::J, Part::Im(_)) => {
                let c = w * int(-2);
                (a + 1..=b).map(|s| (Gen::B(s), c.clone())).collect()
            }
            // [J_ab, M^α_ab] = 2 ω_ab (E^α_b - E^α_a)
            (Family::Sq, Part::J, Part::Im(alpha)) => {
                let c = w * int(2);
                alloc::vec![(Gen::E(alpha, b), c.clone()), (Gen::E(alpha, a), -c)]
            }
            // [M^α_ab, M^β_ab] = 2 ω_ab ε_αβγ (E^γ_a + E^γ_b)
            (Family::Sq, Part::Im(alpha), Part::Im(beta)) if alpha != beta => {
                let (gamma, eps) = EpsTensor.complete(alpha, beta).expect("distinct");
                let c = w * int(2 * i64::from(eps));
                alloc::vec![(Gen::E(gamma, a), c.clone()), (Gen::E(gamma, b), c)]
            }
            (_, Part::Im(_), Part::J) => negate(self.same_pair(py, px, a, b)),
            _ => Vec::new(),
        }
    }

    /// `[X_ab, D]` for a diagonal generator `D`.
    fn off_diag(&self, p: Part, a: usize, b: usize, d: Gen) -> Terms {
        match (p, d) {
            (_, Gen::I) => Vec::new(),
            // [J_ab, B_l] = c M_ab,  [M_ab, B_l] = -c J_ab,
            // c = δ_{a,l-1} - δ_{b,l-1} + δ_{bl} - δ_{al}
            (p, Gen::B(l)) => {
                let c = delta(a, l - 1) - delta(b, l - 1) + delta(b, l) - delta(a, l);
                if c == 0 {
                    return Vec::new();
                }
                match p {
                    Part::J => alloc::vec![(Gen::Off(Part::Im(1), a, b), int(c))],
                    Part::Im(_) => alloc::vec![(Gen::Off(Part::J, a, b), int(-c))],
                }
            }
            (p, Gen::E(beta, dd)) => match p {
                // [J_ab, E^β_d] = (δ_ad - δ_bd) M^β_ab
                Part::J => {
                    let c = delta(a, dd) - delta(b, dd);
                    nonzero(c, Gen::Off(Part::Im(beta), a, b))
                }
                // [M^α_ab, E^α_d] = -(δ_ad - δ_bd) J_ab
                Part::Im(alpha) if alpha == beta => {
                    let c = -(delta(a, dd) - delta(b, dd));
                    nonzero(c, Gen::Off(Part::J, a, b))
                }
                // [M^α_ab, E^β_d] = (δ_ad + δ_bd) ε_αβγ M^γ_ab
                Part::Im(alpha) => {
                    let (gamma, eps) = EpsTensor.complete(alpha, beta).expect("distinct");
                    let c = (delta(a, dd) + delta(b, dd)) * i64::from(eps);
                    nonzero(c, Gen::Off(Part::Im(gamma), a, b))
                }
            },
            (_, Gen::Off(..)) => unreachable!("off-diagonal pair handled in off_off"),
        }
    }
}

fn nonzero(c: i64, g: Gen) -> Terms {
    if c == 0 {
        Vec::new()
    } else {
        alloc::vec![(g, int(c))]
    }
}

fn negate(terms: Terms) -> Terms {
    terms.into_iter().map(|(g, c)| (g, -c)).collect()
}

/// `[x, y]` in `family` at parameters `omega`, straight from the bracket
/// tables.
pub fn closed_form_bracket(
    family: Family,
    omega: &OmegaVector,
    x: GeneratorLabel,
    y: GeneratorLabel,
) -> Result<Vec<(GeneratorLabel, Rational)>> {
    for label in [x, y] {
        if !family.contains(&label, omega.n()) {
            return Err(Error::LabelFamilyMismatch { label, family });
        }
    }
    let table = Table { family, omega };
    let mut acc: BTreeMap<GeneratorLabel, Rational> = BTreeMap::new();
    for (g, c) in table.bracket(table.gen(x), table.gen(y)) {
        *acc.entry(table.label(g)).or_insert_with(Rational::zero) += &c;
    }
    Ok(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

/// The algebra of `family` at `omega` built from the closed-form tables.
pub fn build_family(family: Family, omega: &OmegaVector) -> LieAlgebra {
    let basis = family.basis(omega.n());
    let index: BTreeMap<GeneratorLabel, usize> = basis.iter().enumerate().map(|(i, l)| (*l, i)).collect();
    let mut brackets = Vec::new();
    for (i, &x) in basis.iter().enumerate() {
        for (j, &y) in basis.iter().enumerate().skip(i + 1) {
            let terms = closed_form_bracket(family, omega, x, y).expect("basis labels belong to the family");
            if terms.is_empty() {
                continue;
            }
            let mut combo: Combination = terms.into_iter().map(|(l, c)| (index[&l], c)).collect();
            combo.sort_by_key(|(k, _)| *k);
            brackets.push(((i, j), combo));
        }
    }
    LieAlgebra::from_brackets(family, omega.clone(), basis, brackets).expect("consistent basis")
}

pub fn build_so(omega: &OmegaVector) -> LieAlgebra {
    build_family(Family::So, omega)
}

pub fn build_su(omega: &OmegaVector) -> LieAlgebra {
    build_family(Family::Su, omega)
}

pub fn build_u(omega: &OmegaVector) -> LieAlgebra {
    build_family(Family::U, omega)
}

pub fn build_sq(omega: &OmegaVector) -> LieAlgebra {
    build_family(Family::Sq, omega)
}
