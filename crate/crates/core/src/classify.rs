//! The closed-form classification of central extensions of the CK families,
//! and its cross-check against the exact solver.
//!
//! Each family has a catalog of named extension coefficients. A coefficient
//! is *active* for a given `ω` when it survives as a non-trivial extension;
//! the predicted `dim H²` is the number of active entries. Type I
//! coefficients (always removable) are not listed at all.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::ck_matrix::{Family, GeneratorLabel, OmegaVector};
use crate::cohomology::{Cohomology, OneCochain, TwoCochain};
use crate::error::{Error, Result};
use crate::lie::build_family;
use crate::scalars::Rational;

/// Name of an extension coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoefficientName {
    /// `α^F_{b,b+1}` (orthogonal).
    AlphaF(usize),
    /// `α^L_{a,a+1}` (orthogonal).
    AlphaL(usize),
    /// `β_{kl}`; for the orthogonal family `β_{b+1,d+1}`.
    Beta(usize, usize),
    /// `α_k` (unitary).
    Alpha(usize),
    /// `γ_k` (unitary with centre).
    Gamma(usize),
}

impl fmt::Display for CoefficientName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoefficientName::AlphaF(b) => write!(f, "alphaF[{},{}]", b, b + 1),
            CoefficientName::AlphaL(a) => write!(f, "alphaL[{},{}]", a, a + 1),
            CoefficientName::Beta(k, l) => write!(f, "beta[{k},{l}]"),
            CoefficientName::Alpha(k) => write!(f, "alpha[{k}]"),
            CoefficientName::Gamma(k) => write!(f, "gamma[{k}]"),
        }
    }
}

impl FromStr for CoefficientName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownCoefficient(s.to_string());
        let (head, rest) = s.split_once('[').ok_or_else(bad)?;
        let args = rest.strip_suffix(']').ok_or_else(bad)?;
        let nums = args
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        match (head, nums.as_slice()) {
            ("alphaF", &[b, c]) if c == b + 1 => Ok(CoefficientName::AlphaF(b)),
            ("alphaL", &[a, c]) if c == a + 1 => Ok(CoefficientName::AlphaL(a)),
            ("beta", &[k, l]) => Ok(CoefficientName::Beta(k, l)),
            ("alpha", &[k]) => Ok(CoefficientName::Alpha(k)),
            ("gamma", &[k]) => Ok(CoefficientName::Gamma(k)),
            _ => Err(bad()),
        }
    }
}

/// Type II coefficients are pseudoextensions (trivial before contraction);
/// type III ones are constrained and non-trivial whenever nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoefficientType {
    II,
    III,
}

impl fmt::Display for CoefficientType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoefficientType::II => "II",
            CoefficientType::III => "III",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: CoefficientName,
    pub kind: CoefficientType,
    pub active: bool,
    pub constraint_note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionCoefficientCatalog {
    pub family: Family,
    pub omega: OmegaVector,
    pub entries: Vec<CatalogEntry>,
}

impl ExtensionCoefficientCatalog {
    /// Predicted `dim H²`.
    pub fn predicted_dim(&self) -> usize {
        self.entries.iter().filter(|e| e.active).count()
    }

    pub fn active(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(|e| e.active)
    }

    pub fn get(&self, name: CoefficientName) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// Which `ω_a` vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroPattern {
    pub n: usize,
    /// 1-based indices `a` with `ω_a = 0`, ascending.
    pub zero_set: Vec<usize>,
}

impl ZeroPattern {
    pub fn of(omega: &OmegaVector) -> Self {
        let zero_set = omega.zero_set();
        ZeroPattern { n: zero_set.len(), zero_set }
    }
}

fn entry(name: CoefficientName, kind: CoefficientType, active: bool, note: String) -> CatalogEntry {
    CatalogEntry { name, kind, active, constraint_note: note }
}

/// `ω_a = 0`, with absent indices (`0` and `N+1`) reading as zero.
fn vanishes(omega: &OmegaVector, a: usize) -> bool {
    omega.present(a).is_none_or(Rational::is_zero)
}

/// The factors `ω` of the `β_{b+1,d+1}` constraints `ω β = 0`, dropping
/// those involving `ω_0` or `ω_{N+1}`. Each factor is a list of indices
/// whose product it is.
pub fn beta_factors(n: usize, b: usize, d: usize) -> Vec<Vec<usize>> {
    let raw: Vec<Vec<usize>> = if d == b + 2 {
        alloc::vec![alloc::vec![b], alloc::vec![b + 1, b + 2], alloc::vec![b + 2, b + 3], alloc::vec![b + 4]]
    } else {
        alloc::vec![alloc::vec![b], alloc::vec![b + 2], alloc::vec![d], alloc::vec![d + 2]]
    };
    raw.into_iter().filter(|f| f.iter().all(|&a| a >= 1 && a <= n)).collect()
}

fn factor_vanishes(omega: &OmegaVector, factor: &[usize]) -> bool {
    factor.iter().any(|&a| vanishes(omega, a))
}

fn factor_text(factor: &[usize]) -> String {
    factor.iter().map(|a| format!("w{a}")).collect::<Vec<_>>().join("*")
}

pub fn predict_so(omega: &OmegaVector) -> ExtensionCoefficientCatalog {
    use CoefficientName::*;
    use CoefficientType::*;
    let n = omega.n();
    let mut entries = Vec::new();
    if n >= 2 {
        entries.push(entry(AlphaL(0), II, vanishes(omega, 2), "non-trivial iff w2 = 0".into()));
        // pairs α^F_{k,k+1}, α^L_{k,k+1} for k = a+1 = 1..N-2
        for k in 1..n - 1 {
            let active = vanishes(omega, k) && vanishes(omega, k + 2);
            let note = format!("w{} alphaF = w{} alphaL; non-trivial iff w{} = w{} = 0", k + 2, k, k, k + 2);
            entries.push(entry(AlphaF(k), II, active, note.clone()));
            entries.push(entry(AlphaL(k), II, active, note));
        }
        entries.push(entry(AlphaF(n - 1), II, vanishes(omega, n - 1), format!("non-trivial iff w{} = 0", n - 1)));
    }
    for b in 0..n.saturating_sub(2) {
        for d in b + 2..n {
            let factors = beta_factors(n, b, d);
            let active = factors.iter().all(|f| factor_vanishes(omega, f));
            let note = factors.iter().map(|f| format!("{} beta = 0", factor_text(f))).collect::<Vec<_>>().join(", ");
            entries.push(entry(Beta(b + 1, d + 1), III, active, note));
        }
    }
    ExtensionCoefficientCatalog { family: Family::So, omega: omega.clone(), entries }
}

fn unitary_entries(omega: &OmegaVector) -> Vec<CatalogEntry> {
    use CoefficientName::*;
    use CoefficientType::*;
    let n = omega.n();
    let mut entries = Vec::new();
    for k in 1..=n {
        entries.push(entry(Alpha(k), II, vanishes(omega, k), format!("non-trivial iff w{k} = 0")));
    }
    for k in 1..=n {
        for l in k + 1..=n {
            let active = vanishes(omega, k) && vanishes(omega, l);
            entries.push(entry(Beta(k, l), III, active, format!("w{k} beta = 0, w{l} beta = 0")));
        }
    }
    entries
}

pub fn predict_su(omega: &OmegaVector) -> ExtensionCoefficientCatalog {
    ExtensionCoefficientCatalog { family: Family::Su, omega: omega.clone(), entries: unitary_entries(omega) }
}

pub fn predict_u(omega: &OmegaVector) -> ExtensionCoefficientCatalog {
    let mut entries = unitary_entries(omega);
    for k in 1..=omega.n() {
        entries.push(entry(
            CoefficientName::Gamma(k),
            CoefficientType::III,
            vanishes(omega, k),
            format!("w{k} gamma = 0"),
        ));
    }
    ExtensionCoefficientCatalog { family: Family::U, omega: omega.clone(), entries }
}

/// The quaternionic family has no non-trivial extensions at all.
pub fn predict_sq(omega: &OmegaVector) -> ExtensionCoefficientCatalog {
    ExtensionCoefficientCatalog { family: Family::Sq, omega: omega.clone(), entries: Vec::new() }
}

pub fn predict(family: Family, omega: &OmegaVector) -> ExtensionCoefficientCatalog {
    match family {
        Family::So => predict_so(omega),
        Family::Su => predict_su(omega),
        Family::U => predict_u(omega),
        Family::Sq => predict_sq(omega),
    }
}

/// Writes coefficients into the bracket slots where they appear.
struct SlotWriter {
    index: BTreeMap<GeneratorLabel, usize>,
    xi: TwoCochain,
}

impl SlotWriter {
    fn new(family: Family, n: usize) -> Self {
        let basis = family.basis(n);
        let xi = TwoCochain::zero(basis.len());
        SlotWriter { index: basis.into_iter().enumerate().map(|(i, l)| (l, i)).collect(), xi }
    }

    fn add(&mut self, x: GeneratorLabel, y: GeneratorLabel, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let (i, j) = (self.index[&x], self.index[&y]);
        self.xi.add_to(i, j, c).expect("labels from the basis");
    }
}

/// `Σ c · (cochain of name)` over `terms`: each coefficient placed
/// exactly in the bracket slots where it appears in the extended brackets.
pub fn coefficient_cochain(family: Family, omega: &OmegaVector, terms: &[(CoefficientName, Rational)]) -> Result<TwoCochain> {
    use CoefficientName::*;
    use GeneratorLabel::{B, I, J, M};
    let n = omega.n();
    let catalog = predict(family, omega);
    let mut out = SlotWriter::new(family, n);
    for (name, c) in terms {
        if catalog.get(*name).is_none() {
            return Err(Error::UnknownCoefficient(name.to_string()));
        }
        match *name {
            // [J_ab, J_{a,b+1}] ∋ ω_{a,b-1} α^F_{b,b+1}
            AlphaF(b) => {
                for a in 0..b {
                    out.add(J(a, b), J(a, b + 1), &(omega.w(a, b - 1) * c));
                }
            }
            // [J_ac, J_{a+1,c}] ∋ ω_{a+2,c} α^L_{a,a+1}
            AlphaL(a) => {
                for cc in a + 2..=n {
                    out.add(J(a, cc), J(a + 1, cc), &(omega.w(a + 2, cc) * c));
                }
            }
            Beta(k, l) if family == Family::So => {
                let (b, d) = (k - 1, l - 1);
                out.add(J(b, b + 1), J(d, d + 1), c);
                if d == b + 2 {
                    out.add(J(b, b + 2), J(b + 1, b + 3), &-(omega.w(b + 1, b + 2) * c));
                }
            }
            Beta(k, l) => out.add(B(k), B(l), c),
            // [J_ab, M_ab] ∋ ω_{a,s-1} ω_{sb} α_s for a < s ≤ b
            Alpha(s) => {
                for a in 0..s {
                    for b in s..=n {
                        out.add(J(a, b), M(a, b), &(omega.w(a, s - 1) * omega.w(s, b) * c));
                    }
                }
            }
            Gamma(k) => out.add(B(k), I, c),
        }
    }
    Ok(out.xi)
}

/// The cochain of a single named coefficient set to 1.
pub fn coefficient_cocycle(family: Family, omega: &OmegaVector, name: CoefficientName) -> Result<TwoCochain> {
    coefficient_cochain(family, omega, &[(name, Rational::one())])
}

/// The orthogonal pair at `(k, k+1)` (`k = a+1`, `1 ≤ k ≤ N-2`) with the
/// given values of `α^F_{k,k+1}` and `α^L_{k,k+1}`.
pub fn alpha_pair_cochain(omega: &OmegaVector, k: usize, alpha_f: Rational, alpha_l: Rational) -> Result<TwoCochain> {
    coefficient_cochain(
        Family::So,
        omega,
        &[(CoefficientName::AlphaF(k), alpha_f), (CoefficientName::AlphaL(k), alpha_l)],
    )
}

/// The generator shift `J_{k,k+1} → J_{k,k+1} + (α^F/ω_k) Ξ` removing an
/// orthogonal pair, as a 1-cochain on the `so` basis. Requires `ω_k ≠ 0`.
pub fn pseudoextension_shift(omega: &OmegaVector, k: usize, alpha_f: &Rational) -> Result<OneCochain> {
    let n = omega.n();
    let wk = omega.get(k)?;
    if wk.is_zero() || k >= n {
        return Err(Error::IndexOutOfRange { index: k, max: n.saturating_sub(1) });
    }
    let basis = Family::So.basis(n);
    let pos = basis.iter().position(|l| *l == GeneratorLabel::J(k, k + 1)).expect("J(k,k+1) in basis");
    let mut values = alloc::vec![Rational::zero(); basis.len()];
    values[pos] = alpha_f / wk;
    Ok(OneCochain::from(values))
}

/// Solver verdict on one catalog entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryVerdict {
    pub name: CoefficientName,
    pub kind: CoefficientType,
    pub active: bool,
    pub is_cocycle: bool,
    /// `None` when the cochain is not a cocycle.
    pub trivial: Option<bool>,
}

impl EntryVerdict {
    /// Active entries must be non-trivial cocycles; inactive ones must be
    /// trivial or excluded by the cocycle conditions.
    pub fn consistent(&self) -> bool {
        if self.active {
            self.trivial == Some(false)
        } else {
            self.trivial != Some(false)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub family: Family,
    pub omega: OmegaVector,
    pub predicted: usize,
    pub dim_z2: usize,
    pub dim_b2: usize,
    pub solved: usize,
    pub entries: Vec<EntryVerdict>,
    /// Dimension of the span of the active cochains in `H²`.
    pub active_rank: usize,
    pub matches: bool,
}

/// Predictor against solver for one algebra.
pub fn crosscheck(family: Family, omega: &OmegaVector) -> Result<CrosscheckReport> {
    let alg = build_family(family, omega);
    let coh = Cohomology::new(&alg);
    let result = coh.compute();
    let catalog = predict(family, omega);
    let mut entries = Vec::with_capacity(catalog.entries.len());
    let mut active = Vec::new();
    for e in &catalog.entries {
        let xi = coefficient_cocycle(family, omega, e.name)?;
        let is_cocycle = coh.is_cocycle(&xi)?;
        let trivial = if is_cocycle { Some(coh.is_coboundary(&xi)?) } else { None };
        if e.active {
            active.push(xi);
        }
        entries.push(EntryVerdict { name: e.name, kind: e.kind, active: e.active, is_cocycle, trivial });
    }
    let predicted = catalog.predicted_dim();
    let active_rank = coh.class_rank(&active)?;
    let matches = predicted == result.dim_h2
        && active_rank == predicted
        && entries.iter().all(EntryVerdict::consistent);
    Ok(CrosscheckReport {
        family,
        omega: omega.clone(),
        predicted,
        dim_z2: result.dim_z2,
        dim_b2: result.dim_b2,
        solved: result.dim_h2,
        entries,
        active_rank,
        matches,
    })
}

#[cfg(test)]
mod tests;
