use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::cohomology::{coboundary, is_trivial};
use crate::lie::build_so;

use CoefficientName::*;

fn om(s: &str) -> OmegaVector {
    s.parse().unwrap()
}

fn active_names(cat: &ExtensionCoefficientCatalog) -> Vec<CoefficientName> {
    cat.active().map(|e| e.name).collect()
}

#[test]
fn names_round_trip() {
    for (s, name) in [
        ("alphaF[2,3]", AlphaF(2)),
        ("alphaL[0,1]", AlphaL(0)),
        ("beta[1,3]", Beta(1, 3)),
        ("alpha[2]", Alpha(2)),
        ("gamma[1]", Gamma(1)),
    ] {
        assert_eq!(s.parse::<CoefficientName>().unwrap(), name);
        assert_eq!(name.to_string(), s);
    }
    for bad in ["alphaF[2,4]", "beta[1]", "delta[1]", "alpha[x]", "alpha"] {
        assert!(bad.parse::<CoefficientName>().is_err(), "{bad}");
    }
}

#[test]
fn so_catalog_shape() {
    assert!(predict_so(&om("1")).entries.is_empty());
    let n2 = predict_so(&om("1,1"));
    assert_eq!(n2.entries.iter().map(|e| e.name).collect::<Vec<_>>(), vec![AlphaL(0), AlphaF(1)]);
    for n in 1..=6 {
        let cat = predict_so(&OmegaVector::from_signs(&vec![1; n]).unwrap());
        let count = |k: CoefficientType| cat.entries.iter().filter(|e| e.kind == k).count();
        assert_eq!(count(CoefficientType::II), 2 * n.saturating_sub(1));
        assert_eq!(count(CoefficientType::III), n.saturating_sub(1) * n.saturating_sub(2) / 2);
    }
}

#[test]
fn so_examples() {
    assert_eq!(predict_so(&om("1,1,1,1")).predicted_dim(), 0);
    let gal3 = predict_so(&om("0,0,1"));
    assert_eq!(active_names(&gal3), vec![AlphaL(0), AlphaF(2), Beta(1, 3)]);
    assert_eq!(predict_so(&om("0,0,0,0")).predicted_dim(), 9);
    assert_eq!(active_names(&predict_so(&om("0,0,1,1,1"))), vec![AlphaL(0)]);
    assert_eq!(active_names(&predict_so(&om("0,1"))), vec![AlphaF(1)]);
}

#[test]
fn unitary_examples() {
    assert_eq!(predict_su(&om("1,-1,1")).predicted_dim(), 0);
    assert_eq!(active_names(&predict_su(&om("0,1,1"))), vec![Alpha(1)]);
    assert_eq!(active_names(&predict_su(&om("0,0,1"))), vec![Alpha(1), Alpha(2), Beta(1, 2)]);
    assert_eq!(predict_u(&om("1,1")).predicted_dim(), 0);
    assert_eq!(active_names(&predict_u(&om("0,1"))), vec![Alpha(1), Gamma(1)]);
    assert_eq!(predict_u(&om("0,0,0")).predicted_dim(), 9);
    for w in ["1", "0,0", "-1,1", "0,0,0"] {
        assert_eq!(predict_sq(&om(w)).predicted_dim(), 0);
    }
}

#[test]
fn unitary_counts_follow_zero_pattern() {
    for n in 1..=4 {
        for w in OmegaVector::sign_patterns(n) {
            let z = ZeroPattern::of(&w).n;
            assert_eq!(predict_su(&w).predicted_dim(), z * (z + 1) / 2);
            assert_eq!(predict_u(&w).predicted_dim(), z * (z + 3) / 2);
        }
    }
}

#[test]
fn zero_pattern() {
    let z = ZeroPattern::of(&om("0,1,0,-1"));
    assert_eq!(z, ZeroPattern { n: 2, zero_set: vec![1, 3] });
}

#[test]
fn coefficient_cocycle_examples() {
    let w = om("0,1");
    let alg = build_so(&w);
    let xi = coefficient_cocycle(Family::So, &w, AlphaF(1)).unwrap();
    let (j01, j02) = (alg.index_of(&GeneratorLabel::J(0, 1)).unwrap(), alg.index_of(&GeneratorLabel::J(0, 2)).unwrap());
    assert_eq!(xi.get(j01, j02), Rational::one());
    assert_eq!(xi.entries().count(), 1);
    assert_eq!(is_trivial(&xi, &alg), Ok(false));

    let su = build_family(Family::Su, &om("0"));
    let a1 = coefficient_cocycle(Family::Su, &om("0"), Alpha(1)).unwrap();
    let (j, m) = (su.index_of(&GeneratorLabel::J(0, 1)).unwrap(), su.index_of(&GeneratorLabel::M(0, 1)).unwrap());
    assert_eq!(a1.get(j, m), Rational::one());
    assert_eq!(a1.entries().count(), 1);

    // every type II coefficient of so(4) is trivial
    let w = om("1,1,1");
    let so4 = build_so(&w);
    let coh = Cohomology::new(&so4);
    for e in predict_so(&w).entries.iter().filter(|e| e.kind == CoefficientType::II) {
        let xi = coefficient_cocycle(Family::So, &w, e.name).unwrap();
        if coh.is_cocycle(&xi).unwrap() {
            assert!(coh.is_trivial(&xi).unwrap(), "{}", e.name);
        }
    }
    // the pair with ω_3 α^F = ω_1 α^L is a cocycle, and trivial
    let pair = alpha_pair_cochain(&w, 1, Rational::one(), Rational::one()).unwrap();
    assert_eq!(coh.is_trivial(&pair), Ok(true));

    assert!(coefficient_cocycle(Family::So, &w, Gamma(1)).is_err());
    assert!(coefficient_cocycle(Family::So, &w, Beta(1, 2)).is_err());
    assert!(coefficient_cocycle(Family::Su, &w, Alpha(4)).is_err());
}

#[test]
fn pseudoextension_shift_is_exact() {
    let w = om("2,-1,3,1/2");
    let alg = build_so(&w);
    for k in 1..=2 {
        let af = Rational::new(5, 7).unwrap();
        let wk = w.get(k).unwrap().clone();
        let wk2 = w.get(k + 2).unwrap().clone();
        let al = &af * &wk2 / &wk;
        let pair = alpha_pair_cochain(&w, k, af.clone(), al).unwrap();
        let mu = pseudoextension_shift(&w, k, &af).unwrap();
        assert_eq!(coboundary(&mu, &alg).unwrap(), pair);
    }
    assert!(pseudoextension_shift(&om("0,1,1"), 1, &Rational::one()).is_err());
}

#[test]
fn crosscheck_examples() {
    for (family, w, dim) in [(Family::So, "0,1", 1), (Family::Su, "0,0", 3), (Family::Sq, "0,0", 0)] {
        let rep = crosscheck(family, &om(w)).unwrap();
        assert!(rep.matches, "{family} {w}: {rep:?}");
        assert_eq!(rep.solved, dim);
        assert_eq!(rep.predicted, dim);
    }
}

#[test]
fn crosscheck_small_sweep() {
    for n in 1..=3 {
        for w in OmegaVector::sign_patterns(n) {
            for family in [Family::So, Family::Su, Family::U] {
                let rep = crosscheck(family, &w).unwrap();
                assert!(rep.matches, "{family} ω={w}: {rep:?}");
            }
        }
    }
}

#[test]
fn predictor_is_monotone() {
    for n in 1..=5 {
        for w in OmegaVector::sign_patterns(n) {
            let base = predict_so(&w);
            for a in 1..=n {
                let c = predict_so(&w.contract(&[a]).unwrap());
                for (x, y) in base.entries.iter().zip(&c.entries) {
                    assert!(!x.active || y.active, "ω={w} a={a} {}", x.name);
                }
            }
        }
    }
}
