use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::ck_matrix::{Family, GeneratorLabel, OmegaVector};
use crate::lie::{build_extended, build_family, build_so, build_sq, build_su, build_u};

use GeneratorLabel::J;

fn om(s: &str) -> OmegaVector {
    s.parse().unwrap()
}

fn r(n: i64) -> Rational {
    Rational::from(n)
}

// ---- dense oracle -------------------------------------------------------
//
// Evaluates dξ(x,y,z) = ξ([x,y],z) + ξ([y,z],x) + ξ([z,x],y) directly on the
// unit cochains and ranks the result with plain rational Gauss elimination.

fn dense_rank(mut m: Vec<Vec<Rational>>) -> usize {
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = m[rank][col].recip().unwrap();
        for i in 0..m.len() {
            if i != rank && !m[i][col].is_zero() {
                let f = &m[i][col] * &inv;
                let pivot = m[rank].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot) {
                    *x -= &(&f * p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn xi_eval(alg: &LieAlgebra, p: (usize, usize), x: usize, y: usize, z: usize) -> Rational {
    // ξ = e_p, evaluated on ([X_x, X_y], X_z)
    alg.bracket(x, y)
        .iter()
        .map(|(k, c)| {
            if (*k, z) == p {
                c.clone()
            } else if (z, *k) == p {
                -c
            } else {
                Rational::zero()
            }
        })
        .sum()
}

/// (dim Z², dim B²) by the oracle.
fn oracle(alg: &LieAlgebra) -> (usize, usize) {
    let n = alg.dim();
    let pairs = pair_table(n);
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                rows.push(
                    pairs
                        .iter()
                        .map(|&p| xi_eval(alg, p, i, j, l) + xi_eval(alg, p, j, l, i) + xi_eval(alg, p, l, i, j))
                        .collect(),
                );
            }
        }
    }
    let z2 = pairs.len() - dense_rank(rows);
    let cob = (0..n)
        .map(|k| pairs.iter().map(|&(i, j)| alg.structure_constant(i, j, k)).collect())
        .collect();
    (z2, dense_rank(cob))
}

fn abelian(n: usize) -> LieAlgebra {
    let omega = OmegaVector::from_signs(&vec![1; n]).unwrap();
    let basis = (1..=n).map(GeneratorLabel::B).collect();
    LieAlgebra::from_brackets(Family::Su, omega, basis, []).unwrap()
}

// ---- examples -----------------------------------------------------------

#[test]
fn small_systems_are_empty() {
    let so2 = build_so(&om("1"));
    assert_eq!(so2.dim(), 1);
    assert!(cocycle_equations(&so2).rows().is_empty());
    let ab = abelian(2);
    let sys = cocycle_equations(&ab);
    assert_eq!(sys.unknowns(), 1);
    assert!(sys.rows().is_empty());
    assert_eq!(h2(&ab).dim_z2, 1);
}

#[test]
fn so3_triple_is_identically_zero() {
    let so3 = build_so(&om("1,1"));
    let sys = cocycle_equations(&so3);
    assert_eq!(sys.unknowns(), 3);
    assert!(sys.rows().is_empty());
    assert_eq!(h2(&so3).dim_z2, 3);
}

#[test]
fn abelian_cocycles_are_everything() {
    let ab = abelian(4);
    assert!(cocycle_equations(&ab).rows().is_empty());
    let res = h2(&ab);
    assert_eq!((res.dim_z2, res.dim_b2, res.dim_h2), (6, 0, 6));
    let mu = OneCochain::from(vec![r(3), r(-1), r(2), r(7)]);
    assert!(coboundary(&mu, &ab).unwrap().is_zero());
}

#[test]
fn coboundary_examples() {
    let so3 = build_so(&om("1,1"));
    assert!(coboundary(&OneCochain::zero(3), &so3).unwrap().is_zero());
    let j12 = so3.index_of(&J(1, 2)).unwrap();
    let d = coboundary(&OneCochain::unit(3, j12), &so3).unwrap();
    let (j01, j02) = (so3.index_of(&J(0, 1)).unwrap(), so3.index_of(&J(0, 2)).unwrap());
    assert_eq!(d.entries().count(), 1);
    assert_eq!(d.get(j01, j02), r(1));
    assert_eq!(d.get(j02, j01), r(-1));
    assert!(coboundary(&OneCochain::zero(4), &so3).is_err());
}

#[test]
fn so3_contraction_dimensions() {
    for (w, z2, b2) in [("1,1", 3, 3), ("0,1", 3, 2), ("0,0", 3, 1)] {
        let alg = build_so(&om(w));
        assert_eq!(oracle(&alg), (z2, b2), "oracle ω={w}");
        let res = h2(&alg);
        assert_eq!((res.dim_z2, res.dim_b2), (z2, b2), "ω={w}");
        assert_eq!(cocycle_space(&alg).len(), z2);
        assert_eq!(coboundary_space(&alg).len(), b2);
    }
}

#[test]
fn h2_examples() {
    assert_eq!(h2(&build_so(&om("1,1"))).dim_h2, 0);
    assert_eq!(h2(&build_so(&om("0,1"))).dim_h2, 1);
    assert_eq!(h2(&build_so(&om("0,0,1"))).dim_h2, 3);
    for n in 1..=2 {
        for w in OmegaVector::sign_patterns(n) {
            assert_eq!(h2(&build_sq(&w)).dim_h2, 0, "sq ω={w}");
        }
    }
}

#[test]
fn triviality() {
    let iso2 = build_so(&om("0,1"));
    let d = coboundary(&OneCochain::from(vec![r(1), r(-2), r(5)]), &iso2).unwrap();
    assert!(is_trivial(&d, &iso2).unwrap());

    let (j01, j02) = (iso2.index_of(&J(0, 1)).unwrap(), iso2.index_of(&J(0, 2)).unwrap());
    let mut alpha = TwoCochain::zero(3);
    alpha.set(j01, j02, r(1)).unwrap();
    assert!(!is_trivial(&alpha, &iso2).unwrap());

    let flag = build_so(&om("0,0,0"));
    let mut bad = TwoCochain::zero(6);
    bad.set(flag.index_of(&J(0, 2)).unwrap(), flag.index_of(&J(2, 3)).unwrap(), r(1)).unwrap();
    assert_eq!(is_trivial(&bad, &flag), Err(Error::NotCocycle));
    assert!(cocycle_equations(&flag).first_violation(&bad).is_some());
    assert!(is_trivial(&TwoCochain::zero(5), &flag).is_err());
}

#[test]
fn class_rank_counts_independent_classes() {
    let iso2 = build_so(&om("0,1"));
    let coh = Cohomology::new(&iso2);
    let reps = coh.compute().h2_representatives;
    assert_eq!(reps.len(), 1);
    let shifted = reps[0].add(&coboundary(&OneCochain::unit(3, 2), &iso2).unwrap()).unwrap();
    assert_eq!(coh.class_rank(&[reps[0].clone(), shifted, reps[0].scale(&r(3))]).unwrap(), 1);
    assert_eq!(coh.class_rank(&[TwoCochain::zero(3)]).unwrap(), 0);
}

// ---- agreement and structure over small sweeps ---------------------------

fn small_cases() -> impl Iterator<Item = LieAlgebra> {
    let so = (1..=3).flat_map(|n| OmegaVector::sign_patterns(n).map(|w| build_so(&w)));
    let unitary = (1..=2).flat_map(|n| {
        OmegaVector::sign_patterns(n).flat_map(|w| [build_su(&w), build_u(&w)])
    });
    so.chain(unitary)
}

#[test]
fn solver_matches_dense_oracle() {
    for alg in small_cases() {
        let res = h2(&alg);
        assert_eq!(oracle(&alg), (res.dim_z2, res.dim_b2), "{} ω={}", alg.family(), alg.omega());
        assert_eq!(res.dim_h2, res.dim_z2 - res.dim_b2);
    }
}

#[test]
fn results_are_consistent() {
    for alg in small_cases() {
        let coh = Cohomology::new(&alg);
        let res = coh.compute();
        for b in &res.b2_basis {
            assert!(coh.is_cocycle(b).unwrap());
            assert!(coh.is_coboundary(b).unwrap());
        }
        for z in &res.z2_basis {
            assert!(coh.is_cocycle(z).unwrap());
            assert!(build_extended(&alg, z.clone()).unwrap().verify_jacobi());
        }
        assert_eq!(res.h2_representatives.len(), res.dim_h2);
        for rep in &res.h2_representatives {
            assert_eq!(coh.is_trivial(rep), Ok(false));
        }
        assert_eq!(coh.class_rank(&res.h2_representatives).unwrap(), res.dim_h2);
    }
}

#[test]
fn representatives_are_deterministic() {
    let w = om("0,0,1");
    let a = h2(&build_family(Family::So, &w));
    let b = h2(&build_family(Family::So, &w));
    assert_eq!(a, b);
    for rep in &a.h2_representatives {
        // leading coefficient normalized to one
        assert_eq!(rep.entries().next().unwrap().1, &r(1));
    }
}
