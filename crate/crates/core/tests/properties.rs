//! Randomized checks of the cohomology solver and the classification.

use ckalg_core::ck_matrix::{Family, OmegaVector};
use ckalg_core::classify::{crosscheck, predict};
use ckalg_core::cohomology::{coboundary, Cohomology, OneCochain, TwoCochain};
use ckalg_core::lie::{build_extended, build_family, from_matrices, verify_jacobi};
use ckalg_core::scalars::Rational;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::So), Just(Family::Su), Just(Family::U), Just(Family::Sq)]
}

/// A family with an ω of at most four (two for sq) signs.
fn case() -> impl Strategy<Value = (Family, OmegaVector)> {
    family().prop_flat_map(|f| {
        let max = if f == Family::Sq { 2 } else { 4 };
        (Just(f), prop::collection::vec(-1i8..=1, 1..=max))
            .prop_map(|(f, s)| (f, OmegaVector::from_signs(&s).unwrap()))
    })
}

fn cochain(dim: usize, values: &[(usize, usize, Rational)]) -> TwoCochain {
    let mut xi = TwoCochain::zero(dim);
    for (i, j, v) in values {
        if i % dim != j % dim {
            xi.add_to(i % dim, j % dim, v).unwrap();
        }
    }
    xi
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coboundaries_are_cocycles((f, w) in case(), seed in prop::collection::vec(rational(), 36)) {
        let alg = build_family(f, &w);
        let coh = Cohomology::new(&alg);
        let mu = OneCochain::from(seed[..alg.dim()].to_vec());
        let d = coboundary(&mu, &alg).unwrap();
        prop_assert!(coh.is_cocycle(&d).unwrap());
        prop_assert_eq!(coh.is_trivial(&d), Ok(true));
    }

    #[test]
    fn triviality_is_gauge_invariant(
        (f, w) in case(),
        coeffs in prop::collection::vec(rational(), 64),
        seed in prop::collection::vec(rational(), 36),
    ) {
        let alg = build_family(f, &w);
        let coh = Cohomology::new(&alg);
        let res = coh.compute();
        let mut xi = TwoCochain::zero(alg.dim());
        for (z, c) in res.z2_basis.iter().zip(&coeffs) {
            xi = xi.add(&z.scale(c)).unwrap();
        }
        let mu = OneCochain::from(seed[..alg.dim()].to_vec());
        let shifted = xi.add(&coboundary(&mu, &alg).unwrap()).unwrap();
        prop_assert_eq!(coh.is_trivial(&xi).unwrap(), coh.is_trivial(&shifted).unwrap());
    }

    #[test]
    fn dimensions_are_permutation_invariant((f, w) in case(), keys in prop::collection::vec(any::<u32>(), 36)) {
        let alg = build_family(f, &w);
        let mut perm: Vec<usize> = (0..alg.dim()).collect();
        perm.sort_by_key(|&i| (keys[i], i));
        let shuffled = alg.permuted(&perm).unwrap();
        prop_assert!(verify_jacobi(&shuffled));
        let (a, b) = (Cohomology::new(&alg).compute(), Cohomology::new(&shuffled).compute());
        prop_assert_eq!((a.dim_z2, a.dim_b2, a.dim_h2), (b.dim_z2, b.dim_b2, b.dim_h2));
    }

    #[test]
    fn extension_is_lie_iff_cocycle(
        (f, w) in case(),
        entries in prop::collection::vec((0usize..36, 0usize..36, rational()), 0..4),
    ) {
        let alg = build_family(f, &w);
        let coh = Cohomology::new(&alg);
        let xi = cochain(alg.dim(), &entries);
        let ext = build_extended(&alg, xi.clone()).unwrap();
        prop_assert_eq!(ext.verify_jacobi(), coh.is_cocycle(&xi).unwrap());
    }

    // dim H² depends on which ω vanish, not on their values
    #[test]
    fn cohomology_depends_only_on_zero_set(
        signs in prop::collection::vec(-1i8..=1, 1..=4),
        scales in prop::collection::vec(nonzero_rational(), 4),
        f in prop_oneof![Just(Family::So), Just(Family::Su), Just(Family::U)],
    ) {
        let coeffs = signs.iter().zip(&scales).map(|(s, c)| c * Rational::from(*s as i64)).collect();
        let w = OmegaVector::new(coeffs).unwrap();
        let canonical = OmegaVector::from_signs(&signs).unwrap();
        let rep = crosscheck(f, &w).unwrap();
        prop_assert!(rep.matches, "{:?}", rep);
        prop_assert_eq!(rep.solved, crosscheck(f, &canonical).unwrap().solved);
        prop_assert_eq!(predict(f, &w).predicted_dim(), rep.predicted);
    }

    #[test]
    fn matrices_match_tables_for_rational_omega(
        coeffs in prop::collection::vec(rational(), 1..=3),
        f in family(),
    ) {
        let coeffs = if f == Family::Sq { coeffs[..coeffs.len().min(2)].to_vec() } else { coeffs };
        let w = OmegaVector::new(coeffs).unwrap();
        prop_assert_eq!(from_matrices(f, &w).unwrap(), build_family(f, &w));
    }
}
