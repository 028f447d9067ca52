use kp_content::bivariate::BivariateSeries;
use kp_content::factorizations::{count, CountMethod, FactorizationSpec};
use kp_content::hurwitz::PolynomialInM;
use kp_content::kp::{kp_residual, log_tau};
use kp_content::partitions::{partitions_of, partitions_up_to};
use kp_content::perm::{is_transitive, Permutation};
use kp_content::plucker::{content_family, plucker_check_all, PluckerFamily};
use kp_content::ring::{int, rat};
use kp_content::symfunc::{principal_specialization, principal_specialization_by_contents};
use kp_content::{Partition, Rational};
use proptest::prelude::*;

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|d| {
        let parts = partitions_of(d);
        (0..parts.len()).prop_map(move |i| parts[i].clone())
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| *r != int(0))
}

fn permutation(d: usize) -> impl Strategy<Value = Permutation> {
    proptest::collection::vec(any::<u32>(), d).prop_map(|keys| {
        let mut idx: Vec<usize> = (0..keys.len()).collect();
        idx.sort_by_key(|&i| (keys[i], i));
        Permutation::from_images(idx).unwrap()
    })
}

fn family(ys: &[Rational], q: &[Rational], cap: usize) -> PluckerFamily {
    let c = cap as i64;
    content_family(|j| ys[(j + c) as usize].clone(), |i| q[i - 1].clone(), cap)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn composition_is_associative_with_inverses(a in permutation(7), b in permutation(7), c in permutation(7)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.cycle_type().weight(), 7);
        prop_assert_eq!(a.to_string().parse::<Permutation>().unwrap(), a.clone());
        prop_assert!(is_transitive(&[a.clone()]) == (a.num_cycles() == 1));
    }

    #[test]
    fn transitive_counts_are_bounded_and_symmetric(
        alpha in partition(4),
        beta_index in 0usize..5,
        a in proptest::collection::vec(0usize..3, 0..3),
    ) {
        let parts = partitions_of(alpha.weight());
        let beta = parts[beta_index % parts.len()].clone();
        let method = CountMethod::BruteForce { bound: 4 };
        let spec = FactorizationSpec::new(alpha.clone(), beta.clone(), a.clone()).unwrap();
        let all = count(&spec, false, method).unwrap();
        let transitive = count(&spec, true, method).unwrap();
        prop_assert!(transitive <= all);
        if alpha.weight() == 1 {
            prop_assert_eq!(&transitive, &all);
        }
        let mut reversed = a.clone();
        reversed.reverse();
        let other = FactorizationSpec::new(alpha, beta, reversed).unwrap();
        prop_assert_eq!(count(&other, true, method).unwrap(), transitive);
        prop_assert_eq!(count(&spec, true, CountMethod::Characters).unwrap(), count(&spec, true, method).unwrap());
    }

    #[test]
    fn principal_specialization_is_a_content_product(lambda in partition(6), x in rational()) {
        prop_assert_eq!(principal_specialization(&lambda, &x), principal_specialization_by_contents(&lambda, &x));
    }

    #[test]
    fn binomial_series_multiply(s in rational(), t in rational(), c in nonzero_rational()) {
        let x = BivariateSeries::monomial(c, [1, 0, 1, 0], 1, 6);
        let a = BivariateSeries::one_minus_pow(&x, &s).unwrap();
        let b = BivariateSeries::one_minus_pow(&x, &t).unwrap();
        prop_assert_eq!(&a * &b, BivariateSeries::one_minus_pow(&x, &(s + t)).unwrap());
    }

    #[test]
    fn interpolation_is_exact(coeffs in proptest::collection::vec(rational(), 1..6)) {
        let poly = PolynomialInM::new(coeffs.clone());
        let points: Vec<_> = (0..coeffs.len() as i64).map(|m| (int(m), poly.evaluate(&int(m)))).collect();
        prop_assert_eq!(PolynomialInM::interpolate(&points), poly);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn content_families_solve_both_characterizations(
        ys in proptest::collection::vec(nonzero_rational(), 15),
        q in proptest::collection::vec(rational(), 7),
    ) {
        let fam = family(&ys, &q, 7);
        prop_assert!(plucker_check_all(&fam, 3).unwrap().is_empty());
        let f = log_tau(&fam, 7).unwrap();
        prop_assert!(kp_residual(&f, 1).unwrap().is_zero());
        prop_assert!(kp_residual(&f, 2).unwrap().is_zero());
    }

    #[test]
    fn plucker_and_kp_agree_under_perturbation(
        ys in proptest::collection::vec(nonzero_rational(), 15),
        which in 0usize..7,
        delta in nonzero_rational(),
        perturb in any::<bool>(),
    ) {
        let q: Vec<Rational> = (1..=7).map(|i| rat(1, i)).collect();
        let mut fam = family(&ys, &q, 7);
        if perturb {
            let targets: Vec<Partition> = partitions_up_to(3).into_iter().filter(|l| !l.is_empty()).collect();
            fam = fam.perturbed(&targets[which % targets.len()], delta).unwrap();
        }
        let plucker_ok = plucker_check_all(&fam, 3).unwrap().is_empty();
        let kp_ok = kp_residual(&log_tau(&fam, 7).unwrap(), 1).unwrap().is_zero();
        prop_assert_eq!(plucker_ok, kp_ok);
        if !perturb {
            prop_assert!(plucker_ok);
        }
    }
}
