use kp_content::bivariate::BivariateSeries;
use kp_content::ring::int;
use kp_content::triangulations::{
    check_cubeconst, f_table, planar_closed_form, term, triangulations_by_enumeration, v_mu_series, ThetaPartials,
};

#[test]
fn recurrence_matches_enumerated_cubic_maps() {
    let table = f_table(2);
    for n in 1..=2 {
        let by_genus = triangulations_by_enumeration(n, 12).unwrap();
        for (g, count) in &by_genus {
            assert_eq!(&table.count(n as i64, *g as i64).unwrap(), count, "n={n} g={g}");
        }
        assert_eq!(by_genus.len(), (n + 1) / 2 + 1);
    }
}

#[test]
fn enumeration_bound_is_enforced() {
    assert!(triangulations_by_enumeration(2, 8).is_err());
    assert!(v_mu_series(&[3], 6, 10).is_err());
}

#[test]
fn planar_counts_to_ten() {
    let table = f_table(10);
    for n in 1..=10 {
        assert_eq!(table.count(n, 0).unwrap(), planar_closed_form(n as usize));
    }
}

#[test]
fn map_series_identities_through_six() {
    for check in check_cubeconst(6, 12).unwrap() {
        assert!(check.holds(), "{check:?}");
    }
}

#[test]
fn cycles_are_the_only_degree_two_maps() {
    let v = v_mu_series(&[1, 2, 3], 5, 10).unwrap().kill(&[1, 3]);
    let p2z = term(int(1), [0, 1, 0], 0, 1, 5);
    let expected = &term(int(1), [0, 1, 0], 2, 1, 5) * &BivariateSeries::one_minus_pow(&p2z, &int(-1)).unwrap();
    assert_eq!(v, expected);
}

#[test]
fn displayed_partials_match_maps_through_sixteen_darts() {
    let maps = ThetaPartials::from_maps(8, 16).unwrap();
    let table = ThetaPartials::from_table(&f_table(3), 8);
    assert_eq!(maps, table);
}
