use kp_content::factorizations::CountMethod;
use kp_content::hurwitz::{
    double_hurwitz, double_hurwitz_genus0, hypermap_count, inclusion_exclusion_hurwitz, m_hypermap, m_hypermap_genus0,
    map_count, polynomial_in_m, CoverProfile,
};
use kp_content::partitions::partitions_of;
use kp_content::ring::{factorial, int};
use kp_content::{Error, Partition, Rational};

const BRUTE: CountMethod = CountMethod::BruteForce { bound: 6 };

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn profile(a: &str, b: &str, g: usize) -> CoverProfile {
    CoverProfile::new(p(a), p(b), g).unwrap()
}

#[test]
fn worked_values() {
    assert_eq!(double_hurwitz(&profile("1", "1", 0), BRUTE).unwrap(), int(1));
    assert_eq!(double_hurwitz(&profile("2", "1,1", 0), BRUTE).unwrap(), double_hurwitz_genus0(&p("2")));
    assert_eq!(m_hypermap(&profile("1", "1", 0), 2, BRUTE).unwrap(), m_hypermap_genus0(&p("1"), 2).unwrap());
    assert_eq!(m_hypermap(&profile("2", "1,1", 0), 1, BRUTE).unwrap(), int(1));
    assert_eq!(inclusion_exclusion_hurwitz(&profile("2,1", "3", 0), BRUTE).unwrap(), double_hurwitz(&profile("2,1", "3", 0), BRUTE).unwrap());
    assert_eq!(hypermap_count(&p("1"), &p("1"), 0, BRUTE).unwrap(), int(1));
    assert_eq!(map_count(&p("2"), 1, 2, BRUTE).unwrap(), int(1));
    assert_eq!(map_count(&p("2"), 1, 1, BRUTE).unwrap(), int(0));
}

#[test]
fn two_cycle_cover_is_constant_in_m() {
    let pr = profile("2", "2", 0);
    let poly = polynomial_in_m(&pr, BRUTE).unwrap();
    assert_eq!(poly.degree(), Some(0));
    assert_eq!(poly.coefficient(0), double_hurwitz(&pr, BRUTE).unwrap());
}

#[test]
fn degenerate_profiles() {
    assert!(CoverProfile::new(p("2"), p("1"), 0).is_err());
    assert!(matches!(m_hypermap_genus0(&p("1"), 1), Err(Error::DegenerateRange(_))));
    let empty = profile("1", "1", 1);
    assert_eq!(empty.r(), 2);
    assert_eq!(double_hurwitz(&empty, BRUTE).unwrap(), int(0));
    assert_eq!(polynomial_in_m(&empty, BRUTE).unwrap().degree(), None);
}

#[test]
fn enumeration_and_characters_agree_with_genus_one() {
    for d in 1..=4 {
        for a in partitions_of(d) {
            for b in partitions_of(d) {
                let pr = CoverProfile::new(a.clone(), b.clone(), 1).unwrap();
                if pr.r() > 4 {
                    continue;
                }
                let brute = double_hurwitz(&pr, BRUTE).unwrap();
                let chars = double_hurwitz(&pr, CountMethod::Characters).unwrap();
                assert_eq!(brute, chars, "{pr:?}");
                for m in 1..=3 {
                    assert_eq!(
                        m_hypermap(&pr, m, BRUTE).unwrap(),
                        m_hypermap(&pr, m, CountMethod::Characters).unwrap(),
                        "{pr:?} m={m}"
                    );
                }
            }
        }
    }
}

#[test]
fn hypermaps_rescale_to_first_m_hypermap_numbers() {
    for d in 1..=4 {
        for a in partitions_of(d) {
            for b in partitions_of(d) {
                let pr = CoverProfile::new(a.clone(), b.clone(), 0).unwrap();
                let m = hypermap_count(&a, &b, 0, CountMethod::Characters).unwrap();
                let scale = Rational::new(factorial(d as u64 - 1) * a.aut_size() * b.aut_size(), factorial(d as u64));
                assert_eq!(m_hypermap(&pr, 1, CountMethod::Characters).unwrap(), m * scale);
            }
        }
    }
}

#[test]
fn genus_zero_closed_form_at_degree_five() {
    for a in partitions_of(5) {
        let pr = CoverProfile::new(a.clone(), Partition::ones(5), 0).unwrap();
        assert_eq!(double_hurwitz(&pr, CountMethod::Characters).unwrap(), double_hurwitz_genus0(&a), "{a}");
    }
}
