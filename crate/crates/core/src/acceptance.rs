//! End-to-end checks of the main results, each timed and reported on one line.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::characters::CharacterTable;
use crate::error::Result;
use crate::factorizations::{count_tuples_bruteforce, count_tuples_characters, CountMethod, FactorizationSpec};
use crate::hurwitz::{double_hurwitz, double_hurwitz_genus0, m_hypermap, m_hypermap_genus0, polynomial_in_m, CoverProfile};
use crate::kp::{kp_residual, log_tau};
use crate::partitions::{partitions_of, partitions_up_to, Partition};
use crate::perm::{is_transitive, Permutation};
use crate::plucker::{content_family, plucker_check_all, plucker_lhs, GenericPoint, PluckerFamily};
use crate::ring::{factorial, format_rational, int, rat, Rational};
use crate::series::GradedSeries;
use crate::symfunc::{
    power_sum_from_schur, principal_specialization, principal_specialization_by_contents, schur_from_characters,
    schur_in_p,
};
use crate::triangulations::{check_cubeconst, f_table, kp_triangulation_partials};

/// The outcome of one criterion.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub number: usize,
    pub title: &'static str,
    pub summary: String,
    pub failures: Vec<String>,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl CriterionReport {
    pub fn within_limit(&self) -> bool {
        self.limit.is_none_or(|l| self.elapsed <= l)
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.within_limit()
    }

    /// One line of report; without timings it is reproducible byte for byte.
    pub fn render(&self, timings: bool) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut line = format!("[{status}] {}. {}", self.number, self.title);
        if timings {
            line.push_str(&format!(" ({:.2}s", self.elapsed.as_secs_f64()));
            if let Some(l) = self.limit {
                line.push_str(&format!(", limit {}s", l.as_secs()));
            }
            line.push(')');
        }
        line.push_str(&format!(": {}", self.summary));
        for failure in &self.failures {
            line.push_str(&format!("; {failure}"));
        }
        line
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

fn run(
    number: usize,
    title: &'static str,
    limit: Option<Duration>,
    body: impl FnOnce(&mut Vec<String>) -> Result<String>,
) -> CriterionReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let summary = match body(&mut failures) {
        Ok(s) => s,
        Err(e) => {
            failures.push(format!("error: {e}"));
            "aborted".to_string()
        }
    };
    CriterionReport { number, title, summary, failures, elapsed: start.elapsed(), limit }
}

fn p(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

/// Triangulation counts: the small table, then integrality up to `n = 40`.
pub fn triangulation_table() -> CriterionReport {
    run(1, "triangulation table", Some(Duration::from_secs(31)), |failures| {
        let start = Instant::now();
        let small = f_table(2);
        for (n, g, expected) in [(1, 0, 4), (1, 1, 1), (2, 0, 32), (2, 1, 28)] {
            let got = small.count(n, g)?;
            if got != BigInt::from(expected) {
                failures.push(format!("F({n},{g}) = {got}, expected {expected}"));
            }
        }
        let small_time = start.elapsed();
        if small_time > Duration::from_secs(1) {
            failures.push(format!("small table took {:.2}s", small_time.as_secs_f64()));
        }
        let start = Instant::now();
        let table = f_table(40);
        let mut checked = 0;
        for (n, g) in table.entries().collect::<Vec<_>>() {
            match table.count(n, g) {
                Ok(c) if c >= BigInt::zero() => checked += 1,
                Ok(c) => failures.push(format!("F({n},{g}) = {c} is negative")),
                Err(e) => failures.push(format!("F({n},{g}): {e}")),
            }
        }
        let big_time = start.elapsed();
        if big_time > Duration::from_secs(30) {
            failures.push(format!("table to n = 40 took {:.2}s", big_time.as_secs_f64()));
        }
        Ok(format!("F(1,0)=4 F(1,1)=1 F(2,0)=32 F(2,1)=28; {checked} entries up to n = 40 integral and nonnegative"))
    })
}

fn first_only(i: usize) -> Rational {
    if i == 1 {
        int(1)
    } else {
        int(0)
    }
}

/// The three KP equations on `log Σ C(λ)|_{y_j = 1+j} s_λ(1, 0, …) s_λ(p)` at weight 8.
pub fn kp_residuals() -> CriterionReport {
    run(2, "KP residuals", Some(Duration::from_secs(120)), |failures| {
        let family = content_family(|j| int(1 + j), first_only, 8);
        let f = log_tau(&family, 8)?;
        let mut valid = Vec::new();
        for k in 1..=3 {
            let r = kp_residual(&f, k)?;
            valid.push(r.cap());
            if !r.is_zero() {
                failures.push(format!("equation {k} has residual {r}"));
            }
        }
        Ok(format!("equations 1-3 vanish through weights {valid:?}"))
    })
}

/// Content families at generic points pass every relation up to size 3;
/// the all-ones family fails the `((2), (1))` relation.
pub fn plucker_sweep() -> CriterionReport {
    run(3, "Plucker sweep", Some(Duration::from_secs(30)), |failures| {
        let mut counts = Vec::new();
        for seed in [11, 23, 37] {
            let family = GenericPoint::new(seed, 7).content_family(7);
            let v = plucker_check_all(&family, 3)?;
            counts.push(v.len());
            if let Some(first) = v.first() {
                failures.push(format!("seed {seed}: {} violations, first at ({}, {})", v.len(), first.alpha, first.beta));
            }
        }
        let ones: PluckerFamily = PluckerFamily::all_ones(7);
        let value = plucker_lhs(&p("2"), &p("1"), &ones)?;
        let rejected = !plucker_check_all(&ones, 3)?.is_empty();
        if !rejected {
            failures.push("all-ones family passes".into());
        }
        if value != int(1) {
            failures.push(format!("all-ones ((2),(1)) relation is {}, not 1", format_rational(&value)));
        }
        Ok(format!("generic violations {counts:?}; all-ones rejected, ((2),(1)) = {}", format_rational(&value)))
    })
}

/// Vectors `a` of length at most 3 with `Σ a_i ≤ 4`.
fn deficiency_vectors() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..=4 {
        for b in 0..=4 - a {
            for c in 0..=4 - a - b {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

/// Character-formula and enumerated counts agree for `d ≤ 5`.
pub fn factorization_oracles() -> CriterionReport {
    run(4, "factorization oracle equivalence", Some(Duration::from_secs(300)), |failures| {
        let mut compared = 0;
        for d in 1..=5 {
            let parts = partitions_of(d);
            for alpha in &parts {
                for beta in &parts {
                    for a in deficiency_vectors() {
                        let spec = FactorizationSpec::new(alpha.clone(), beta.clone(), a)?;
                        let brute = count_tuples_bruteforce(&spec, false, 5)?;
                        let chars = count_tuples_characters(&spec)?;
                        compared += 1;
                        if brute != chars {
                            failures.push(format!("{spec:?}: enumeration {brute}, characters {chars}"));
                        }
                    }
                }
            }
        }
        Ok(format!("{compared} specifications agree"))
    })
}

/// The genus-0 closed forms against counts.
pub fn closed_forms() -> CriterionReport {
    run(5, "closed forms", None, |failures| {
        let method = CountMethod::BruteForce { bound: 5 };
        let mut n = 0;
        for d in 1..=4 {
            for alpha in partitions_of(d) {
                let profile = CoverProfile::new(alpha.clone(), Partition::ones(d), 0)?;
                let h = double_hurwitz(&profile, method)?;
                let closed = double_hurwitz_genus0(&alpha);
                n += 1;
                if h != closed {
                    failures.push(format!("H for {alpha}: {h} vs {closed}"));
                }
            }
        }
        let mut m_checks = 0;
        for d in 1..=3 {
            for alpha in partitions_of(d) {
                let profile = CoverProfile::new(alpha.clone(), Partition::ones(d), 0)?;
                for m in [2, 3] {
                    let direct = m_hypermap(&profile, m, method)?;
                    let closed = m_hypermap_genus0(&alpha, m)?;
                    m_checks += 1;
                    if direct != closed {
                        failures.push(format!("N for {alpha}, m = {m}: {direct} vs {closed}"));
                    }
                }
            }
        }
        Ok(format!("{n} Hurwitz numbers and {m_checks} m-hypermap numbers match"))
    })
}

/// `N^{(g,m)}` is a polynomial in `m` of degree `r` with leading coefficient `H/r!`.
pub fn polynomiality() -> CriterionReport {
    run(6, "polynomiality in m", None, |failures| {
        let method = CountMethod::BruteForce { bound: 5 };
        let mut n = 0;
        for d in 1..=3 {
            for alpha in partitions_of(d) {
                for beta in partitions_of(d) {
                    for g in 0..=1 {
                        let profile = CoverProfile::new(alpha.clone(), beta.clone(), g)?;
                        let r = profile.r();
                        let poly = polynomial_in_m(&profile, method)?;
                        let h = double_hurwitz(&profile, method)?;
                        n += 1;
                        if poly.degree() != Some(r) {
                            failures.push(format!(
                                "({alpha}), ({beta}), g = {g}: degree {:?} instead of {r}, H = {}",
                                poly.degree(),
                                format_rational(&h)
                            ));
                        }
                        let lead = poly.coefficient(r) * Rational::from_integer(factorial(r as u64));
                        if lead != h {
                            failures.push(format!("({alpha}), ({beta}), g = {g}: r! lead {lead} vs H {h}"));
                        }
                    }
                }
            }
        }
        Ok(format!("{n} profiles interpolated"))
    })
}

/// The worked hypermap example.
pub fn hypermap_example() -> CriterionReport {
    run(7, "hypermap triple", None, |failures| {
        let sigma = Permutation::from_cycles("(1 7)(2 5)(3)(4 8 9)(6)", 9)?;
        let gamma = Permutation::from_cycles("(1 8 5)(2 4 3)(6 7 9)", 9)?;
        let pi = Permutation::from_cycles("(1 6 9)(2 8)(3 4 7 5)", 9)?;
        let product = sigma.compose(&gamma).compose(&pi);
        if !product.is_identity() {
            failures.push(format!("σγπ = {product}"));
        }
        if !is_transitive(&[sigma.clone(), gamma.clone(), pi.clone()]) {
            failures.push("not transitive".into());
        }
        Ok(format!(
            "σγπ = ι, transitive; cycle types {}, {}, {}",
            sigma.cycle_type(),
            gamma.cycle_type(),
            pi.cycle_type()
        ))
    })
}

/// Map series identities through `z^6` and the first KP equation on the
/// triangulation partials for `n ≤ 3`.
pub fn series_identities() -> CriterionReport {
    run(8, "series identities", None, |failures| {
        for check in check_cubeconst(6, 12)? {
            if let Some((z, e, l, r)) = &check.first_failure {
                failures.push(format!("{} fails at z^{z} {e:?}: {l} vs {r}", check.name));
            }
        }
        let kp = kp_triangulation_partials(3)?;
        for f in &kp {
            failures.push(format!("KP coefficient at (n, g) = ({}, {}) is {}", f.n, f.g, f.value));
        }
        Ok("both map series identities hold through z^6; KP coefficients vanish for n ≤ 3".into())
    })
}

/// Schur functions, power sums and characters.
pub fn symmetric_functions() -> CriterionReport {
    run(9, "symmetric-function core", None, |failures| {
        for d in 0..=8 {
            for mu in partitions_of(d) {
                let round = power_sum_from_schur(&mu);
                if round != GradedSeries::monomial(mu.clone(), int(1), d) {
                    failures.push(format!("p_{mu} round trip gives {round}"));
                }
            }
        }
        for d in 1..=7 {
            if !CharacterTable::new(d).is_orthogonal() {
                failures.push(format!("character table of S_{d} is not orthogonal"));
            }
        }
        for lambda in partitions_up_to(8) {
            if schur_in_p(&lambda) != schur_from_characters(&lambda) {
                failures.push(format!("Jacobi-Trudi and characters differ at {lambda}"));
            }
        }
        let points = [int(1), int(2), int(-3), rat(1, 2), rat(-5, 7)];
        for lambda in partitions_up_to(7) {
            for x in &points {
                if principal_specialization(&lambda, x) != principal_specialization_by_contents(&lambda, x) {
                    failures.push(format!("principal specialization of s_{lambda} at {x}"));
                }
            }
        }
        Ok("round trip |μ| ≤ 8, orthogonality d ≤ 7, Jacobi-Trudi |λ| ≤ 8, principal specialization |λ| ≤ 7".into())
    })
}

/// Every criterion, in order.
pub fn run_all() -> Vec<CriterionReport> {
    vec![
        triangulation_table(),
        kp_residuals(),
        plucker_sweep(),
        factorization_oracles(),
        closed_forms(),
        polynomiality(),
        hypermap_example(),
        series_identities(),
        symmetric_functions(),
    ]
}
