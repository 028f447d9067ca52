//! Complete and Schur symmetric functions written in the power sums.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::characters::{character, dimension};
use crate::error::Result;
use crate::partitions::{partitions_of, Partition};
use crate::ring::{factorial, Coefficient, Rational};
use crate::series::GradedSeries;

fn h_cache() -> &'static RwLock<Vec<GradedSeries>> {
    static CACHE: OnceLock<RwLock<Vec<GradedSeries>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![GradedSeries::one(0)]))
}

fn schur_cache() -> &'static RwLock<HashMap<Partition, GradedSeries>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, GradedSeries>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `h_i` in the power sums, homogeneous of weight `i`, from
/// `i·h_i = Σ_{k=1}^{i} p_k h_{i-k}`.
fn h_exact(i: usize) -> GradedSeries {
    if let Some(h) = h_cache().read().expect("h cache poisoned").get(i) {
        return h.clone();
    }
    let mut cache = h_cache().write().expect("h cache poisoned");
    while cache.len() <= i {
        let n = cache.len();
        let mut acc = GradedSeries::zero(n);
        for k in 1..=n {
            let term = &GradedSeries::power_sum(k, n) * &cache[n - k].with_cap(n);
            acc = &acc + &term;
        }
        cache.push(acc.scale(&Rational::new(BigInt::from(1), BigInt::from(n))));
    }
    cache[i].clone()
}

/// The complete symmetric function `h_i` in the power sums, truncated at `cap`.
pub fn complete_h(i: usize, cap: usize) -> GradedSeries {
    h_exact(i).with_cap(cap)
}

/// `s_λ` by the Jacobi–Trudi determinant `det(h_{λ_i - i + j})`.
///
/// The determinant is expanded row by row over the set of columns used so
/// far, which keeps the work at `2^l · l` products of sparse series.
pub fn schur_in_p(lambda: &Partition) -> GradedSeries {
    if let Some(s) = schur_cache().read().expect("schur cache poisoned").get(lambda) {
        return s.clone();
    }
    let cap = lambda.weight();
    let n = lambda.len();
    let parts = lambda.parts();
    let entry = |i: usize, j: usize| -> Option<GradedSeries> {
        let idx = parts[i] as i64 - i as i64 + j as i64;
        if idx < 0 {
            None
        } else {
            Some(h_exact(idx as usize).with_cap(cap))
        }
    };
    let mut layer: HashMap<u32, GradedSeries> = HashMap::new();
    layer.insert(0, GradedSeries::one(cap));
    for i in 0..n {
        let mut next: HashMap<u32, GradedSeries> = HashMap::new();
        for (&mask, partial) in &layer {
            for j in 0..n {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let Some(h) = entry(i, j) else { continue };
                let inversions = (mask >> (j + 1)).count_ones();
                let mut term = partial * &h;
                if inversions % 2 == 1 {
                    term = -&term;
                }
                let slot = next.entry(mask | (1 << j)).or_insert_with(|| GradedSeries::zero(cap));
                *slot = &*slot + &term;
            }
        }
        layer = next;
    }
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let s = layer.remove(&full).unwrap_or_else(|| GradedSeries::zero(cap));
    schur_cache().write().expect("schur cache poisoned").insert(lambda.clone(), s.clone());
    s
}

/// `s_λ = Σ_μ (|C_μ|/d!) χ^λ_μ p_μ`.
pub fn schur_from_characters(lambda: &Partition) -> GradedSeries {
    let d = lambda.weight();
    let dfact = factorial(d as u64);
    let terms = partitions_of(d).into_iter().map(|mu| {
        let chi = character(lambda, &mu).expect("same weight");
        let c = Rational::new(mu.class_size() * BigInt::from(chi), dfact.clone());
        (mu, c)
    });
    GradedSeries::from_terms(terms, d)
}

/// `p_μ = Σ_λ χ^λ_μ s_λ`, assembled from Jacobi–Trudi Schur functions.
pub fn power_sum_from_schur(mu: &Partition) -> GradedSeries {
    let d = mu.weight();
    let mut acc = GradedSeries::zero(d);
    for lambda in partitions_of(d) {
        let chi = character(&lambda, mu).expect("same weight");
        if chi != 0 {
            acc = &acc + &schur_in_p(&lambda).scale(&Rational::from_integer(BigInt::from(chi)));
        }
    }
    acc
}

/// `s_λ` in a coefficient ring, with every power sum evaluated by `q`.
pub fn schur_at<C: Coefficient>(lambda: &Partition, q: impl Fn(usize) -> C) -> C {
    schur_in_p(lambda).map_coefficients(C::from_rational).evaluate(q)
}

/// `s_λ` with every power sum set to `x`.
pub fn principal_specialization<C: Coefficient>(lambda: &Partition, x: &C) -> C {
    schur_at(lambda, |_| x.clone())
}

/// `(χ^λ_{(1^d)}/d!) Π_{w∈λ} (x + c(w))`, the content-product form of
/// [`principal_specialization`].
pub fn principal_specialization_by_contents<C: Coefficient>(lambda: &Partition, x: &C) -> C {
    let d = lambda.weight();
    let scale = Rational::new(BigInt::from(dimension(lambda)), factorial(d as u64));
    lambda
        .contents()
        .into_iter()
        .fold(C::from_rational(&scale), |acc, c| acc * (x.clone() + C::from_integer(c)))
}

/// Every `s_λ` with `|λ| ≤ cap`, smallest first.
pub fn schur_basis(cap: usize) -> Result<Vec<(Partition, GradedSeries)>> {
    Ok(crate::partitions::partitions_up_to(cap)
        .into_iter()
        .map(|l| {
            let s = schur_in_p(&l).with_cap(cap);
            (l, s)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn series(s: &str, cap: usize) -> GradedSeries {
        GradedSeries::parse(s, cap).unwrap()
    }

    #[test]
    fn small_complete_functions() {
        assert_eq!(complete_h(0, 3), GradedSeries::one(3));
        assert_eq!(complete_h(1, 3), GradedSeries::power_sum(1, 3));
        assert_eq!(complete_h(2, 2), series("1/2 * p[1,1] + 1/2 * p[2]", 2));
        assert_eq!(
            complete_h(3, 3),
            series("1/6 * p[1,1,1] + 1/2 * p[2,1] + 1/3 * p[3]", 3)
        );
    }

    #[test]
    fn small_schur_functions() {
        assert_eq!(schur_in_p(&p("1")), GradedSeries::power_sum(1, 1));
        assert_eq!(schur_in_p(&p("2")), series("1/2 * p[1,1] + 1/2 * p[2]", 2));
        assert_eq!(schur_in_p(&p("1,1")), series("1/2 * p[1,1] - 1/2 * p[2]", 2));
        assert_eq!(schur_in_p(&p("")), GradedSeries::one(0));
        assert_eq!(schur_from_characters(&p("1,1")), series("1/2 * p[1,1] - 1/2 * p[2]", 2));
    }

    #[test]
    fn jacobi_trudi_matches_character_expansion() {
        for d in 0..=8 {
            for l in partitions_of(d) {
                assert_eq!(schur_in_p(&l), schur_from_characters(&l), "λ = {l:?}");
            }
        }
    }

    #[test]
    fn power_sums_expand_in_schur_functions() {
        for d in 1..=6 {
            for mu in partitions_of(d) {
                let direct = GradedSeries::monomial(mu.clone(), int(1), d);
                assert_eq!(power_sum_from_schur(&mu), direct, "μ = {mu:?}");
            }
        }
    }

    #[test]
    fn principal_specialization_examples() {
        assert_eq!(principal_specialization(&p("1"), &int(1)), int(1));
        assert_eq!(principal_specialization(&p("2"), &int(1)), int(1));
        assert_eq!(principal_specialization(&p("2,1"), &int(2)), int(2));
    }

    #[test]
    fn principal_specialization_content_form() {
        for d in 0..=7 {
            for l in partitions_of(d) {
                for x in [int(1), int(2), rat(1, 2)] {
                    assert_eq!(
                        principal_specialization(&l, &x),
                        principal_specialization_by_contents(&l, &x),
                        "λ = {l:?}, x = {x}"
                    );
                }
            }
        }
    }
}
