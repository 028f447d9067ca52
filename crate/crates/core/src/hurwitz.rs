//! Double Hurwitz numbers, m-hypermap numbers, rooted hypermaps and maps.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::factorizations::{count, CountMethod, FactorizationSpec};
use crate::kp::log_tau;
use crate::partitions::{partitions_of, riemann_hurwitz_r, Partition};
use crate::perm::{for_each_of_type, num_cycles, UnionFind};
use crate::plucker::content_family;
use crate::ring::{factorial, format_rational, Rational, TSeries};
use crate::series::GradedSeries;

/// Branching `α` over 0, `β` over ∞, and genus `g`, with
/// `r = l(α) + l(β) + 2g - 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverProfile {
    alpha: Partition,
    beta: Partition,
    genus: usize,
    r: usize,
}

impl CoverProfile {
    pub fn new(alpha: Partition, beta: Partition, genus: usize) -> Result<Self> {
        let r = riemann_hurwitz_r(&alpha, &beta, genus)?;
        Ok(CoverProfile { alpha, beta, genus, r })
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn degree(&self) -> usize {
        self.alpha.weight()
    }

    /// `|Aut α| |Aut β| / d!`.
    fn scale(&self) -> Rational {
        Rational::new(self.alpha.aut_size() * self.beta.aut_size(), factorial(self.degree() as u64))
    }

    fn transitive(&self, a: Vec<usize>, method: CountMethod) -> Result<BigInt> {
        let spec = FactorizationSpec::new(self.alpha.clone(), self.beta.clone(), a)?;
        count(&spec, true, method)
    }
}

/// `H^g_{α,β} = |Aut α||Aut β| b^{(1^r)}_{α,β} / d!`.
pub fn double_hurwitz(profile: &CoverProfile, method: CountMethod) -> Result<Rational> {
    let b = profile.transitive(vec![1; profile.r], method)?;
    Ok(profile.scale() * Rational::from_integer(b))
}

/// `H^0_{α,(1^d)} = d! d^{l(α)-3} (d + l(α) - 2)! Π α_i^{α_i} / α_i!`.
pub fn double_hurwitz_genus0(alpha: &Partition) -> Rational {
    let d = alpha.weight() as i64;
    let l = alpha.len() as i64;
    let mut value = Rational::from_integer(factorial(d as u64) * factorial((d + l - 2).max(0) as u64));
    let dd = Rational::from_integer(BigInt::from(d));
    value *= pow_signed(&dd, l - 3);
    for &a in alpha.parts() {
        value *= Rational::new(BigInt::from(a).pow(a as u32), factorial(a as u64));
    }
    value
}

fn pow_signed(x: &Rational, e: i64) -> Rational {
    let p = crate::ring::Coefficient::pow(x, e.unsigned_abs() as u32);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// Number of sequences of length `m` whose nonzero entries, read in order,
/// rearrange to the parts of `nu`: `m! / ((m - l)! Π f_j!)`.
fn arrangements(nu: &Partition, m: usize) -> BigInt {
    if nu.len() > m {
        return BigInt::zero();
    }
    factorial(m as u64) / (factorial((m - nu.len()) as u64) * nu.aut_size())
}

/// `c^{(g,m)}_{α,β}`: transitive counts summed over all `(a_1, …, a_m)` with
/// `Σ a_i = r`.
///
/// Counts depend only on the multiset of nonzero `a_i`, so the compositions
/// are grouped by the partition they rearrange to. For `m = 0` the sum is the
/// bare count `b_{α,β}` when `r = 0`, and empty otherwise.
pub fn c_count(profile: &CoverProfile, m: usize, method: CountMethod) -> Result<BigInt> {
    let r = profile.r;
    if r == 0 {
        return profile.transitive(vec![], method);
    }
    let mut total = BigInt::zero();
    for nu in partitions_of(r) {
        let n = arrangements(&nu, m);
        if n.is_zero() || nu.parts()[0] >= profile.degree() {
            continue;
        }
        total += n * profile.transitive(nu.parts().to_vec(), method)?;
    }
    Ok(total)
}

/// `c^{(g,m)}_{α,β}` by running over every composition, without grouping.
pub fn c_count_by_compositions(profile: &CoverProfile, m: usize, method: CountMethod) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for comp in compositions(profile.r, m) {
        total += profile.transitive(comp, method)?;
    }
    Ok(total)
}

/// Weak compositions of `r` into exactly `m` parts.
fn compositions(r: usize, m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return if r == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=r {
        for mut rest in compositions(r - first, m - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `N^{(g,m)}_{α,β} = |Aut α||Aut β| c^{(g,m)}_{α,β} / d!`.
pub fn m_hypermap(profile: &CoverProfile, m: usize, method: CountMethod) -> Result<Rational> {
    Ok(profile.scale() * Rational::from_integer(c_count(profile, m, method)?))
}

/// `N^{(0,m)}_{α,(1^d)} = d! m ((m-1)d - 1)! / ((m-1)d - l(α) + 2)! Π binom(mα_i - 1, α_i)`.
pub fn m_hypermap_genus0(alpha: &Partition, m: usize) -> Result<Rational> {
    let d = alpha.weight() as i64;
    let l = alpha.len() as i64;
    let md = (m as i64 - 1) * d;
    if md < 1 || md - l + 2 < 0 {
        return Err(Error::DegenerateRange(format!(
            "closed form needs (m-1)d ≥ 1 and (m-1)d - l(α) + 2 ≥ 0, got m = {m}, d = {d}, l = {l}"
        )));
    }
    let mut value = Rational::new(
        factorial(d as u64) * BigInt::from(m) * factorial((md - 1) as u64),
        factorial((md - l + 2) as u64),
    );
    for &a in alpha.parts() {
        value *= Rational::from_integer(crate::ring::binomial((m * a) as i64 - 1, a as i64));
    }
    Ok(value)
}

/// `Σ_{j ≥ 0} (-1)^j binom(r, j) N^{(g, r-j)}_{α,β}`, which equals `H^g_{α,β}`.
///
/// Each composition with `k` zero entries among `r` slots is counted once
/// for every set of `j ≤ k` slots forced to zero, so the alternating sum
/// keeps exactly the compositions with every entry positive.
pub fn inclusion_exclusion_hurwitz(profile: &CoverProfile, method: CountMethod) -> Result<Rational> {
    let mut total = Rational::zero();
    for j in 0..=profile.r {
        let weight = Rational::from_integer(crate::ring::binomial(profile.r as i64, j as i64));
        let n = weight * m_hypermap(profile, profile.r - j, method)?;
        if j % 2 == 0 {
            total += n;
        } else {
            total -= n;
        }
    }
    Ok(total)
}

/// A polynomial in `m` with rational coefficients, constant term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialInM {
    coefficients: Vec<Rational>,
}

impl PolynomialInM {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        PolynomialInM { coefficients }
    }

    /// The polynomial of degree below `points.len()` through the given points.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let mut acc = vec![Rational::zero(); points.len()];
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = vec![Rational::one()];
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut next = vec![Rational::zero(); basis.len() + 1];
                for (k, c) in basis.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * xj;
                }
                basis = next;
                denom *= xi - xj;
            }
            let scale = yi / denom;
            for (k, c) in basis.iter().enumerate() {
                acc[k] += c * &scale;
            }
        }
        PolynomialInM::new(acc)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coefficient(&self, k: usize) -> Rational {
        self.coefficients.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn evaluate(&self, m: &Rational) -> Rational {
        self.coefficients.iter().rev().fold(Rational::zero(), |acc, c| acc * m + c)
    }
}

impl fmt::Display for PolynomialInM {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format_rational(c),
                1 => format!("{} * m", format_rational(c)),
                _ => format!("{} * m^{k}", format_rational(c)),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// `N^{(g,m)}_{α,β}` as a polynomial in `m`.
///
/// Interpolates at `m = 1, …, r+1` and confirms the value at `m = r+2`. The
/// coefficient of `m^r` is `H^g_{α,β} / r!`, so the degree drops below `r`
/// exactly when `H^g_{α,β} = 0`.
pub fn polynomial_in_m(profile: &CoverProfile, method: CountMethod) -> Result<PolynomialInM> {
    let r = profile.r;
    let point = |m: usize| -> Result<(Rational, Rational)> {
        Ok((Rational::from_integer(BigInt::from(m)), m_hypermap(profile, m, method)?))
    };
    let points: Vec<_> = (1..=r + 1).map(point).collect::<Result<_>>()?;
    let poly = PolynomialInM::interpolate(&points);
    let (x, y) = point(r + 2)?;
    if poly.evaluate(&x) != y {
        return Err(Error::DegreeMismatch(format!(
            "N at m = {} is {} but the interpolant gives {}",
            r + 2,
            format_rational(&y),
            format_rational(&poly.evaluate(&x))
        )));
    }
    Ok(poly)
}

/// `M^g_{α,β} = c^{(g,1)}_{α,β} / (d-1)!`, the number of rooted hypermaps.
pub fn hypermap_count(alpha: &Partition, beta: &Partition, genus: usize, method: CountMethod) -> Result<Rational> {
    let profile = CoverProfile::new(alpha.clone(), beta.clone(), genus)?;
    let c = c_count(&profile, 1, method)?;
    Ok(Rational::new(c, factorial(profile.degree() as u64 - 1)))
}

/// Genus of a map with vertex degrees `α`, `n` edges and `faces` faces, if
/// Euler's formula allows one.
pub fn map_genus(alpha: &Partition, n: usize, faces: usize) -> Option<usize> {
    let twice = 2 + n as i64 - alpha.len() as i64 - faces as i64;
    (twice >= 0 && twice % 2 == 0).then_some((twice / 2) as usize)
}

/// `R^{(n,faces)}_α`, the number of rooted maps with vertex degrees `α`, `n`
/// edges and `faces` faces; zero when Euler's formula admits no genus.
pub fn map_count(alpha: &Partition, n: usize, faces: usize, method: CountMethod) -> Result<Rational> {
    if alpha.weight() != 2 * n {
        return Err(Error::InvalidArgument(format!("vertex degrees {alpha} do not sum to 2n = {}", 2 * n)));
    }
    match map_genus(alpha, n, faces) {
        None => Ok(Rational::zero()),
        Some(g) => hypermap_count(alpha, &Partition::new(vec![2; n])?, g, method),
    }
}

/// Rooted maps with vertex degrees `α`, bucketed by number of faces.
///
/// One vertex rotation `σ` of type `α` is fixed and every edge involution `γ`
/// is enumerated; the faces are the cycles of `σγ`. Each labelled map is seen
/// `|C_α|` times over all `σ`, and rooting divides by `(2n-1)!`.
pub fn map_census(alpha: &Partition, bound: usize) -> Result<BTreeMap<usize, BigInt>> {
    let d = alpha.weight();
    if d % 2 == 1 {
        return Ok(BTreeMap::new());
    }
    let limit = bound.min(crate::factorizations::MAX_BRUTE_FORCE_BOUND);
    if d > limit {
        return Err(Error::SizeBound { degree: d, bound: limit });
    }
    let mut sigma = Vec::with_capacity(d);
    let mut start = 0;
    for &len in alpha.parts() {
        for i in 0..len {
            sigma.push(start + (i + 1) % len);
        }
        start += len;
    }
    let mut buckets: BTreeMap<usize, u64> = BTreeMap::new();
    let mut prod = vec![0; d];
    for_each_of_type(&Partition::new(vec![2; d / 2])?, |gamma| {
        let mut uf = UnionFind::new(d);
        uf.add_permutation(&sigma);
        uf.add_permutation(gamma);
        if uf.components() != 1 {
            return;
        }
        for (o, &g) in prod.iter_mut().zip(gamma) {
            *o = sigma[g];
        }
        *buckets.entry(num_cycles(&prod)).or_insert(0) += 1;
    });
    let class = alpha.class_size();
    let rooting = factorial(d as u64 - 1);
    let mut out = BTreeMap::new();
    for (faces, n) in buckets {
        let total = &class * BigInt::from(n);
        debug_assert!((&total % &rooting).is_zero());
        out.insert(faces, total / &rooting);
    }
    Ok(out)
}

fn first_power_sum<C: crate::ring::Coefficient>(i: usize) -> C {
    if i == 1 {
        C::one()
    } else {
        C::zero()
    }
}

/// `Φ` with `q = (1, 0, 0, …)` and the content variables set by `y`, over
/// truncated series in `t`.
pub fn specialized_phi(y: impl Fn(i64) -> TSeries, cap: usize) -> Result<GradedSeries<TSeries>> {
    let family = content_family(y, first_power_sum::<TSeries>, cap);
    log_tau(&family, cap)
}

/// `Φ|_{y_j = e^{jt}}`, the double Hurwitz series restricted to `β = (1^d)`.
pub fn hurwitz_series(cap: usize, t_precision: usize) -> Result<GradedSeries<TSeries>> {
    specialized_phi(|j| TSeries::exp_linear(j, t_precision), cap)
}

/// `Φ|_{y_j = (1 + jt)^m}`, the m-hypermap series restricted to `β = (1^d)`.
pub fn m_hypermap_series(m: u32, cap: usize, t_precision: usize) -> Result<GradedSeries<TSeries>> {
    specialized_phi(|j| TSeries::one_plus_linear_pow(j, m, t_precision), cap)
}

/// The coefficient of `p_α t^k` in a series over `TSeries`.
pub fn coefficient_pt(series: &GradedSeries<TSeries>, alpha: &Partition, k: usize) -> Rational {
    series.coefficient(alpha).coefficient(k)
}

/// Whether a rational is a nonnegative value whose denominator divides `d!`.
pub fn is_admissible_rescaled_count(x: &Rational, d: usize) -> bool {
    !x.is_negative() && (factorial(d as u64) % x.denom()).is_zero()
}
