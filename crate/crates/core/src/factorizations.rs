//! Ordered factorizations `σγπ_1⋯π_k = ι` in the symmetric group.
//!
//! A [`FactorizationSpec`] fixes the cycle types of `σ` and `γ` and the
//! deficiencies `a_i = d - l(π_i)`. Tuples are counted by enumeration, or by
//! characters; transitive counts are recovered from all counts by the
//! exponential formula.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::characters::{dimension, scaled_character};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::perm::{for_each_of_type, num_cycles, permutations_of_type, UnionFind};
use crate::ring::{factorial, to_integer, Rational};

/// Default largest degree accepted by the enumerators.
pub const DEFAULT_BRUTE_FORCE_BOUND: usize = 6;

/// Enumeration refuses degrees above this regardless of configuration.
pub const MAX_BRUTE_FORCE_BOUND: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorizationSpec {
    alpha: Partition,
    beta: Partition,
    a: Vec<usize>,
}

impl FactorizationSpec {
    /// Trailing zeros of `a` are dropped.
    pub fn new(alpha: Partition, beta: Partition, mut a: Vec<usize>) -> Result<Self> {
        if alpha.weight() != beta.weight() {
            return Err(Error::WeightMismatch { left: alpha.weight(), right: beta.weight() });
        }
        if alpha.weight() == 0 {
            return Err(Error::InvalidArgument("factorizations need d ≥ 1".into()));
        }
        while a.last() == Some(&0) {
            a.pop();
        }
        Ok(FactorizationSpec { alpha, beta, a })
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn degree(&self) -> usize {
        self.alpha.weight()
    }

    pub fn total_deficiency(&self) -> usize {
        self.a.iter().sum()
    }

    /// Whether `l(α) + l(β) + Σ a_i` is odd, in which case no tuples exist.
    pub fn violates_parity(&self) -> bool {
        (self.alpha.len() + self.beta.len() + self.total_deficiency()) % 2 == 1
    }
}

impl fmt::Debug for FactorizationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}×{:?} a={:?}", self.alpha, self.beta, self.a)
    }
}

/// How counts are obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CountMethod {
    /// Enumeration, refused above the given degree.
    BruteForce { bound: usize },
    /// Character formula, with the exponential formula for transitivity.
    Characters,
}

impl Default for CountMethod {
    fn default() -> Self {
        CountMethod::BruteForce { bound: DEFAULT_BRUTE_FORCE_BOUND }
    }
}

fn check_bound(d: usize, bound: usize) -> Result<()> {
    let bound = bound.min(MAX_BRUTE_FORCE_BOUND);
    if d > bound {
        Err(Error::SizeBound { degree: d, bound })
    } else {
        Ok(())
    }
}

/// All permutations of degree `d` with `d - l(π) = a`.
fn with_deficiency(d: usize, a: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mu in partitions_of(d) {
        if mu.len() + a == d {
            for_each_of_type(&mu, |images| out.push(images.to_vec()));
        }
    }
    out
}

fn compose_into(out: &mut [usize], left: &[usize], right: &[usize]) {
    for (o, &r) in out.iter_mut().zip(right) {
        *o = left[r];
    }
}

/// Counts `(π_1, …, π_k)` extending the partial product `prefix` to the
/// identity, where `π_k` is solved for.
struct Extender<'a> {
    d: usize,
    a: &'a [usize],
    pools: Vec<Vec<Vec<usize>>>,
    transitive: bool,
}

impl Extender<'_> {
    fn count(&self, prefix: &[usize], uf: &UnionFind, level: usize) -> u64 {
        let k = self.a.len();
        if k == 0 {
            let ok = prefix.iter().enumerate().all(|(x, &y)| x == y);
            return u64::from(ok && (!self.transitive || uf.components() == 1));
        }
        if level + 1 == k {
            // π_k = prefix⁻¹ has the same cycle type as prefix, and lies in the
            // group generated by the earlier factors.
            let ok = self.d - num_cycles(prefix) == self.a[k - 1];
            return u64::from(ok && (!self.transitive || uf.components() == 1));
        }
        let mut total = 0;
        let mut next = vec![0; self.d];
        for pi in &self.pools[level] {
            compose_into(&mut next, prefix, pi);
            if self.transitive {
                let mut uf2 = uf.clone();
                uf2.add_permutation(pi);
                total += self.count(&next, &uf2, level + 1);
            } else {
                total += self.count(&next, uf, level + 1);
            }
        }
        total
    }
}

fn bruteforce_with_fixed_sigma(spec: &FactorizationSpec, sigma: &[usize], transitive: bool) -> u64 {
    let d = spec.degree();
    let k = spec.a.len();
    let pools: Vec<Vec<Vec<usize>>> =
        spec.a.iter().take(k.saturating_sub(1)).map(|&ai| with_deficiency(d, ai)).collect();
    let ext = Extender { d, a: &spec.a, pools, transitive };
    let gammas = permutations_of_type(&spec.beta);
    gammas
        .par_iter()
        .map(|gamma| {
            let mut prefix = vec![0; d];
            compose_into(&mut prefix, sigma, gamma.images());
            let mut uf = UnionFind::new(d);
            if transitive {
                uf.add_permutation(sigma);
                uf.add_permutation(gamma.images());
            }
            ext.count(&prefix, &uf, 0)
        })
        .sum()
}

/// Counts tuples `(σ, γ, π_1, …, π_k)` by enumeration.
///
/// `σ` is fixed to one element of its class and the total is multiplied by the
/// class size, which is exact because conjugating a tuple by any permutation
/// preserves all three conditions.
pub fn count_tuples_bruteforce(spec: &FactorizationSpec, transitive: bool, bound: usize) -> Result<BigInt> {
    check_bound(spec.degree(), bound)?;
    let sigma = canonical_representative(&spec.alpha);
    let n = bruteforce_with_fixed_sigma(spec, &sigma, transitive);
    Ok(spec.alpha.class_size() * BigInt::from(n))
}

/// Like [`count_tuples_bruteforce`] but also enumerates `σ` over its class.
pub fn count_tuples_exhaustive(spec: &FactorizationSpec, transitive: bool, bound: usize) -> Result<BigInt> {
    check_bound(spec.degree(), bound)?;
    let total: u64 =
        permutations_of_type(&spec.alpha).iter().map(|s| bruteforce_with_fixed_sigma(spec, s.images(), transitive)).sum();
    Ok(BigInt::from(total))
}

fn canonical_representative(alpha: &Partition) -> Vec<usize> {
    let mut images = Vec::with_capacity(alpha.weight());
    let mut start = 0;
    for &len in alpha.parts() {
        for i in 0..len {
            images.push(start + (i + 1) % len);
        }
        start += len;
    }
    images
}

/// `Σ_{μ ⊢ d, d - l(μ) = a} g^λ_μ`.
fn deficiency_sum(lambda: &Partition, a: usize) -> Rational {
    let d = lambda.weight();
    partitions_of(d)
        .into_iter()
        .filter(|mu| mu.len() + a == d)
        .map(|mu| scaled_character(lambda, &mu).expect("same weight"))
        .fold(Rational::zero(), |acc, x| acc + x)
}

/// Counts all tuples, transitive or not, by the character formula
/// `(1/d!) Σ_λ (χ^λ_{(1^d)})² g^λ_α g^λ_β Π_i Σ_{μ_i} g^λ_{μ_i}`.
pub fn count_tuples_characters(spec: &FactorizationSpec) -> Result<BigInt> {
    let d = spec.degree();
    let mut total = Rational::zero();
    for lambda in partitions_of(d) {
        let dim = BigInt::from(dimension(&lambda));
        let mut term = Rational::from_integer(&dim * &dim);
        term *= scaled_character(&lambda, &spec.alpha)?;
        term *= scaled_character(&lambda, &spec.beta)?;
        for &ai in &spec.a {
            if term.is_zero() {
                break;
            }
            term *= deficiency_sum(&lambda, ai);
        }
        total += term;
    }
    total /= Rational::from_integer(factorial(d as u64));
    to_integer(&total, &format!("character count for {spec:?}"))
}

fn sub_multisets(p: &Partition) -> Vec<Partition> {
    let mults: Vec<(usize, usize)> = p.multiplicities().into_iter().collect();
    let mut out = vec![Vec::new()];
    for (part, m) in mults {
        let mut next = Vec::new();
        for prefix in &out {
            for c in 0..=m {
                let mut v: Vec<usize> = prefix.clone();
                v.extend(std::iter::repeat(part).take(c));
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter().map(|v| Partition::from_unsorted(v).expect("positive parts")).collect()
}

fn difference(whole: &Partition, part: &Partition) -> Partition {
    let mut rest = whole.clone();
    for &x in part.parts() {
        rest = rest.remove_part(x).expect("sub-multiset");
    }
    rest
}

fn sub_vectors(a: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &ai in a {
        let mut next = Vec::new();
        for prefix in &out {
            for c in 0..=ai {
                let mut v = prefix.clone();
                v.push(c);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Transitive counts from all counts by `B = log B̃`.
///
/// Only the sub-monomials of the target are touched: with `E` the degree
/// operator, `E B̃ = (E B)·B̃` gives
/// `d·[B]_t = d·[B̃]_t - Σ |α_1| [B]_1 [B̃]_2` over splittings `t = 1 + 2` with
/// both parts nonempty.
struct ConnectedSolver<'f> {
    all: &'f dyn Fn(&FactorizationSpec) -> Result<BigInt>,
    memo: HashMap<FactorizationSpec, Rational>,
}

impl ConnectedSolver<'_> {
    /// `[B̃]` at the monomial, that is `b̃/d!`.
    fn all_coeff(&self, alpha: &Partition, beta: &Partition, a: &[usize]) -> Result<Rational> {
        if alpha.weight() == 0 {
            return Ok(if a.iter().all(|&x| x == 0) { Rational::one() } else { Rational::zero() });
        }
        let spec = FactorizationSpec::new(alpha.clone(), beta.clone(), a.to_vec())?;
        let n = (self.all)(&spec)?;
        Ok(Rational::new(n, factorial(alpha.weight() as u64)))
    }

    fn connected_coeff(&mut self, alpha: &Partition, beta: &Partition, a: &[usize]) -> Result<Rational> {
        let spec = FactorizationSpec::new(alpha.clone(), beta.clone(), a.to_vec())?;
        if let Some(v) = self.memo.get(&spec) {
            return Ok(v.clone());
        }
        let d = alpha.weight();
        let mut acc = self.all_coeff(alpha, beta, a)? * Rational::from_integer(BigInt::from(d));
        for a1 in sub_multisets(alpha) {
            let k = a1.weight();
            if k == 0 || k == d {
                continue;
            }
            let a2 = difference(alpha, &a1);
            for b1 in sub_multisets(beta).into_iter().filter(|b| b.weight() == k) {
                let b2 = difference(beta, &b1);
                for u1 in sub_vectors(a) {
                    let u2: Vec<usize> = a.iter().zip(&u1).map(|(x, y)| x - y).collect();
                    let rest = self.all_coeff(&a2, &b2, &u2)?;
                    if rest.is_zero() {
                        continue;
                    }
                    let c1 = self.connected_coeff(&a1, &b1, &u1)?;
                    acc -= c1 * rest * Rational::from_integer(BigInt::from(k));
                }
            }
        }
        let value = acc / Rational::from_integer(BigInt::from(d));
        self.memo.insert(spec, value.clone());
        Ok(value)
    }
}

/// The transitive count `b` for `spec`, given any way to obtain all counts
/// `b̃` of its sub-monomials.
pub fn connected_count(spec: &FactorizationSpec, all: &dyn Fn(&FactorizationSpec) -> Result<BigInt>) -> Result<BigInt> {
    let mut solver = ConnectedSolver { all, memo: HashMap::new() };
    let c = solver.connected_coeff(&spec.alpha, &spec.beta, &spec.a)?;
    let b = c * Rational::from_integer(factorial(spec.degree() as u64));
    to_integer(&b, &format!("transitive count for {spec:?}"))
}

/// Transitive counts for every entry of a table of all counts.
///
/// The table must hold `b̃` for every `α, β ⊢ d ≤ cap` and every `a` below
/// (componentwise) an `a` appearing in the table; entries of weight above
/// `cap` are ignored.
pub fn connected_from_all(
    table: &BTreeMap<FactorizationSpec, BigInt>,
    cap: usize,
) -> Result<BTreeMap<FactorizationSpec, BigInt>> {
    let lookup = |s: &FactorizationSpec| -> Result<BigInt> {
        table.get(s).cloned().ok_or_else(|| Error::IncompleteTable(format!("missing {s:?}")))
    };
    let mut out = BTreeMap::new();
    for spec in table.keys().filter(|s| s.degree() <= cap) {
        out.insert(spec.clone(), connected_count(spec, &lookup)?);
    }
    Ok(out)
}

/// The table of `b̃` for every `α, β ⊢ d ≤ cap` and every `a` in the box
/// `0 ≤ a ≤ a_max`, computed by `count`.
pub fn all_counts_table(
    cap: usize,
    a_max: &[usize],
    count: impl Fn(&FactorizationSpec) -> Result<BigInt>,
) -> Result<BTreeMap<FactorizationSpec, BigInt>> {
    let mut out = BTreeMap::new();
    for d in 1..=cap {
        let parts = partitions_of(d);
        for alpha in &parts {
            for beta in &parts {
                for a in sub_vectors(a_max) {
                    let spec = FactorizationSpec::new(alpha.clone(), beta.clone(), a)?;
                    if !out.contains_key(&spec) {
                        let n = count(&spec)?;
                        out.insert(spec, n);
                    }
                }
            }
        }
    }
    Ok(out)
}

type CountKey = (FactorizationSpec, bool, CountMethod);

fn count_cache() -> &'static Mutex<HashMap<CountKey, BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<CountKey, BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `b` (transitive) or `b̃` for `spec` by the chosen method, memoised.
pub fn count(spec: &FactorizationSpec, transitive: bool, method: CountMethod) -> Result<BigInt> {
    let key = (spec.clone(), transitive, method);
    if let Some(v) = count_cache().lock().expect("count cache poisoned").get(&key) {
        return Ok(v.clone());
    }
    let value = match (method, transitive) {
        (CountMethod::BruteForce { bound }, t) => count_tuples_bruteforce(spec, t, bound)?,
        (CountMethod::Characters, false) => count_tuples_characters(spec)?,
        (CountMethod::Characters, true) => connected_count(spec, &|s| count(s, false, CountMethod::Characters))?,
    };
    count_cache().lock().expect("count cache poisoned").insert(key, value.clone());
    Ok(value)
}
