//! Partitions, contents, content monomials and the sign-normalisation of
//! arbitrary integer lists.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::{factorial, Coefficient};

/// A weakly decreasing list of positive integers.
///
/// Partitions are ordered by weight first and then lexicographically by
/// parts, which is the order used whenever series are printed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts the (positive) parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    fn from_sorted(parts: Vec<usize>) -> Self {
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// `(1^d)`.
    pub fn ones(d: usize) -> Self {
        Self::from_sorted(vec![1; d])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part size → multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// `|Aut λ| = Π f_j!`.
    pub fn aut_size(&self) -> BigInt {
        self.multiplicities()
            .values()
            .fold(BigInt::one(), |acc, &f| acc * factorial(f as u64))
    }

    /// `z_λ = Π j^{f_j} f_j!`, the centraliser order of a permutation of this cycle type.
    pub fn centralizer_size(&self) -> BigInt {
        self.multiplicities().iter().fold(BigInt::one(), |acc, (&j, &f)| {
            acc * BigInt::from(j).pow(f as u32) * factorial(f as u64)
        })
    }

    /// Number of permutations of `{1..d}` with this cycle type.
    pub fn class_size(&self) -> BigInt {
        factorial(self.weight as u64) / self.centralizer_size()
    }

    /// Contents `j - i` of every cell, row by row.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.weight);
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 0..len {
                out.push(j as i64 - i as i64);
            }
        }
        out
    }

    /// `C(λ) = Π_{w ∈ λ} y_{c(w)}`.
    pub fn content_monomial(&self) -> ContentMonomial {
        let mut m = ContentMonomial::identity();
        for c in self.contents() {
            m.multiply_variable(c, 1);
        }
        m
    }

    /// Partition with the parts of both operands.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.parts.iter().peekable(), other.parts.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x >= y {
                        parts.push(x);
                        a.next();
                    } else {
                        parts.push(y);
                        b.next();
                    }
                }
                (Some(_), None) => parts.extend(a.by_ref()),
                (None, Some(_)) => parts.extend(b.by_ref()),
                (None, None) => break,
            }
        }
        Self::from_sorted(parts)
    }

    /// Removes one part equal to `part`, if present.
    pub fn remove_part(&self, part: usize) -> Option<Partition> {
        let idx = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(idx);
        Some(Self::from_sorted(parts))
    }

    /// Every part lies in `allowed`.
    pub fn parts_within(&self, allowed: &[usize]) -> bool {
        self.parts.iter().all(|p| allowed.contains(p))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight.cmp(&other.weight).then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {p:?} in partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `d`, in reverse lexicographic order (`(d)` first).
pub fn partitions_of(d: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_sorted(current.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            current.push(p);
            go(rest - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

/// All partitions of weight at most `w`, in increasing weight.
pub fn partitions_up_to(w: usize) -> Vec<Partition> {
    (0..=w).flat_map(partitions_of).collect()
}

/// Partitions of `d` whose parts all lie in `allowed`.
pub fn partitions_with_parts(d: usize, allowed: &[usize]) -> Vec<Partition> {
    partitions_of(d).into_iter().filter(|p| p.parts_within(allowed)).collect()
}

/// A finite list of integers of any sign and order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntegerList(pub Vec<i64>);

impl IntegerList {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// `Δ_j`, for `1 ≤ j < n`: replaces `(λ_j, λ_{j+1})` by `(λ_{j+1} - 1, λ_j + 1)`.
    pub fn delta(&self, j: usize) -> IntegerList {
        assert!(j >= 1 && j < self.0.len(), "Δ_{j} undefined on a list of length {}", self.0.len());
        let mut v = self.0.clone();
        let (a, b) = (v[j - 1], v[j]);
        v[j - 1] = b - 1;
        v[j] = a + 1;
        IntegerList(v)
    }
}

impl From<&Partition> for IntegerList {
    fn from(p: &Partition) -> Self {
        IntegerList(p.parts().iter().map(|&x| x as i64).collect())
    }
}

/// The normal form of `b_λ`: either zero, or `±b_μ` for a partition `μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPartition {
    pub sign: i8,
    pub partition: Partition,
}

impl SignedPartition {
    pub fn zero() -> Self {
        SignedPartition { sign: 0, partition: Partition::empty() }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }
}

/// Reduces `b_λ` for an arbitrary integer list to `s · b_μ`.
///
/// Sorts with `b_λ = -b_{Δ_j λ}` by left-to-right bubble passes; a fixed
/// point (`λ_{j+1} = λ_j + 1`) or a negative entry in the sorted list gives
/// zero, and trailing zeros are dropped.
pub fn normalize_list(list: &IntegerList) -> SignedPartition {
    let mut v = list.0.clone();
    let mut sign: i8 = 1;
    let n = v.len();
    loop {
        let mut swapped = false;
        for j in 0..n.saturating_sub(1) {
            if v[j] >= v[j + 1] {
                continue;
            }
            if v[j + 1] == v[j] + 1 {
                return SignedPartition::zero();
            }
            let (a, b) = (v[j], v[j + 1]);
            v[j] = b - 1;
            v[j + 1] = a + 1;
            sign = -sign;
            swapped = true;
        }
        if !swapped {
            break;
        }
    }
    while v.last() == Some(&0) {
        v.pop();
    }
    if v.last().is_some_and(|&x| x < 0) {
        return SignedPartition::zero();
    }
    SignedPartition {
        sign,
        partition: Partition::from_sorted(v.into_iter().map(|x| x as usize).collect()),
    }
}

/// Riemann–Hurwitz count `l(α) + l(β) + 2g - 2` of the extra branching.
pub fn riemann_hurwitz_r(alpha: &Partition, beta: &Partition, genus: usize) -> Result<usize> {
    if alpha.weight() != beta.weight() {
        return Err(Error::WeightMismatch { left: alpha.weight(), right: beta.weight() });
    }
    if alpha.weight() == 0 {
        return Err(Error::InvalidProfile("degree must be at least 1".into()));
    }
    let r = (alpha.len() + beta.len() + 2 * genus) as i64 - 2;
    usize::try_from(r)
        .map_err(|_| Error::InvalidProfile(format!("negative branching r = {r} for {alpha:?}, {beta:?}, g = {genus}")))
}

/// A Laurent monomial in the variables `y_j`, `j ∈ ℤ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ContentMonomial {
    exponents: BTreeMap<i64, i64>,
}

impl ContentMonomial {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn variable(j: i64) -> Self {
        let mut m = Self::identity();
        m.multiply_variable(j, 1);
        m
    }

    pub fn from_exponents(pairs: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut m = Self::identity();
        for (j, e) in pairs {
            m.multiply_variable(j, e);
        }
        m
    }

    fn multiply_variable(&mut self, j: i64, e: i64) {
        let entry = self.exponents.entry(j).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.exponents.remove(&j);
        }
    }

    pub fn exponent(&self, j: i64) -> i64 {
        self.exponents.get(&j).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &BTreeMap<i64, i64> {
        &self.exponents
    }

    pub fn is_identity(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn inverse(&self) -> Self {
        ContentMonomial { exponents: self.exponents.iter().map(|(&j, &e)| (j, -e)).collect() }
    }

    /// Evaluates at `y_j = assign(j)`; `None` if a negative power hits a non-invertible value.
    pub fn evaluate<C: Coefficient>(&self, assign: impl Fn(i64) -> C) -> Option<C> {
        let mut acc = C::one();
        for (&j, &e) in &self.exponents {
            let base = assign(j);
            let base = if e < 0 { base.inverse()? } else { base };
            acc = acc * base.pow(e.unsigned_abs() as u32);
        }
        Some(acc)
    }
}

impl Mul for &ContentMonomial {
    type Output = ContentMonomial;
    fn mul(self, rhs: &ContentMonomial) -> ContentMonomial {
        let mut out = self.clone();
        for (&j, &e) in &rhs.exponents {
            out.multiply_variable(j, e);
        }
        out
    }
}

impl Div for &ContentMonomial {
    type Output = ContentMonomial;
    fn div(self, rhs: &ContentMonomial) -> ContentMonomial {
        self * &rhs.inverse()
    }
}

impl fmt::Display for ContentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(j, e)| if *e == 1 { format!("y[{j}]") } else { format!("y[{j}]^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// `Y(m, k)`: `Π_{j=1}^{k} y_{m+1-j}` for `k ≥ 1`, the identity for `k = 0`,
/// and `Y(m - k, -k)^{-1}` for `k ≤ -1`.
pub fn y_segment(m: i64, k: i64) -> ContentMonomial {
    match k {
        0 => ContentMonomial::identity(),
        k if k > 0 => ContentMonomial::from_exponents((1..=k).map(|j| (m + 1 - j, 1))),
        k => y_segment(m - k, -k).inverse(),
    }
}

/// `𝒴(λ) = Π_i Y(λ_i - i, λ_i)` for an arbitrary integer list, so that row
/// `i` contributes `y_{1-i} ⋯ y_{λ_i - i}` and `𝒴(λ) = C(λ)` on partitions.
pub fn y_of_list(list: &IntegerList) -> ContentMonomial {
    list.0
        .iter()
        .enumerate()
        .fold(ContentMonomial::identity(), |acc, (idx, &l)| {
            let i = idx as i64 + 1;
            &acc * &y_segment(l - i, l)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::{HashSet, VecDeque};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn contents_of_small_partitions() {
        let mut c = p("5,3,3,2").contents();
        c.sort();
        assert_eq!(c, vec![-3, -2, -2, -1, -1, 0, 0, 0, 1, 1, 2, 3, 4]);
        assert!(Partition::empty().contents().is_empty());
        let mut c = p("2,1").contents();
        c.sort();
        assert_eq!(c, vec![-1, 0, 1]);
    }

    #[test]
    fn content_monomial_examples() {
        let m = p("5,3,3,2").content_monomial();
        let expected =
            ContentMonomial::from_exponents([(-3, 1), (-2, 2), (-1, 2), (0, 3), (1, 2), (2, 1), (3, 1), (4, 1)]);
        assert_eq!(m, expected);
        assert!(Partition::empty().content_monomial().is_identity());
        assert_eq!(p("1").content_monomial(), ContentMonomial::variable(0));
    }

    #[test]
    fn y_segment_examples() {
        assert_eq!(y_segment(2, 2), ContentMonomial::from_exponents([(2, 1), (1, 1)]));
        assert!(y_segment(5, 0).is_identity());
        assert_eq!(y_segment(0, -1), ContentMonomial::from_exponents([(1, -1)]));
    }

    // Expands Y(m,k) straight from the three defining cases with plain exponent
    // arithmetic, independently of ContentMonomial's own operators.
    fn expand_segment(m: i64, k: i64) -> BTreeMap<i64, i64> {
        let mut out = BTreeMap::new();
        if k > 0 {
            for j in 1..=k {
                *out.entry(m + 1 - j).or_insert(0) += 1;
            }
        } else if k < 0 {
            for (v, e) in expand_segment(m - k, -k) {
                out.insert(v, -e);
            }
        }
        out
    }

    #[test]
    fn y_segment_matches_independent_expansion() {
        for m in -4..=4 {
            for k in -4..=4 {
                assert_eq!(y_segment(m, k).exponents(), &expand_segment(m, k), "Y({m},{k})");
            }
        }
    }

    #[test]
    fn cancellation_law() {
        for m in -4..=4 {
            for j in -4..=4 {
                for k in -4..=4 {
                    let q = &y_segment(m, k) / &y_segment(m, j);
                    assert_eq!(q, y_segment(m - j, k - j), "m={m} j={j} k={k}");
                    assert_eq!(q, y_segment(m - k, j - k).inverse());
                }
            }
        }
    }

    #[test]
    fn y_of_list_examples() {
        assert_eq!(y_of_list(&IntegerList(vec![2, 1])), p("2,1").content_monomial());
        assert_eq!(
            y_of_list(&IntegerList(vec![2, 1])),
            ContentMonomial::from_exponents([(-1, 1), (0, 1), (1, 1)])
        );
        assert!(y_of_list(&IntegerList(vec![])).is_identity());
        assert_eq!(y_of_list(&IntegerList(vec![1, 3])), y_of_list(&IntegerList(vec![2, 2])));
    }

    #[test]
    fn y_of_list_equals_content_monomial_on_partitions() {
        for lam in partitions_up_to(10) {
            assert_eq!(y_of_list(&IntegerList::from(&lam)), lam.content_monomial(), "{lam:?}");
        }
    }

    #[test]
    fn y_of_list_is_delta_invariant() {
        fn lists(len: usize) -> Vec<Vec<i64>> {
            if len == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for tail in lists(len - 1) {
                for x in -3..=5 {
                    let mut v = tail.clone();
                    v.push(x);
                    out.push(v);
                }
            }
            out
        }
        for len in 2..=4 {
            for v in lists(len) {
                let l = IntegerList(v);
                let y = y_of_list(&l);
                for j in 1..len {
                    assert_eq!(y_of_list(&l.delta(j)), y, "{l:?} j={j}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn y_of_list_delta_invariance_length_five(v in proptest::collection::vec(-3i64..=5, 5), j in 1usize..5) {
            let l = IntegerList(v);
            prop_assert_eq!(y_of_list(&l.delta(j)), y_of_list(&l));
        }

        #[test]
        fn normalize_is_idempotent(v in proptest::collection::vec(-3i64..=6, 0..6)) {
            let s = normalize_list(&IntegerList(v));
            if !s.is_zero() {
                let again = normalize_list(&IntegerList::from(&s.partition));
                prop_assert_eq!(again, SignedPartition { sign: 1, partition: s.partition.clone() });
            }
        }
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_list(&IntegerList(vec![2, 0])), SignedPartition { sign: 1, partition: p("2") });
        assert!(normalize_list(&IntegerList(vec![1, 2])).is_zero());
        assert_eq!(normalize_list(&IntegerList(vec![0, 3])), SignedPartition { sign: -1, partition: p("2,1") });
        assert_eq!(normalize_list(&IntegerList(vec![])), SignedPartition { sign: 1, partition: Partition::empty() });
        assert!(normalize_list(&IntegerList(vec![2, -1])).is_zero());
    }

    /// Exhaustive rewriting oracle: explore every Δ_j sequence from `v`,
    /// tracking signs. Returns the set of reachable normal forms, where a
    /// fixed point anywhere forces zero.
    fn rewrite_oracle(v: Vec<i64>) -> SignedPartition {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::from([(v.clone(), 1i8)]);
        let mut terminal: HashSet<(i8, Vec<i64>)> = HashSet::new();
        seen.insert(v);
        while let Some((cur, sign)) = queue.pop_front() {
            let n = cur.len();
            let mut any_descent = false;
            for j in 1..n {
                if cur[j - 1] < cur[j] {
                    any_descent = true;
                    if cur[j] == cur[j - 1] + 1 {
                        return SignedPartition::zero();
                    }
                    let next = IntegerList(cur.clone()).delta(j).0;
                    if seen.insert(next.clone()) {
                        queue.push_back((next, -sign));
                    }
                }
            }
            if !any_descent {
                terminal.insert((sign, cur));
            }
        }
        assert_eq!(terminal.len(), 1, "rewriting is not confluent");
        let (sign, mut v) = terminal.into_iter().next().unwrap();
        while v.last() == Some(&0) {
            v.pop();
        }
        if v.last().is_some_and(|&x| x < 0) {
            return SignedPartition::zero();
        }
        SignedPartition { sign, partition: Partition::new(v.into_iter().map(|x| x as usize).collect()).unwrap() }
    }

    #[test]
    fn normalize_matches_rewriting_oracle() {
        fn lists(len: usize) -> Vec<Vec<i64>> {
            if len == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for tail in lists(len - 1) {
                for x in -2..=4 {
                    let mut v = tail.clone();
                    v.push(x);
                    out.push(v);
                }
            }
            out
        }
        for len in 0..=4 {
            for v in lists(len) {
                assert_eq!(normalize_list(&IntegerList(v.clone())), rewrite_oracle(v.clone()), "{v:?}");
            }
        }
    }

    #[test]
    fn riemann_hurwitz_examples() {
        assert_eq!(riemann_hurwitz_r(&p("1"), &p("1"), 0).unwrap(), 0);
        assert_eq!(riemann_hurwitz_r(&p("2"), &p("1,1"), 0).unwrap(), 1);
        assert_eq!(riemann_hurwitz_r(&p("3,3"), &p("2,2,2"), 0).unwrap(), 3);
        assert!(riemann_hurwitz_r(&p("2"), &p("1"), 0).is_err());
        assert!(riemann_hurwitz_r(&Partition::empty(), &Partition::empty(), 0).is_err());
    }

    #[test]
    fn class_and_aut_sizes() {
        assert_eq!(Partition::ones(5).class_size(), BigInt::from(1));
        assert_eq!(p("2,1").class_size(), BigInt::from(3));
        assert_eq!(p("2,2,1").aut_size(), BigInt::from(2));
        for d in 1..=7 {
            let total: BigInt = partitions_of(d).iter().map(|m| m.class_size()).sum();
            assert_eq!(total, factorial(d as u64));
        }
    }

    #[test]
    fn partition_parsing_and_order() {
        assert_eq!(p("5,3,3,2").to_string(), "5,3,3,2");
        assert_eq!(p(""), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,0".parse::<Partition>().is_err());
        assert!(p("1,1") < p("2"));
        assert!(p("3") < p("1,1,1,1"));
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_up_to(8).len(), 67);
    }

    #[test]
    fn union_and_remove() {
        assert_eq!(p("3,1").union(&p("2,2,1")), p("3,2,2,1,1"));
        assert_eq!(p("3,2,2").remove_part(2), Some(p("3,2")));
        assert_eq!(p("3").remove_part(2), None);
    }
}
