//! Plücker coordinates `b_λ` and the quadratic Plücker relations.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{normalize_list, partitions_up_to, IntegerList, Partition};
use crate::ring::{Coefficient, Rational};
use crate::symfunc::schur_at;

/// A family `λ ↦ b_λ` known on partitions of weight at most `cap`, extended to
/// arbitrary integer lists by the sorting and zero conventions.
#[derive(Clone, Debug, PartialEq)]
pub struct PluckerFamily<C = Rational> {
    base: BTreeMap<Partition, C>,
    cap: usize,
}

impl<C: Coefficient> PluckerFamily<C> {
    pub fn from_fn(cap: usize, f: impl Fn(&Partition) -> C) -> Self {
        let base = partitions_up_to(cap).into_iter().map(|l| {
            let v = f(&l);
            (l, v)
        });
        PluckerFamily { base: base.collect(), cap }
    }

    /// `b_λ = 1` for every partition.
    pub fn all_ones(cap: usize) -> Self {
        Self::from_fn(cap, |_| C::one())
    }

    /// `b_ε = 1` and every other coordinate zero.
    pub fn unit(cap: usize) -> Self {
        Self::from_fn(cap, |l| if l.is_empty() { C::one() } else { C::zero() })
    }

    /// `b_μ = 1` and every other coordinate zero.
    pub fn single(mu: &Partition, cap: usize) -> Self {
        Self::from_fn(cap, |l| if l == mu { C::one() } else { C::zero() })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `b_λ` for a partition within the cap.
    pub fn get(&self, lambda: &Partition) -> Result<C> {
        self.base
            .get(lambda)
            .cloned()
            .ok_or(Error::CapExceeded { weight: lambda.weight(), cap: self.cap })
    }

    /// `b_λ` for an arbitrary integer list.
    pub fn evaluate(&self, list: &IntegerList) -> Result<C> {
        let normal = normalize_list(list);
        match normal.sign {
            0 => Ok(C::zero()),
            1 => self.get(&normal.partition),
            _ => Ok(-self.get(&normal.partition)?),
        }
    }

    /// A copy with `b_λ` replaced by `b_λ + delta`.
    pub fn perturbed(&self, lambda: &Partition, delta: C) -> Result<Self> {
        let mut out = self.clone();
        let old = self.get(lambda)?;
        out.base.insert(lambda.clone(), old + delta);
        Ok(out)
    }

    pub fn coordinates(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.base.iter()
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> PluckerFamily<D> {
        PluckerFamily { base: self.base.iter().map(|(l, v)| (l.clone(), f(v))).collect(), cap: self.cap }
    }
}

/// The content family `b_λ = s_λ(q) Π_{w∈λ} y_{c(w)}` with the power sums of
/// `s_λ` set to `q(i)` and the content variables set to `y(j)`.
pub fn content_family<C: Coefficient>(
    y: impl Fn(i64) -> C,
    q: impl Fn(usize) -> C,
    cap: usize,
) -> PluckerFamily<C> {
    let ys: BTreeMap<i64, C> = (-(cap as i64)..=cap as i64).map(|j| (j, y(j))).collect();
    let qs: Vec<C> = (0..=cap).map(|i| if i == 0 { C::one() } else { q(i) }).collect();
    PluckerFamily::from_fn(cap, |l| {
        let schur = schur_at(l, |i| qs[i].clone());
        let content = l
            .content_monomial()
            .evaluate(|j| ys[&j].clone())
            .expect("content monomials of partitions have nonnegative exponents");
        schur * content
    })
}

/// A reproducible pseudo-random assignment of rationals for generic-point
/// testing: `q_i`, `y_j` with small numerators and denominators.
#[derive(Clone, Debug)]
pub struct GenericPoint {
    pub q: Vec<Rational>,
    pub y: BTreeMap<i64, Rational>,
}

impl GenericPoint {
    pub fn new(seed: u64, cap: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let draw = |rng: &mut ChaCha8Rng| loop {
            let num: i64 = rng.gen_range(-40..=40);
            let den: i64 = rng.gen_range(1..=40);
            if num != 0 {
                break Rational::new(num.into(), den.into());
            }
        };
        let q = (0..=cap).map(|_| draw(&mut rng)).collect();
        let y = (-(cap as i64)..=cap as i64).map(|j| (j, draw(&mut rng))).collect();
        GenericPoint { q, y }
    }

    pub fn content_family(&self, cap: usize) -> PluckerFamily<Rational> {
        content_family(|j| self.y[&j].clone(), |i| self.q[i].clone(), cap)
    }
}

/// The left side of the Plücker relation indexed by `(α, β)`.
///
/// With `i = l(α)`, `j = l(β)` and `m = max(i+1, j-1, 2)`, `α` is padded with
/// zeros to `m-1` entries and `β` to `m+1`, and the sum is
/// `Σ_{k=0}^{m} (-1)^k b_{(α_1-1,…,α_{m-1}-1, β_{k+1}+m-k)} b_{(β_1+1,…,β_k+1, β_{k+2},…,β_{m+1})}`.
pub fn plucker_lhs<C: Coefficient>(alpha: &Partition, beta: &Partition, family: &PluckerFamily<C>) -> Result<C> {
    let (i, j) = (alpha.len(), beta.len());
    if i == 0 && j == 0 {
        return Err(Error::InvalidArgument("the Plücker relations need (α, β) ≠ (ε, ε)".into()));
    }
    let m = (i + 1).max(j.saturating_sub(1)).max(2);
    let pad = |p: &Partition, len: usize| -> Vec<i64> {
        let mut v: Vec<i64> = p.parts().iter().map(|&x| x as i64).collect();
        v.resize(len, 0);
        v
    };
    let a = pad(alpha, m - 1);
    let b = pad(beta, m + 1);
    let mut total = C::zero();
    for k in 0..=m {
        let mut first: Vec<i64> = a.iter().map(|x| x - 1).collect();
        first.push(b[k] + (m - k) as i64);
        let mut second: Vec<i64> = b[..k].iter().map(|x| x + 1).collect();
        second.extend_from_slice(&b[k + 1..]);
        let f1 = family.evaluate(&IntegerList(first))?;
        if f1.is_zero() {
            continue;
        }
        let f2 = family.evaluate(&IntegerList(second))?;
        let term = f1 * f2;
        total = if k % 2 == 0 { total + term } else { total - term };
    }
    Ok(total)
}

/// A nonzero Plücker relation.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation<C> {
    pub alpha: Partition,
    pub beta: Partition,
    pub value: C,
}

/// Evaluates every relation with `|α|, |β| ≤ size_cap` and returns the
/// nonzero ones, ordered by `(α, β)`.
pub fn plucker_check_all<C: Coefficient>(family: &PluckerFamily<C>, size_cap: usize) -> Result<Vec<Violation<C>>> {
    // Every coordinate in the relation for (α, β) has weight |α| + |β| + 1.
    let needed = 2 * size_cap + 1;
    if family.cap() < needed {
        return Err(Error::CapExceeded { weight: needed, cap: family.cap() });
    }
    let parts = partitions_up_to(size_cap);
    let pairs: Vec<(&Partition, &Partition)> = parts
        .iter()
        .flat_map(|a| parts.iter().map(move |b| (a, b)))
        .filter(|(a, b)| !(a.is_empty() && b.is_empty()))
        .collect();
    let values: Vec<Result<Option<Violation<C>>>> = pairs
        .par_iter()
        .map(|(a, b)| {
            let v = plucker_lhs(a, b, family)?;
            Ok((!v.is_zero()).then(|| Violation { alpha: (*a).clone(), beta: (*b).clone(), value: v }))
        })
        .collect();
    let mut out = Vec::new();
    for v in values {
        if let Some(x) = v? {
            out.push(x);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn first_content(cap: usize) -> PluckerFamily {
        content_family(|_| int(1), |i| if i == 1 { int(1) } else { int(0) }, cap)
    }

    #[test]
    fn two_one_relation_expands_as_expected() {
        // Indeterminate-like family: distinct primes make each product visible.
        let primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
        let fam: PluckerFamily = PluckerFamily::from_fn(5, |l| {
            let idx = partitions_up_to(5).iter().position(|x| x == l).unwrap();
            int(primes[idx % primes.len()])
        });
        let b = |s: &str| fam.get(&p(s)).unwrap();
        let expected = -(b("2,2") * b("")) - b("1,1") * b("2") + b("1") * b("2,1");
        assert_eq!(plucker_lhs(&p("2"), &p("1"), &fam).unwrap(), expected);
    }

    #[test]
    fn all_ones_family_violates() {
        let fam: PluckerFamily = PluckerFamily::all_ones(5);
        assert_eq!(plucker_lhs(&p("2"), &p("1"), &fam).unwrap(), int(-1));
        let violations = plucker_check_all(&fam, 2).unwrap();
        assert!(violations.iter().any(|v| v.alpha == p("2") && v.beta == p("1")));
    }

    #[test]
    fn unit_family_satisfies_everything() {
        let fam: PluckerFamily = PluckerFamily::unit(5);
        assert!(plucker_check_all(&fam, 2).unwrap().is_empty());
    }

    #[test]
    fn content_family_values() {
        let fam = first_content(3);
        assert_eq!(fam.get(&p("")).unwrap(), int(1));
        assert_eq!(fam.get(&p("2,1")).unwrap(), rat(1, 3));
        let c = content_family(|j| if j == 0 { int(7) } else { int(1) }, |i| if i == 1 { int(1) } else { int(0) }, 1);
        assert_eq!(c.get(&p("1")).unwrap(), int(7));
        assert_eq!(plucker_lhs(&p("2"), &p("1"), &first_content(4)).unwrap(), int(0));
    }

    #[test]
    fn content_family_at_generic_points() {
        for seed in 0..2 {
            let fam = GenericPoint::new(seed, 5).content_family(5);
            assert!(plucker_check_all(&fam, 2).unwrap().is_empty(), "seed {seed}");
        }
    }

    #[test]
    fn perturbation_breaks_relations() {
        let fam = first_content(5).perturbed(&p("2,2"), int(1)).unwrap();
        assert_ne!(plucker_lhs(&p("2"), &p("1"), &fam).unwrap(), int(0));
    }

    #[test]
    fn conventions_are_respected() {
        let fam = GenericPoint::new(9, 4).content_family(4);
        let l = IntegerList(vec![1, 3, 0]);
        assert_eq!(fam.evaluate(&l).unwrap(), -fam.evaluate(&l.delta(1)).unwrap());
        assert_eq!(fam.evaluate(&IntegerList(vec![2, 1, 0, 0])).unwrap(), fam.get(&p("2,1")).unwrap());
        assert_eq!(fam.evaluate(&IntegerList(vec![1, 2])).unwrap(), int(0));
    }

    #[test]
    fn cap_is_enforced() {
        let fam: PluckerFamily = PluckerFamily::all_ones(3);
        assert!(matches!(plucker_lhs(&p("2"), &p("2"), &fam), Err(Error::CapExceeded { .. })));
        assert!(matches!(plucker_check_all(&fam, 2), Err(Error::CapExceeded { .. })));
        assert!(plucker_lhs(&p(""), &p(""), &fam).is_err());
    }
}
