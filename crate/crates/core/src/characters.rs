//! Irreducible characters of the symmetric group by the Murnaghan–Nakayama
//! rule, computed on beta-sets and memoised process-wide.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::ring::{factorial, Rational};

type Memo = RwLock<HashMap<(Partition, Partition), i64>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `χ^λ_μ`, the irreducible character `λ` on the class of cycle type `μ`.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch { left: lambda.weight(), right: mu.weight() });
    }
    Ok(character_unchecked(lambda, mu))
}

fn character_unchecked(lambda: &Partition, mu: &Partition) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = memo().read().expect("character memo poisoned").get(&key) {
        return v;
    }
    let r = mu.parts()[0];
    let rest = mu.remove_part(r).expect("first part present");
    let value: i64 = remove_rim_hooks(lambda, r)
        .into_iter()
        .map(|(sign, smaller)| sign * character_unchecked(&smaller, &rest))
        .sum();
    memo().write().expect("character memo poisoned").insert(key, value);
    value
}

/// Every way to strip a rim hook of length `r` from `λ`, with its sign
/// `(-1)^{height}`.
///
/// On the beta-set `{λ_i + n - i}` a rim hook of length `r` is a bead moved
/// from `b` to the free position `b - r`; the height is the number of beads
/// jumped over.
fn remove_rim_hooks(lambda: &Partition, r: usize) -> Vec<(i64, Partition)> {
    let n = lambda.len();
    let beads: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + n - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beads.iter().enumerate() {
        if b < r || beads.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let jumped = beads.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beads.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (n - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        out.push((sign, Partition::new(parts).expect("rim-hook removal keeps a partition")));
    }
    out
}

/// `χ^λ_{(1^d)}`, the dimension of the irreducible representation `λ`.
pub fn dimension(lambda: &Partition) -> i64 {
    character_unchecked(lambda, &Partition::ones(lambda.weight()))
}

/// `g^λ_μ = |C_μ| χ^λ_μ / χ^λ_{(1^d)}`.
pub fn scaled_character(lambda: &Partition, mu: &Partition) -> Result<Rational> {
    let chi = character(lambda, mu)?;
    Ok(Rational::new(mu.class_size() * BigInt::from(chi), BigInt::from(dimension(lambda))))
}

/// The full table `χ^λ_μ` for all `λ, μ ⊢ d`.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    d: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(d: usize) -> Self {
        let partitions = partitions_of(d);
        let values = partitions
            .iter()
            .map(|l| partitions.iter().map(|m| character_unchecked(l, m)).collect())
            .collect();
        CharacterTable { d, partitions, values }
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// Row and column labels, `(d)` first.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    fn index(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|q| q == p)
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        Some(self.values[self.index(lambda)?][self.index(mu)?])
    }

    /// `Σ_μ |C_μ| χ^λ_μ χ^{λ'}_μ`, which is `d!·[λ = λ']`.
    pub fn inner_product(&self, i: usize, j: usize) -> BigInt {
        self.partitions
            .iter()
            .enumerate()
            .map(|(k, mu)| mu.class_size() * BigInt::from(self.values[i][k]) * BigInt::from(self.values[j][k]))
            .sum()
    }

    /// Checks row orthogonality for every pair of rows.
    pub fn is_orthogonal(&self) -> bool {
        let n = self.partitions.len();
        let dfact = factorial(self.d as u64);
        (0..n).all(|i| {
            (0..n).all(|j| {
                let expected = if i == j { dfact.clone() } else { BigInt::from(0) };
                self.inner_product(i, j) == expected
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_and_sign_characters() {
        for d in 1..=6 {
            for mu in partitions_of(d) {
                assert_eq!(character(&Partition::new(vec![d]).unwrap(), &mu).unwrap(), 1);
                let sign = if (d - mu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(character(&Partition::ones(d), &mu).unwrap(), sign);
            }
        }
        assert_eq!(character(&p("1,1"), &p("2")).unwrap(), -1);
    }

    #[test]
    fn dimensions_match_hook_lengths() {
        assert_eq!(character(&p("2,1"), &p("1,1,1")).unwrap(), 2);
        assert_eq!(dimension(&p("3,2")), 5);
        assert_eq!(dimension(&p("3,2,1")), 16);
        assert_eq!(dimension(&p("4,2,1,1")), 90);
    }

    #[test]
    fn s3_table() {
        let t = CharacterTable::new(3);
        // rows (3), (2,1), (1,1,1); columns (3), (2,1), (1,1,1)
        assert_eq!(t.get(&p("2,1"), &p("3")), Some(-1));
        assert_eq!(t.get(&p("2,1"), &p("2,1")), Some(0));
        assert_eq!(t.get(&p("1,1,1"), &p("2,1")), Some(-1));
    }

    #[test]
    fn orthogonality_through_seven() {
        for d in 1..=7 {
            assert!(CharacterTable::new(d).is_orthogonal(), "d = {d}");
        }
    }

    #[test]
    fn mismatched_weights_rejected() {
        assert!(matches!(character(&p("2"), &p("1")), Err(Error::WeightMismatch { .. })));
    }
}
