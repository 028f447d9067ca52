//! Permutations of `{1, …, d}`.
//!
//! Points are stored 0-based; cycle notation reads and writes 1-based points.
//! Products compose right to left: `(σγ)(x) = σ(γ(x))`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation { images: (0..d).collect() }
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if x >= d || seen[x] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `(1 7)(2 5)(3)` on `d` points.
    /// Points not mentioned are fixed.
    pub fn from_cycles(s: &str, d: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..d).collect();
        let mut seen = vec![false; d];
        let bad = || Error::Parse(format!("bad cycle notation {s:?}"));
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let points: Vec<usize> = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            for (k, &p) in points.iter().enumerate() {
                if p == 0 || p > d || seen[p - 1] {
                    return Err(bad());
                }
                seen[p - 1] = true;
                images[p - 1] = points[(k + 1) % points.len()] - 1;
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`, that is `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "permutations on different sets");
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn num_cycles(&self) -> usize {
        num_cycles(&self.images)
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect()).expect("cycle lengths are positive")
    }
}

/// Number of cycles of the permutation with the given 0-based images.
pub(crate) fn num_cycles(images: &[usize]) -> usize {
    if images.len() > 64 {
        let mut seen = vec![false; images.len()];
        let mut count = 0;
        for start in 0..images.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = images[x];
            }
        }
        return count;
    }
    let mut seen = 0u64;
    let mut count = 0;
    for start in 0..images.len() {
        if seen & (1 << start) != 0 {
            continue;
        }
        count += 1;
        let mut x = start;
        while seen & (1 << x) == 0 {
            seen |= 1 << x;
            x = images[x];
        }
    }
    count
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            let pts: Vec<String> = cycle.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Cycle notation; the degree is the largest point mentioned.
    fn from_str(s: &str) -> Result<Self> {
        let d = s
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        Permutation::from_cycles(s, d)
    }
}

/// Disjoint-set forest over `{0, …, n-1}`.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), components: n }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.components -= 1;
        }
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn add_permutation(&mut self, images: &[usize]) {
        for (x, &y) in images.iter().enumerate() {
            self.union(x, y);
        }
    }
}

/// Whether the group generated by `perms` acts transitively on its points.
pub fn is_transitive(perms: &[Permutation]) -> bool {
    let Some(first) = perms.first() else {
        return false;
    };
    let d = first.degree();
    let mut uf = UnionFind::new(d);
    for p in perms {
        uf.add_permutation(p.images());
    }
    uf.components() <= 1
}

/// Every permutation of cycle type `mu`, each exactly once.
///
/// Cycles are generated in canonical form: each starts at the smallest unused
/// point, cycles of equal length appear with increasing starting points, and
/// the remaining points of a cycle are placed in every order.
pub fn permutations_of_type(mu: &Partition) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_of_type(mu, |images| out.push(Permutation { images: images.to_vec() }));
    out
}

/// Calls `f` with the image vector of every permutation of cycle type `mu`.
pub fn for_each_of_type(mu: &Partition, mut f: impl FnMut(&[usize])) {
    let d = mu.weight();
    let mut images = vec![FREE; d];
    let lengths: Vec<usize> = mu.parts().to_vec();
    place_cycles(&lengths, 0, &mut images, &mut f);
}

const FREE: usize = usize::MAX;
const PENDING: usize = usize::MAX - 1;

fn place_cycles(lengths: &[usize], used: u64, images: &mut [usize], f: &mut impl FnMut(&[usize])) {
    let Some(start) = images.iter().position(|&x| x == FREE) else {
        f(images);
        return;
    };
    let mut tried = Vec::new();
    for (idx, &len) in lengths.iter().enumerate() {
        if used & (1 << idx) != 0 || tried.contains(&len) {
            continue;
        }
        tried.push(len);
        images[start] = PENDING;
        let mut cycle = vec![start];
        extend_cycle(lengths, used | (1 << idx), len, images, &mut cycle, f);
        images[start] = FREE;
    }
}

fn extend_cycle(
    lengths: &[usize],
    used: u64,
    len: usize,
    images: &mut [usize],
    cycle: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    let last = *cycle.last().expect("nonempty cycle");
    if cycle.len() == len {
        images[last] = cycle[0];
        place_cycles(lengths, used, images, f);
        images[last] = PENDING;
        return;
    }
    for x in 0..images.len() {
        if images[x] != FREE {
            continue;
        }
        images[last] = x;
        images[x] = PENDING;
        cycle.push(x);
        extend_cycle(lengths, used, len, images, cycle, f);
        cycle.pop();
        images[x] = FREE;
    }
    images[last] = PENDING;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use crate::ring::factorial;
    use num_bigint::BigInt;
    use std::collections::HashSet;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn cycle_types_of_examples() {
        assert_eq!(Permutation::identity(4).cycle_type(), part("1,1,1,1"));
        let sigma = Permutation::from_cycles("(1 7)(2 5)(3)(4 8 9)(6)", 9).unwrap();
        assert_eq!(sigma.cycle_type(), part("3,2,2,1,1"));
        let gamma = Permutation::from_cycles("(1 8 5)(2 4 3)(6 7 9)", 9).unwrap();
        assert_eq!(gamma.cycle_type(), part("3,3,3"));
    }

    #[test]
    fn hypermap_triple_multiplies_to_identity() {
        let sigma = Permutation::from_cycles("(1 7)(2 5)(3)(4 8 9)(6)", 9).unwrap();
        let gamma = Permutation::from_cycles("(1 8 5)(2 4 3)(6 7 9)", 9).unwrap();
        let pi = Permutation::from_cycles("(1 6 9)(2 8)(3 4 7 5)", 9).unwrap();
        assert!(sigma.compose(&gamma).compose(&pi).is_identity());
        assert!(is_transitive(&[sigma, gamma, pi]));
    }

    #[test]
    fn transitivity_small_cases() {
        assert!(is_transitive(&[Permutation::identity(1)]));
        assert!(!is_transitive(&[Permutation::identity(2)]));
        assert!(is_transitive(&[Permutation::from_cycles("(1 2)", 2).unwrap()]));
    }

    #[test]
    fn display_and_parse_round_trip() {
        let p = Permutation::from_cycles("(1 3 2)(4 5)", 6).unwrap();
        assert_eq!(p.to_string(), "(1 3 2)(4 5)(6)");
        assert_eq!(Permutation::from_cycles(&p.to_string(), 6).unwrap(), p);
        assert!(Permutation::from_cycles("(1 1)", 2).is_err());
        assert!(Permutation::from_cycles("(1 3)", 2).is_err());
    }

    #[test]
    fn inverse_and_composition() {
        let p = Permutation::from_cycles("(1 2 3)", 3).unwrap();
        let q = Permutation::from_cycles("(1 2)", 3).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        // (1 2 3)(1 2) sends 1 -> 2 -> 3.
        assert_eq!(p.compose(&q).apply(0), 2);
    }

    #[test]
    fn generation_by_type_is_exact() {
        for d in 1..=7 {
            let mut total = BigInt::from(0);
            for mu in partitions_of(d) {
                let perms = permutations_of_type(&mu);
                let distinct: HashSet<_> = perms.iter().cloned().collect();
                assert_eq!(distinct.len(), perms.len(), "duplicates for {mu:?}");
                assert!(perms.iter().all(|p| p.cycle_type() == mu));
                assert_eq!(BigInt::from(perms.len()), mu.class_size(), "{mu:?}");
                total += perms.len();
            }
            assert_eq!(total, factorial(d as u64));
        }
    }

    #[test]
    fn cycle_count_matches_wide_path() {
        let images: Vec<usize> = (0..70).map(|x| (x + 1) % 70).collect();
        assert_eq!(num_cycles(&images), 1);
        let p = Permutation::from_cycles("(1 2)(3 4 5)", 6).unwrap();
        assert_eq!(p.num_cycles(), 3);
    }
}
