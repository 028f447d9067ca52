//! Rooted triangulations of every genus, through rooted cubic maps.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bivariate::{BivariateSeries, Exponents};
use crate::error::{Error, Result};
use crate::factorizations::CountMethod;
use crate::hurwitz::{map_census, map_count};
use crate::partitions::{partitions_of, Partition};
use crate::ring::{factorial, int, rat, to_integer, Rational};

/// Whether `(n, g)` lies in the index set `n ≥ -1`, `0 ≤ g ≤ (n+1)/2`.
pub fn in_index_set(n: i64, g: i64) -> bool {
    n >= -1 && g >= 0 && 2 * g <= n + 1
}

/// Values of the triangulation recurrence `f(n, g)` for `n ≤ n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationTable {
    n_max: i64,
    values: BTreeMap<(i64, i64), Rational>,
}

impl TriangulationTable {
    pub fn n_max(&self) -> i64 {
        self.n_max
    }

    /// `f(n, g)`, zero outside the index set.
    pub fn f(&self, n: i64, g: i64) -> Rational {
        self.values.get(&(n, g)).cloned().unwrap_or_else(Rational::zero)
    }

    /// `F(n, g) = f(n, g) / (3n + 2)`, which may be fractional at `n = -1`.
    pub fn rescaled(&self, n: i64, g: i64) -> Rational {
        self.f(n, g) / int(3 * n + 2)
    }

    /// The number of rooted triangulations of genus `g` with `2n` faces.
    pub fn count(&self, n: i64, g: i64) -> Result<BigInt> {
        if n < 1 || n > self.n_max {
            return Err(Error::InvalidArgument(format!("n = {n} is outside 1..={}", self.n_max)));
        }
        to_integer(&self.rescaled(n, g), "triangulation count")
    }

    /// `(n, g)` pairs with `n ≥ 1` in the index set, ordered.
    pub fn entries(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.values.keys().copied().filter(|&(n, _)| n >= 1)
    }
}

/// Runs the quadratic recurrence from the seeds `f(-1, 0) = 1/2` and
/// `f(0, 0) = 2`.
pub fn f_table(n_max: usize) -> TriangulationTable {
    let n_max = n_max as i64;
    let mut values = BTreeMap::new();
    values.insert((-1, 0), rat(1, 2));
    values.insert((0, 0), int(2));
    for n in 1..=n_max {
        let row: Vec<((i64, i64), Rational)> = (0..=(n + 1) / 2)
            .into_par_iter()
            .map(|g| {
                let get = |i: i64, h: i64| values.get(&(i, h)).cloned().unwrap_or_else(Rational::zero);
                let mut inner = int(n * (3 * n - 2)) * get(n - 2, g - 1);
                for i in -1..=n - 1 {
                    let j = n - 2 - i;
                    if j < -1 {
                        break;
                    }
                    for h in 0..=g {
                        if in_index_set(i, h) && in_index_set(j, g - h) {
                            inner += get(i, h) * get(j, g - h);
                        }
                    }
                }
                ((n, g), rat(4 * (3 * n + 2), n + 1) * inner)
            })
            .collect();
        values.extend(row);
    }
    TriangulationTable { n_max, values }
}

/// `F(n, g)` for a single pair.
pub fn triangulation_count(n: usize, g: usize) -> Result<BigInt> {
    let (n, g) = (n as i64, g as i64);
    if n < 1 || !in_index_set(n, g) {
        return Err(Error::InvalidArgument(format!("(n, g) = ({n}, {g}) is not a triangulation index")));
    }
    f_table(n as usize).count(n, g)
}

/// `2^{2n+1} (3n)!! / ((n+2)! n!!)`, the number of rooted planar
/// triangulations with `2n` faces.
pub fn planar_closed_form(n: usize) -> BigInt {
    let double_factorial = |k: usize| -> BigInt { (1..=k).rev().step_by(2).map(BigInt::from).product() };
    let num = (BigInt::one() << (2 * n + 1)) * double_factorial(3 * n);
    let den = factorial(n as u64 + 2) * double_factorial(n);
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

fn cubic(n: usize) -> Result<Partition> {
    Partition::new(vec![3; 2 * n])
}

/// Rooted triangulations with `2n` faces by genus, counted as rooted cubic
/// maps with `2n` vertices and enumerated over edge matchings.
pub fn triangulations_by_enumeration(n: usize, bound: usize) -> Result<BTreeMap<usize, BigInt>> {
    let census = map_census(&cubic(n)?, bound)?;
    let mut out = BTreeMap::new();
    for (faces, count) in census {
        let twice = n as i64 + 2 - faces as i64;
        if twice < 0 || twice % 2 == 1 {
            return Err(Error::InvalidArgument(format!("cubic map with {faces} faces has no genus")));
        }
        out.insert((twice / 2) as usize, count);
    }
    Ok(out)
}

/// `F(n, g)` as a rooted cubic map count through symmetric group characters.
pub fn triangulation_count_by_characters(n: usize, g: usize) -> Result<BigInt> {
    let faces = (n + 2).checked_sub(2 * g).filter(|&f| f >= 1);
    let Some(faces) = faces else {
        return Ok(BigInt::zero());
    };
    let r = map_count(&cubic(n)?, 3 * n, faces, CountMethod::Characters)?;
    to_integer(&r, "rooted cubic map count")
}

fn p_exponents(alpha: &Partition, w: usize) -> Result<Exponents> {
    let mut e = [0, 0, 0, w as u32];
    for &part in alpha.parts() {
        if !(1..=3).contains(&part) {
            return Err(Error::InvalidArgument(format!("part {part} is not in {{1, 2, 3}}")));
        }
        e[part - 1] += 1;
    }
    Ok(e)
}

/// `p_1^a p_2^b p_3^c w^e z^n` with coefficient `c`.
pub fn term(c: Rational, p: [u32; 3], w: u32, z: usize, z_cap: usize) -> BivariateSeries {
    BivariateSeries::monomial(c, [p[0], p[1], p[2], w], z, z_cap)
}

/// The tree series `T = z (p_1 + p_3 T^2)`, by fixed-point iteration.
pub fn tree_series_t(z_cap: usize) -> BivariateSeries {
    let p1z = term(int(1), [1, 0, 0], 0, 1, z_cap);
    let p3z = term(int(1), [0, 0, 1], 0, 1, z_cap);
    let mut t = BivariateSeries::zero(z_cap);
    loop {
        let next = &p1z + &(&p3z * &(&t * &t));
        if next == t {
            return t;
        }
        t = next;
    }
}

/// Rooted maps with vertex degrees in `mu ⊆ {1, 2, 3}`:
/// `V_μ = Σ R^{(n,m)}_α p_α w^m z^n` through `z^{z_cap}`.
pub fn v_mu_series(mu: &[usize], z_cap: usize, bound: usize) -> Result<BivariateSeries> {
    if mu.iter().any(|i| !(1..=3).contains(i)) {
        return Err(Error::InvalidArgument(format!("vertex degrees {mu:?} are not within {{1, 2, 3}}")));
    }
    let alphas: Vec<Partition> = (1..=z_cap)
        .flat_map(|n| partitions_of(2 * n))
        .filter(|a| a.parts().iter().all(|p| mu.contains(p)))
        .collect();
    map_series(&alphas, z_cap, bound)
}

fn map_series(alphas: &[Partition], z_cap: usize, bound: usize) -> Result<BivariateSeries> {
    let censuses: Vec<Result<(Partition, BTreeMap<usize, BigInt>)>> =
        alphas.par_iter().map(|a| Ok((a.clone(), map_census(a, bound)?))).collect();
    let mut out = BivariateSeries::zero(z_cap);
    for c in censuses {
        let (alpha, census) = c?;
        for (faces, count) in census {
            out.add_term(alpha.weight() / 2, p_exponents(&alpha, faces)?, Rational::from_integer(count));
        }
    }
    Ok(out)
}

/// The outcome of comparing two truncated series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub z_cap: usize,
    /// The lowest differing term as `(z-degree, exponents, lhs, rhs)`.
    pub first_failure: Option<(usize, Exponents, Rational, Rational)>,
}

impl IdentityCheck {
    pub fn compare(name: &str, lhs: &BivariateSeries, rhs: &BivariateSeries) -> Self {
        let z_cap = lhs.z_cap().min(rhs.z_cap());
        let diff = &lhs.truncate(z_cap) - &rhs.truncate(z_cap);
        let first_failure = diff.leading_term().map(|(z, e, _)| (z, e, lhs.coefficient(e, z), rhs.coefficient(e, z)));
        IdentityCheck { name: name.to_string(), z_cap, first_failure }
    }

    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// `V_{1,2,3} = p_2 w^2 z / (1 - p_2 z) + (1 - p_2 z)^{-1} V_{1,3}(z / (1 - p_2 z))`.
pub fn check_subdivision_identity(z_cap: usize, bound: usize) -> Result<IdentityCheck> {
    let lhs = v_mu_series(&[1, 2, 3], z_cap, bound)?;
    let v13 = v_mu_series(&[1, 3], z_cap, bound)?;
    let p2z = term(int(1), [0, 1, 0], 0, 1, z_cap);
    let inv = BivariateSeries::one_minus_pow(&p2z, &int(-1))?;
    let cycles = &term(int(1), [0, 1, 0], 2, 1, z_cap) * &inv;
    let arg = &inv * &term(int(1), [0; 3], 0, 1, z_cap);
    let rhs = &cycles + &(&inv * &v13.compose_z(&arg)?);
    Ok(IdentityCheck::compare("subdivision of degree-2 vertices", &lhs, &rhs))
}

/// `V_{1,3} = w z^{-1} T^2 + 4 p_1 p_3 w^2 z^2 / (1 - 4 p_1 p_3 z^2)
/// + (1 - 4 p_1 p_3 z^2)^{-1} V_3(z / sqrt(1 - 4 p_1 p_3 z^2))`.
pub fn check_tree_identity(z_cap: usize, bound: usize) -> Result<IdentityCheck> {
    let lhs = v_mu_series(&[1, 3], z_cap, bound)?;
    let v3 = v_mu_series(&[3], z_cap, bound)?;
    let t = tree_series_t(z_cap + 1);
    let trees = (&term(int(1), [0; 3], 1, 0, z_cap + 1) * &(&t * &t)).shift_down()?;
    let x = term(int(4), [1, 0, 1], 0, 2, z_cap);
    let inv = BivariateSeries::one_minus_pow(&x, &int(-1))?;
    let one_cycle = &term(int(4), [1, 0, 1], 2, 2, z_cap) * &inv;
    let arg = &BivariateSeries::one_minus_pow(&x, &rat(-1, 2))? * &term(int(1), [0; 3], 0, 1, z_cap);
    let rhs = &(&trees + &one_cycle) + &(&inv * &v3.compose_z(&arg)?);
    Ok(IdentityCheck::compare("trees, one cycle, and subdivided cubic maps", &lhs, &rhs))
}

/// Both map series identities through `z^{z_cap}`.
pub fn check_cubeconst(z_cap: usize, bound: usize) -> Result<Vec<IdentityCheck>> {
    Ok(vec![check_subdivision_identity(z_cap, bound)?, check_tree_identity(z_cap, bound)?])
}

/// The four partials of `Ψ = ∫ V_{1,2,3} dz / 2z` at `p_1 = p_2 = 0` that
/// enter the first KP equation: `Ψ_{2,2}`, `Ψ_{3,1}`, `Ψ_{1,1}`, `Ψ_{1,1,1,1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaPartials {
    pub psi_22: BivariateSeries,
    pub psi_31: BivariateSeries,
    pub psi_11: BivariateSeries,
    pub psi_1111: BivariateSeries,
}

impl ThetaPartials {
    /// The partials written in terms of `F(n, g)`, through `z^{z_cap}`.
    pub fn from_table(table: &TriangulationTable, z_cap: usize) -> Self {
        let mut s = ThetaPartials {
            psi_22: term(rat(1, 2), [0; 3], 2, 2, z_cap),
            psi_31: term(int(1), [0; 3], 2, 2, z_cap),
            psi_11: &term(int(1), [0; 3], 1, 1, z_cap) + &term(int(4), [0, 0, 2], 2, 4, z_cap),
            psi_1111: BivariateSeries::zero(z_cap),
        };
        for (n, g) in table.values.keys().copied() {
            let f = table.rescaled(n, g);
            let w = (n + 2 - 2 * g) as u32;
            let p = |k: i64| [0, 0, (2 * n + k) as u32];
            let z = |k: i64| (3 * n + k) as usize;
            s.psi_1111.add_term(
                z(8),
                [0, 0, (2 * n + 4) as u32, w],
                int(8 * (3 * n + 2) * (3 * n + 4) * (3 * n + 6)) * &f,
            );
            if n < 1 {
                continue;
            }
            let [a, b, c] = p(0);
            s.psi_22.add_term(z(2), [a, b, c, w], rat(3 * n + 1, 2) * &f);
            s.psi_31.add_term(z(2), [a, b, c, w], int(2 * n + 1) * &f);
            let [a, b, c] = p(2);
            s.psi_11.add_term(z(4), [a, b, c, w], int(2 * (3 * n + 2)) * &f);
        }
        s
    }

    /// The same partials computed from enumerated rooted maps, through
    /// `z^{z_cap}`.
    pub fn from_maps(z_cap: usize, bound: usize) -> Result<Self> {
        let with_cubic = |extra: &[usize]| -> Vec<Partition> {
            (0..)
                .map(|a| {
                    let mut parts = vec![3; a];
                    parts.extend_from_slice(extra);
                    Partition::from_unsorted(parts).expect("parts are positive")
                })
                .take_while(|alpha| alpha.weight() <= 2 * z_cap)
                .filter(|alpha| alpha.weight() % 2 == 0)
                .collect()
        };
        let psi = |extra: &[usize], vars: &[usize]| -> Result<BivariateSeries> {
            let v = map_series(&with_cubic(extra), z_cap, bound)?;
            let mut psi = BivariateSeries::zero(z_cap);
            for (z, e, c) in v.terms() {
                psi.add_term(z, *e, c / int(2 * z as i64));
            }
            Ok(psi.partial_multi(vars).kill(&[1, 2]))
        };
        Ok(ThetaPartials {
            psi_22: psi(&[2, 2], &[2, 2])?,
            psi_31: psi(&[1], &[3, 1])?,
            psi_11: psi(&[1, 1], &[1, 1])?,
            psi_1111: psi(&[1, 1, 1, 1], &[1, 1, 1, 1])?,
        })
    }

    pub fn truncate(&self, z_cap: usize) -> Self {
        ThetaPartials {
            psi_22: self.psi_22.truncate(z_cap),
            psi_31: self.psi_31.truncate(z_cap),
            psi_11: self.psi_11.truncate(z_cap),
            psi_1111: self.psi_1111.truncate(z_cap),
        }
    }

    /// `Ψ_{2,2} - Ψ_{3,1} + Ψ_{1,1,1,1}/12 + Ψ_{1,1}^2/2`.
    pub fn kp_left_side(&self) -> BivariateSeries {
        let a = &self.psi_22 - &self.psi_31;
        let b = self.psi_1111.scale(&rat(1, 12));
        let c = (&self.psi_11 * &self.psi_11).scale(&rat(1, 2));
        &(&a + &b) + &c
    }
}

/// A nonzero coefficient of the first KP equation at `p_3^{2n} w^{n+2-2g} z^{3n+2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KpFailure {
    pub n: i64,
    pub g: i64,
    pub value: Rational,
}

/// Substitutes the tabulated partials into the first KP equation and returns
/// every `(n, g)` with `n ≤ n_max` whose coefficient does not vanish, along
/// with any stray term of another shape.
pub fn kp_triangulation_partials(n_max: usize) -> Result<Vec<KpFailure>> {
    let table = f_table(n_max);
    let z_cap = 3 * n_max + 2;
    let lhs = ThetaPartials::from_table(&table, z_cap).kp_left_side();
    let mut failures = Vec::new();
    for (z, e, c) in lhs.terms() {
        let n = (z as i64 - 2) / 3;
        let g2 = n + 2 - e[3] as i64;
        let shaped = e[..2] == [0, 0] && e[2] as i64 == 2 * n && z as i64 == 3 * n + 2 && g2 % 2 == 0;
        failures.push(KpFailure { n, g: if shaped { g2 / 2 } else { -1 }, value: c.clone() });
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_and_small_values() {
        let t = f_table(3);
        assert_eq!(t.f(-1, 0), rat(1, 2));
        assert_eq!(t.f(0, 0), int(2));
        assert_eq!(t.f(1, 1), int(5));
        assert_eq!(t.count(1, 1).unwrap(), BigInt::from(1));
        assert_eq!(t.count(1, 0).unwrap(), BigInt::from(4));
        assert_eq!(t.count(2, 0).unwrap(), BigInt::from(32));
        assert_eq!(t.count(2, 1).unwrap(), BigInt::from(28));
        assert_eq!(t.rescaled(0, 0), int(1));
        assert_eq!(t.f(2, 2), int(0));
        assert_eq!(t.f(-2, 0), int(0));
        assert!(t.count(0, 0).is_err());
    }

    #[test]
    fn zero_seed_agrees_with_recurrence() {
        // f(0,0) read off the recurrence at n = 0: 8 f(-1,0)^2.
        assert_eq!(int(8) * rat(1, 2) * rat(1, 2), f_table(1).f(0, 0));
    }

    #[test]
    fn index_set() {
        assert!(in_index_set(-1, 0));
        assert!(!in_index_set(-1, 1));
        assert!(in_index_set(1, 1));
        assert!(!in_index_set(2, 2));
        assert!(in_index_set(3, 2));
    }

    #[test]
    fn planar_values() {
        let expected = [1, 4, 32, 336, 4096, 54912];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(planar_closed_form(n), BigInt::from(*e));
        }
        let t = f_table(10);
        for n in 1..=10 {
            assert_eq!(t.count(n, 0).unwrap(), planar_closed_form(n as usize));
        }
    }

    #[test]
    fn enumeration_matches_recurrence_for_one_face_pair() {
        let by_genus = triangulations_by_enumeration(1, 8).unwrap();
        assert_eq!(by_genus[&0], BigInt::from(4));
        assert_eq!(by_genus[&1], BigInt::from(1));
    }

    #[test]
    fn characters_match_recurrence() {
        let t = f_table(3);
        for n in 1..=3 {
            for g in 0..=(n + 1) / 2 {
                let c = triangulation_count_by_characters(n as usize, g as usize).unwrap();
                assert_eq!(c, t.count(n, g).unwrap(), "n={n} g={g}");
            }
        }
    }

    #[test]
    fn tree_series_is_catalan() {
        let t = tree_series_t(9);
        let catalan = [1, 1, 2, 5, 14];
        for (k, c) in catalan.iter().enumerate() {
            let e = [k as u32 + 1, 0, k as u32, 0];
            assert_eq!(t.coefficient(e, 2 * k + 1), int(*c));
        }
        assert_eq!(t.terms().count(), 5);
    }

    #[test]
    fn small_map_series_terms() {
        let v2 = v_mu_series(&[2], 4, 8).unwrap();
        assert_eq!(v2.coefficient([0, 1, 0, 2], 1), int(1));
        let v1 = v_mu_series(&[1], 2, 8).unwrap();
        assert_eq!(v1.coefficient([2, 0, 0, 1], 1), int(1));
        let v3 = v_mu_series(&[3], 3, 8).unwrap();
        assert_eq!(v3.coefficient([0, 0, 2, 3], 3), int(4));
        assert_eq!(v3.coefficient([0, 0, 2, 1], 3), int(1));
        assert!(v_mu_series(&[4], 3, 8).is_err());
    }

    #[test]
    fn cycles_only_case() {
        let check = check_subdivision_identity(4, 8).unwrap();
        assert!(check.holds(), "{check:?}");
        let v2 = v_mu_series(&[2], 5, 10).unwrap();
        let p2z = term(int(1), [0, 1, 0], 0, 1, 5);
        let expected = &term(int(1), [0, 1, 0], 2, 1, 5) * &BivariateSeries::one_minus_pow(&p2z, &int(-1)).unwrap();
        assert_eq!(v2, expected);
    }

    #[test]
    fn tree_identity_small() {
        let check = check_tree_identity(4, 8).unwrap();
        assert!(check.holds(), "{check:?}");
    }

    #[test]
    fn displayed_partials_match_maps() {
        let z_cap = 5;
        let maps = ThetaPartials::from_maps(z_cap, 10).unwrap();
        let table = ThetaPartials::from_table(&f_table(2), z_cap);
        assert_eq!(maps, table);
    }

    #[test]
    fn kp_coefficients_vanish() {
        assert!(kp_triangulation_partials(6).unwrap().is_empty());
    }

    #[test]
    fn seed_terms_cancel() {
        let s = ThetaPartials::from_table(&f_table(1), 2);
        assert!(s.kp_left_side().is_zero());
        assert_eq!(s.psi_22.coefficient([0, 0, 0, 2], 2), rat(1, 2));
    }
}
