//! Truncated series in `z` whose coefficients are polynomials in
//! `p_1, p_2, p_3` and `w`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{binomial_rational, format_rational, Rational};

/// Exponents of `p_1, p_2, p_3, w`.
pub type Exponents = [u32; 4];

/// A series `Σ c · p_1^a p_2^b p_3^c w^e z^n` kept for `n ≤ z_cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    terms: BTreeMap<(usize, Exponents), Rational>,
    z_cap: usize,
}

impl BivariateSeries {
    pub fn zero(z_cap: usize) -> Self {
        BivariateSeries { terms: BTreeMap::new(), z_cap }
    }

    pub fn one(z_cap: usize) -> Self {
        Self::monomial(Rational::one(), [0; 4], 0, z_cap)
    }

    pub fn monomial(c: Rational, exps: Exponents, z: usize, z_cap: usize) -> Self {
        let mut s = Self::zero(z_cap);
        s.add_term(z, exps, c);
        s
    }

    pub fn z_cap(&self) -> usize {
        self.z_cap
    }

    pub fn add_term(&mut self, z: usize, exps: Exponents, c: Rational) {
        if z > self.z_cap || c.is_zero() {
            return;
        }
        let entry = self.terms.entry((z, exps)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(z, exps));
        }
    }

    pub fn coefficient(&self, exps: Exponents, z: usize) -> Rational {
        self.terms.get(&(z, exps)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms ordered by `z`-degree, then exponents.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Exponents, &Rational)> {
        self.terms.iter().map(|((z, e), c)| (*z, e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn truncate(&self, z_cap: usize) -> Self {
        let z_cap = z_cap.min(self.z_cap);
        let terms = self.terms.iter().filter(|((z, _), _)| *z <= z_cap).map(|(k, v)| (*k, v.clone())).collect();
        BivariateSeries { terms, z_cap }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.z_cap);
        for ((z, e), v) in &self.terms {
            out.add_term(*z, *e, v * c);
        }
        out
    }

    /// Multiplies by `z^k`, keeping the cap.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut out = Self::zero(self.z_cap);
        for ((z, e), v) in &self.terms {
            out.add_term(z + k, *e, v.clone());
        }
        out
    }

    /// Divides by `z`; the cap drops by one.
    pub fn shift_down(&self) -> Result<Self> {
        let mut out = Self::zero(self.z_cap.saturating_sub(1));
        for ((z, e), v) in &self.terms {
            if *z == 0 {
                return Err(Error::InvalidArgument("series has a z^0 term and is not divisible by z".into()));
            }
            out.add_term(z - 1, *e, v.clone());
        }
        Ok(out)
    }

    /// Sets `p_i = 0` for the listed `i` in `1..=3`.
    pub fn kill(&self, vars: &[usize]) -> Self {
        let mut out = Self::zero(self.z_cap);
        for ((z, e), v) in &self.terms {
            if vars.iter().all(|&i| e[i - 1] == 0) {
                out.add_term(*z, *e, v.clone());
            }
        }
        out
    }

    /// `∂/∂p_i` for `i` in `1..=3`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.z_cap);
        for ((z, e), v) in &self.terms {
            if e[i - 1] > 0 {
                let mut f = *e;
                f[i - 1] -= 1;
                out.add_term(*z, f, v * Rational::from_integer(e[i - 1].into()));
            }
        }
        out
    }

    /// Successive partials `∂/∂p_{i_1} ∂/∂p_{i_2} ⋯`.
    pub fn partial_multi(&self, vars: &[usize]) -> Self {
        vars.iter().fold(self.clone(), |acc, &i| acc.partial(i))
    }

    fn has_constant_term(&self) -> bool {
        self.terms.keys().any(|(z, _)| *z == 0)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.z_cap), |acc, _| &acc * self)
    }

    /// `(1 - x)^s` as a binomial series; `x` must have no `z^0` term.
    pub fn one_minus_pow(x: &Self, s: &Rational) -> Result<Self> {
        if x.has_constant_term() {
            return Err(Error::InvalidArgument("binomial series needs a z^0-free argument".into()));
        }
        let neg = -x;
        let mut acc = Self::zero(x.z_cap);
        let mut power = Self::one(x.z_cap);
        for k in 0..=x.z_cap {
            acc = &acc + &power.scale(&binomial_rational(s, k));
            power = &power * &neg;
            if power.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    /// Substitutes `z ↦ arg`, where `arg` has no `z^0` term.
    pub fn compose_z(&self, arg: &Self) -> Result<Self> {
        if arg.has_constant_term() {
            return Err(Error::InvalidArgument("substituted series has a z^0 term".into()));
        }
        let cap = self.z_cap.min(arg.z_cap);
        let mut by_degree: BTreeMap<usize, Self> = BTreeMap::new();
        for ((z, e), v) in &self.terms {
            by_degree.entry(*z).or_insert_with(|| Self::zero(cap)).add_term(0, *e, v.clone());
        }
        let mut out = Self::zero(cap);
        let mut power = Self::one(cap);
        let mut k = 0;
        for (z, coefficient) in by_degree {
            while k < z {
                power = &power * arg;
                k += 1;
            }
            out = &out + &(&coefficient * &power);
        }
        Ok(out)
    }

    /// The lowest-degree nonzero term, if any.
    pub fn leading_term(&self) -> Option<(usize, Exponents, Rational)> {
        self.terms.iter().next().map(|((z, e), v)| (*z, *e, v.clone()))
    }
}

impl Add for &BivariateSeries {
    type Output = BivariateSeries;

    fn add(self, rhs: &BivariateSeries) -> BivariateSeries {
        let mut out = self.truncate(rhs.z_cap);
        for ((z, e), v) in &rhs.terms {
            out.add_term(*z, *e, v.clone());
        }
        out
    }
}

impl Neg for &BivariateSeries {
    type Output = BivariateSeries;

    fn neg(self) -> BivariateSeries {
        self.scale(&-Rational::one())
    }
}

impl Sub for &BivariateSeries {
    type Output = BivariateSeries;

    fn sub(self, rhs: &BivariateSeries) -> BivariateSeries {
        self + &(-rhs)
    }
}

impl Mul for &BivariateSeries {
    type Output = BivariateSeries;

    fn mul(self, rhs: &BivariateSeries) -> BivariateSeries {
        let cap = self.z_cap.min(rhs.z_cap);
        let mut out = BivariateSeries::zero(cap);
        for ((z1, e1), v1) in &self.terms {
            if *z1 > cap {
                break;
            }
            for ((z2, e2), v2) in &rhs.terms {
                if z1 + z2 > cap {
                    break;
                }
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                out.add_term(z1 + z2, e, v1 * v2);
            }
        }
        out
    }
}

impl fmt::Display for BivariateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((z, e), v)| format_term(v, e, *z)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `c * p1^a * p2^b * p3^c * w^e * z^n`, omitting trivial factors.
pub fn format_term(c: &Rational, e: &Exponents, z: usize) -> String {
    let mut s = format_rational(c);
    for (name, k) in ["p1", "p2", "p3", "w"].iter().zip(e) {
        match k {
            0 => {}
            1 => s.push_str(&format!(" * {name}")),
            _ => s.push_str(&format!(" * {name}^{k}")),
        }
    }
    match z {
        0 => {}
        1 => s.push_str(" * z"),
        _ => s.push_str(&format!(" * z^{z}")),
    }
    s
}
